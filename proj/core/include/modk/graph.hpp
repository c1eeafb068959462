#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace modk {

// A directed edge u -> v of an orientation. tail != head always.
struct Arc {
    int tail = 0;
    int head = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Simple undirected graph on vertices 0..n-1. Edges are stored
// normalized (u < v), deduplicated and sorted; adjacency lists are kept
// consistent with the edge set. Immutable after construction.
class Graph {
public:
    Graph() = default;
    // Throws std::invalid_argument on self-loops or out-of-range endpoints.
    // Duplicate edges (in either direction) are merged.
    Graph(int n, std::span<const std::pair<int, int>> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

int max_degree(const Graph& g);

// A direction for every edge of a graph: exactly one of (u,v),(v,u) per
// edge. Built through orient()/reverse(), which enforce the invariant.
struct Orientation {
    int vertex_count = 0;
    std::vector<Arc> arcs;
};

// Default orientation: every edge directed from lower to higher id, in
// edge-set order. Deterministic so runs are reproducible.
Orientation orient(const Graph& g);
// Explicit orientation; throws if the list misses an edge, covers one
// twice, or contains a non-edge.
Orientation orient(const Graph& g, std::span<const Arc> arcs);
Orientation reverse(const Orientation& o);

// A union A with its reversal: the doubled arc multiset. Only oracle
// routines accept multisets; Orientation keeps one arc per edge.
std::vector<Arc> doubled_arcs(const Orientation& o);

struct ContractionResult {
    Graph graph;            // G_S
    int supervertex = 0;    // id of v_S in G_S (always the last id)
    std::vector<int> vertex_map; // original id -> G_S id; members of S map to supervertex
};

// Collapse the independent set s into one supervertex. Surviving
// vertices keep their relative order and are renumbered from 0; parallel
// edges arising from shared neighbors are merged. Throws if s is empty
// or not independent.
ContractionResult contract_independent_set(const Graph& g, std::span<const int> s);

struct InducedResult {
    Graph graph;
    std::vector<int> vertex_map; // original id -> new id, -1 if dropped
    std::vector<int> kept;       // new id -> original id
};

// Subgraph induced by `keep`, vertices renumbered in ascending original order.
InducedResult induced_subgraph(const Graph& g, std::span<const int> keep);

// DIMACS .col: "c" comments, one "p edge n m" line, "e u v" lines,
// 1-indexed. Duplicate and reversed-duplicate edges merge; self-loops,
// out-of-range endpoints and missing/duplicate "p" lines throw.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);
std::string render_dimacs(const Graph& g);

// Orientation override file: one line "a u v" per arc, 1-indexed.
Orientation parse_orientation(std::istream& in, const Graph& g);
Orientation parse_orientation(const std::string& text, const Graph& g);

} // namespace modk
