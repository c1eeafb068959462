#pragma once

#include "modk/graph.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace modk {

// Ordered bag sequence. Bags are kept sorted ascending. A decomposition
// is valid for a graph when every vertex occupies a contiguous nonempty
// interval of bags and every edge has both endpoints in some bag.
struct PathDecomposition {
    std::vector<std::vector<int>> bags;

    PathDecomposition() = default;
    explicit PathDecomposition(std::vector<std::vector<int>> b);

    int bag_count() const { return static_cast<int>(bags.size()); }
    // max bag size - 1; -1 for the empty decomposition.
    int width() const;
};

// Checks all invariants against g and returns the width. Throws
// std::invalid_argument naming the violation (missing vertex,
// non-contiguous interval, uncovered edge, out-of-range bag member).
int validate(const Graph& g, const PathDecomposition& pd);

enum class EventKind { Introduce, Forget };

struct NiceEvent {
    EventKind kind;
    int vertex;
    int bag; // originating bag index (0-based); closing forgets carry bag_count
};

// Single-vertex-delta refinement of a decomposition. Between consecutive
// bags forgets come before introduces; same-kind events are ordered by
// ascending vertex id.
struct NiceEventSequence {
    std::vector<NiceEvent> events;
    int bag_count = 0;
};

NiceEventSequence make_nice(const PathDecomposition& pd);

// Heuristic decomposition from a vertex order: bag i holds order[i] plus
// every earlier vertex that still has a neighbor at position >= i. Always
// valid; no optimality claim.
PathDecomposition boundary_decomposition(const Graph& g, std::span<const int> order);

// BFS order from vertex 0, components visited in ascending id order,
// neighbors expanded ascending. A decent default for banded graphs.
std::vector<int> bfs_order(const Graph& g);

struct ScheduledArc {
    Arc arc;
    int bag = 0; // r(a): smallest bag index whose bag contains both endpoints
};

// Arcs ascending by r, ties broken by ascending (tail, head).
struct ArcSchedule {
    std::vector<ScheduledArc> arcs;
};

ArcSchedule arc_schedule(const Orientation& o, const PathDecomposition& pd);

// Decomposition for G_S: S-members removed from every bag, survivors
// remapped, supervertex added to every bag. Width grows by at most one.
PathDecomposition derive_contracted_pd(const PathDecomposition& pd, std::span<const int> s,
                                       const ContractionResult& cr);

// Decomposition for G[keep]: bags intersected with keep and remapped;
// empty bags dropped. Width never grows.
PathDecomposition derive_induced_pd(const PathDecomposition& pd, std::span<const int> keep);

// Decomposition file: line "pd <p> <n>", then p lines "b <index> v1 v2 ..."
// with 1-indexed vertices, bags in path order. "c" comments allowed.
PathDecomposition parse_pd(std::istream& in);
PathDecomposition parse_pd(const std::string& text);
std::string render_pd(const PathDecomposition& pd, int vertex_count);

} // namespace modk
