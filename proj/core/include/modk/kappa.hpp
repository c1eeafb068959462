#pragma once

#include "modk/graph.hpp"
#include "modk/path_decomposition.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace modk {

// Signed subgraph counts can reach 2^m; fixed-width overflow would be
// silent corruption, so all counts are arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// Residue target: one value in [k] = {0..k-1} per vertex.
struct WVector {
    int k = 1;
    std::vector<int> w;

    WVector() = default;
    WVector(int modulus, std::vector<int> residues);

    int n() const { return static_cast<int>(w.size()); }
    static WVector zero(int modulus, int n) { return WVector(modulus, std::vector<int>(static_cast<std::size_t>(n), 0)); }
};

// Residue windows per (vertex, number of its incident arcs processed).
// window(v, t) is the set of degree-difference residues reachable from
// the first t incident arcs of v that can still be completed to w(v) by
// the remaining ones. Its size never exceeds floor(deg(v)/2) + 1.
class ResidueWindows {
public:
    ResidueWindows(const ArcSchedule& schedule, const WVector& w, const Graph& g);

    bool contains(int v, int t, int residue) const;
    std::vector<int> window(int v, int t) const; // ascending residues
    int incident_arcs(int v) const { return static_cast<int>(effects_[static_cast<std::size_t>(v)].size()); }

private:
    int k_;
    std::vector<int> target_;
    // per vertex: +1 per outgoing / -1 per incoming incident arc, in schedule order
    std::vector<std::vector<signed char>> effects_;
    std::vector<std::vector<int>> plus_prefix_; // plus_prefix_[v][t] = outgoing among first t
};

struct KappaStats {
    std::size_t max_table_size = 0;
    std::size_t arcs_processed = 0;
};

struct KappaResult {
    BigInt value;
    KappaStats stats;
};

enum class ArcTieBreak {
    TailHead,        // the default schedule order
    ReverseTailHead, // same r-groups, reversed within each; for order-robustness checks
};

struct KappaOptions {
    bool use_windows = true; // disable to check that pruning never changes the value
    ArcTieBreak tie_break = ArcTieBreak::TailHead;
};

// kappa_{k,w}(A): number of even w-mod-k subgraphs of the orientation
// minus the number of odd ones, computed exactly by dynamic programming
// over the nice event stream of pd with arcs replayed at their r-bags.
// Throws on invalid pd or mismatched w.
KappaResult kappa_dp(const Graph& g, const Orientation& o, const PathDecomposition& pd,
                     const WVector& w, const KappaOptions& options = {});

// (floor(Delta/2) + 1)^(width+1): certified ceiling for state-table sizes
// observed by kappa_dp on this graph and decomposition.
BigInt max_table_bound(const Graph& g, const PathDecomposition& pd);

} // namespace modk
