#pragma once

#include "modk/graph.hpp"
#include "modk/kappa.hpp"
#include "modk/path_decomposition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace modk {

struct DecisionConfig {
    int k = 1;                // colors
    std::uint64_t s = 1;      // promise bound on the number of proper k-colorings
    int p = 2;                // repetition multiplier; trials = p * s
    std::uint64_t seed = 0;
    int threads = 1;          // trial parallelism; results identical for any value

    void validate() const;    // throws std::invalid_argument
};

struct Trial {
    std::uint64_t index = 0;
    std::vector<int> w;
    BigInt kappa;
    std::size_t max_table_size = 0;
};

struct DecideResult {
    bool yes = false;
    std::vector<Trial> trials; // in trial order, ending at the first nonzero kappa
};

// Decide-k-Colorable: fix the default orientation, draw p*s residue
// vectors uniformly from the seeded per-trial streams, answer Yes iff
// some kappa is nonzero. Never Yes on a non-k-colorable graph; Yes with
// probability >= 1 - e^-p when the graph is k-colorable with at most s
// colorings.
DecideResult decide_k_colorable(const Graph& g, const PathDecomposition& pd,
                                const DecisionConfig& cfg);

using Coloring = std::vector<int>;

// True iff no edge is monochromatic.
bool verify_coloring(const Graph& g, const Coloring& c);

// Greedy color-class growth by self-reduction: starting from {anchor},
// add each vertex (ascending id) whose contraction still decides Yes.
// Decide runs on G_S with the derived decomposition.
std::vector<int> find_maximal_color_class(const Graph& g, const PathDecomposition& pd,
                                          const DecisionConfig& cfg, int anchor);

struct ExtractResult {
    bool success = false;
    Coloring coloring;
    std::string failure_reason;
};

// Witness extraction: peel one maximal color class per remaining color,
// anchored at the lowest remaining id, then verify. p < 0 selects the
// 2*n*k default. Succeeds with probability >= 1/2 at that default when
// the promise holds; a returned coloring is always verified proper.
ExtractResult extract_coloring(const Graph& g, const PathDecomposition& pd, int k,
                               std::uint64_t s, std::uint64_t seed, int p = -1,
                               int threads = 1);

} // namespace modk
