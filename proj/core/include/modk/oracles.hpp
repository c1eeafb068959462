#pragma once

#include "modk/graph.hpp"
#include "modk/kappa.hpp"
#include "modk/path_decomposition.hpp"

#include <complex>
#include <map>
#include <span>
#include <vector>

namespace modk {

// Enumeration ceilings. Exceeding one is an error, never silent truncation.
struct OracleGuards {
    std::size_t max_arcs = 25;          // 2^m subset enumerations
    double max_coloring_enum = 1e7;     // k^n proper-coloring enumeration
    double max_charsum_enum = 1e6;      // k^n character-sum enumeration
};

// kappa by direct subset enumeration. Accepts any arc multiset, in
// particular the doubled C = A + reversal(A).
BigInt brute_kappa(std::span<const Arc> arcs, const WVector& w, const OracleGuards& guards = {});
BigInt brute_kappa(const Orientation& o, const WVector& w, const OracleGuards& guards = {});

// Number of proper k-colorings by enumeration.
BigInt count_colorings_brute(const Graph& g, int k, const OracleGuards& guards = {});

struct ColorDpResult {
    BigInt count;
    std::size_t max_table_size = 0;
};

// The natural color-tracking DP over the same nice event stream — the
// baseline kappa_dp is measured against. Exact; table sizes up to k^|bag|.
ColorDpResult count_colorings_dp(const Graph& g, const PathDecomposition& pd, int k);

struct CharSumValue {
    std::complex<double> value;
    double imag_magnitude = 0.0; // |Im|, a residual estimate: ground truth is an integer
};

// kappa via the character sum over all colorings: (1/k^n) sum_c
// prod_v omega^{-w(v)c(v)} * prod_{uv} (1 - omega^{c(u)-c(v)}).
CharSumValue charsum_kappa(const Orientation& o, const WVector& w, const OracleGuards& guards = {});

struct BiSumCheck {
    BigInt lhs; // kappa_{k,0}(A + reversal)
    BigInt rhs; // sum over w of kappa_{k,w}(A)^2
    bool ok = false;
};

// The squared-sum identity, both sides by exact enumeration.
BiSumCheck lemma6_check(const Orientation& o, int k, const OracleGuards& guards = {});

struct BoundCheck {
    double equality_lhs = 0.0; // |kappa_{k,0}(C)|
    double equality_rhs = 0.0; // (1/k^n) sum_c |f_A(c)|^2
    bool equality_ok = false;
    double bound_lhs = 0.0;    // |kappa_{k,w}(A)|
    double bound_rhs = 0.0;    // (1/k^n) sum_c |f_A(c)|
    bool bound_ok = false;
    double tolerance = 1e-6;
};

// The |kappa| identities: equality through |f|^2 and the |f| upper bound.
BoundCheck lemma78_check(const Orientation& o, const WVector& w, const OracleGuards& guards = {});

struct WEnumeration {
    // every attainable w (a delta-signature of some arc subset) with its exact kappa
    std::map<std::vector<int>, BigInt> kappa_by_attainable_w;

    std::size_t attainable_count() const { return kappa_by_attainable_w.size(); }
    std::size_t nonzero_count() const;
    std::vector<std::vector<int>> nonzero_w() const;
};

// One pass over all arc subsets: attainable w set and kappa for each.
WEnumeration enumerate_nonzero_w(const Orientation& o, int k, const OracleGuards& guards = {});

} // namespace modk
