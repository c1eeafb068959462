#include "modk/oracles.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace modk {

namespace {

void check_arc_guard(std::size_t m, const OracleGuards& guards) {
    if (m > guards.max_arcs)
        throw std::runtime_error("oracle guard exceeded: " + std::to_string(m) + " arcs > " +
                                 std::to_string(guards.max_arcs));
}

double pow_double(int k, int n) { return std::pow(static_cast<double>(k), n); }

void check_endpoints(std::span<const Arc> arcs, int n) {
    for (const Arc& a : arcs)
        if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n || a.tail == a.head)
            throw std::invalid_argument("oracle: arc endpoints out of range");
}

// Walks all arc subsets in Gray-code order, keeping the residue vector,
// subset size, and the number of vertices off their target incremental.
template <typename Visit>
void for_each_subset(std::span<const Arc> arcs, int k, std::span<const int> target,
                     std::span<int> residue, Visit&& visit) {
    const std::size_t m = arcs.size();
    std::vector<char> in_subset(m, 0);
    int mismatched = 0;
    for (std::size_t v = 0; v < residue.size(); ++v)
        if (target[v] != 0) ++mismatched;
    int size = 0;
    visit(size, mismatched, residue);
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t i = 1; i < total; ++i) {
        const auto j = static_cast<std::size_t>(std::countr_zero(i));
        const Arc a = arcs[j];
        const int dir = in_subset[j] ? -1 : +1; // add or remove arc j
        in_subset[j] = !in_subset[j];
        size += dir;
        auto bump = [&](int v, int delta) {
            auto vi = static_cast<std::size_t>(v);
            if (residue[vi] == target[vi]) ++mismatched;
            residue[vi] = ((residue[vi] + delta) % k + k) % k;
            if (residue[vi] == target[vi]) --mismatched;
        };
        bump(a.tail, dir);
        bump(a.head, -dir);
        visit(size, mismatched, residue);
    }
}

} // namespace

BigInt brute_kappa(std::span<const Arc> arcs, const WVector& w, const OracleGuards& guards) {
    check_arc_guard(arcs.size(), guards);
    check_endpoints(arcs, w.n());
    std::vector<int> residue(static_cast<std::size_t>(w.n()), 0);
    BigInt kappa = 0;
    for_each_subset(arcs, w.k, w.w, residue, [&](int size, int mismatched, std::span<const int>) {
        if (mismatched == 0) kappa += (size % 2 == 0) ? 1 : -1;
    });
    return kappa;
}

BigInt brute_kappa(const Orientation& o, const WVector& w, const OracleGuards& guards) {
    return brute_kappa(std::span<const Arc>(o.arcs), w, guards);
}

BigInt count_colorings_brute(const Graph& g, int k, const OracleGuards& guards) {
    if (k < 1) throw std::invalid_argument("count_colorings_brute: k must be >= 1");
    const int n = g.vertex_count();
    if (pow_double(k, n) > guards.max_coloring_enum)
        throw std::runtime_error("oracle guard exceeded: k^n too large for coloring enumeration");
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    BigInt count = 0;
    for (;;) {
        bool proper = true;
        for (auto [u, v] : g.edges()) {
            if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                proper = false;
                break;
            }
        }
        if (proper) ++count;
        int pos = 0;
        while (pos < n && ++color[static_cast<std::size_t>(pos)] == k) color[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
    }
    return count;
}

ColorDpResult count_colorings_dp(const Graph& g, const PathDecomposition& pd, int k) {
    if (k < 1) throw std::invalid_argument("count_colorings_dp: k must be >= 1");
    validate(g, pd);
    const NiceEventSequence events = make_nice(pd);
    const ArcSchedule schedule = arc_schedule(orient(g), pd);

    using Key = std::vector<int>;
    std::map<Key, BigInt> table;
    table[{}] = 1;
    ColorDpResult res;
    res.max_table_size = 1;
    std::vector<int> live;
    const auto record = [&] { res.max_table_size = std::max(res.max_table_size, table.size()); };

    std::size_t ev_i = 0, arc_i = 0;
    for (int bag = 0; bag <= events.bag_count; ++bag) {
        for (; ev_i < events.events.size() && events.events[ev_i].bag == bag; ++ev_i) {
            const NiceEvent& ev = events.events[ev_i];
            const int v = ev.vertex;
            const auto it = std::lower_bound(live.begin(), live.end(), v);
            const auto idx = static_cast<std::size_t>(it - live.begin());
            std::map<Key, BigInt> next;
            if (ev.kind == EventKind::Introduce) {
                live.insert(it, v);
                for (const auto& [key, val] : table) {
                    for (int c = 0; c < k; ++c) {
                        Key nk = key;
                        nk.insert(nk.begin() + static_cast<std::ptrdiff_t>(idx), c);
                        next.emplace(std::move(nk), val);
                    }
                }
            } else {
                live.erase(it);
                for (const auto& [key, val] : table) {
                    Key nk = key;
                    nk.erase(nk.begin() + static_cast<std::ptrdiff_t>(idx));
                    auto [slot, inserted] = next.try_emplace(std::move(nk), val);
                    if (!inserted) slot->second += val;
                }
            }
            table = std::move(next);
            record();
        }
        for (; arc_i < schedule.arcs.size() && schedule.arcs[arc_i].bag == bag; ++arc_i) {
            const Arc a = schedule.arcs[arc_i].arc;
            const auto pu = static_cast<std::size_t>(
                std::lower_bound(live.begin(), live.end(), a.tail) - live.begin());
            const auto pv = static_cast<std::size_t>(
                std::lower_bound(live.begin(), live.end(), a.head) - live.begin());
            std::map<Key, BigInt> next;
            for (const auto& [key, val] : table)
                if (key[pu] != key[pv]) next.emplace(key, val);
            table = std::move(next);
            record();
        }
    }
    if (const auto it = table.find({}); it != table.end()) res.count = it->second;
    return res;
}

CharSumValue charsum_kappa(const Orientation& o, const WVector& w, const OracleGuards& guards) {
    const int n = w.n();
    const int k = w.k;
    if (o.vertex_count != n)
        throw std::invalid_argument("charsum_kappa: w length does not match vertex count");
    if (pow_double(k, n) > guards.max_charsum_enum)
        throw std::runtime_error("oracle guard exceeded: k^n too large for character sum");

    std::vector<std::complex<double>> omega(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / k;
        omega[static_cast<std::size_t>(j)] = {std::cos(angle), std::sin(angle)};
    }
    const auto omega_pow = [&](long long e) {
        return omega[static_cast<std::size_t>(((e % k) + k) % k)];
    };

    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::complex<double> total = 0.0;
    for (;;) {
        std::complex<double> term = 1.0;
        for (int v = 0; v < n; ++v)
            term *= omega_pow(-static_cast<long long>(w.w[static_cast<std::size_t>(v)]) *
                              color[static_cast<std::size_t>(v)]);
        for (const Arc& a : o.arcs)
            term *= 1.0 - omega_pow(color[static_cast<std::size_t>(a.tail)] -
                                    color[static_cast<std::size_t>(a.head)]);
        total += term;
        int pos = 0;
        while (pos < n && ++color[static_cast<std::size_t>(pos)] == k) color[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
    }
    total /= pow_double(k, n);
    return {total, std::abs(total.imag())};
}

BiSumCheck lemma6_check(const Orientation& o, int k, const OracleGuards& guards) {
    const int n = o.vertex_count;
    if (pow_double(k, n) > guards.max_charsum_enum)
        throw std::runtime_error("oracle guard exceeded: k^n too large for exhaustive w");
    const std::vector<Arc> doubled = doubled_arcs(o);
    check_arc_guard(doubled.size(), guards);

    BiSumCheck check;
    check.lhs = brute_kappa(doubled, WVector::zero(k, n), guards);
    check.rhs = 0;
    std::vector<int> wvec(static_cast<std::size_t>(n), 0);
    for (;;) {
        const BigInt kap = brute_kappa(std::span<const Arc>(o.arcs), WVector(k, wvec), guards);
        check.rhs += kap * kap;
        int pos = 0;
        while (pos < n && ++wvec[static_cast<std::size_t>(pos)] == k) wvec[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
    }
    check.ok = check.lhs == check.rhs;
    return check;
}

BoundCheck lemma78_check(const Orientation& o, const WVector& w, const OracleGuards& guards) {
    const int n = w.n();
    const int k = w.k;
    if (o.vertex_count != n)
        throw std::invalid_argument("lemma78_check: w length does not match vertex count");
    if (pow_double(k, n) > guards.max_charsum_enum)
        throw std::runtime_error("oracle guard exceeded: k^n too large for character sum");
    const std::vector<Arc> doubled = doubled_arcs(o);
    check_arc_guard(doubled.size(), guards);

    BoundCheck check;
    const BigInt kappa0_doubled = brute_kappa(doubled, WVector::zero(k, n), guards);
    const BigInt kappa_w = brute_kappa(std::span<const Arc>(o.arcs), w, guards);
    check.equality_lhs = abs(kappa0_doubled).convert_to<double>();
    check.bound_lhs = abs(kappa_w).convert_to<double>();

    // One sweep over colorings gives both sum |f|^2 and sum |f|.
    std::vector<std::complex<double>> omega(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / k;
        omega[static_cast<std::size_t>(j)] = {std::cos(angle), std::sin(angle)};
    }
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    double sum_sq = 0.0, sum_abs = 0.0;
    for (;;) {
        std::complex<double> f = 1.0;
        for (const Arc& a : o.arcs) {
            const int diff = ((color[static_cast<std::size_t>(a.tail)] -
                               color[static_cast<std::size_t>(a.head)]) % k + k) % k;
            f *= 1.0 - omega[static_cast<std::size_t>(diff)];
        }
        sum_sq += std::norm(f);
        sum_abs += std::abs(f);
        int pos = 0;
        while (pos < n && ++color[static_cast<std::size_t>(pos)] == k) color[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
    }
    const double kn = pow_double(k, n);
    check.equality_rhs = sum_sq / kn;
    check.bound_rhs = sum_abs / kn;
    check.equality_ok = std::abs(check.equality_lhs - check.equality_rhs) <= check.tolerance;
    check.bound_ok = check.bound_lhs <= check.bound_rhs + check.tolerance;
    return check;
}

std::size_t WEnumeration::nonzero_count() const {
    std::size_t c = 0;
    for (const auto& [w, kap] : kappa_by_attainable_w)
        if (kap != 0) ++c;
    return c;
}

std::vector<std::vector<int>> WEnumeration::nonzero_w() const {
    std::vector<std::vector<int>> out;
    for (const auto& [w, kap] : kappa_by_attainable_w)
        if (kap != 0) out.push_back(w);
    return out;
}

WEnumeration enumerate_nonzero_w(const Orientation& o, int k, const OracleGuards& guards) {
    if (k < 1) throw std::invalid_argument("enumerate_nonzero_w: k must be >= 1");
    const int n = o.vertex_count;
    check_arc_guard(o.arcs.size(), guards);
    if (pow_double(k, n) > guards.max_coloring_enum)
        throw std::runtime_error("oracle guard exceeded: k^n too large for w enumeration");

    WEnumeration e;
    std::vector<int> residue(static_cast<std::size_t>(n), 0);
    const std::vector<int> zero(static_cast<std::size_t>(n), 0);
    for_each_subset(std::span<const Arc>(o.arcs), k, zero, residue,
                    [&](int size, int, std::span<const int> sig) {
                        std::vector<int> key(sig.begin(), sig.end());
                        e.kappa_by_attainable_w[std::move(key)] += (size % 2 == 0) ? 1 : -1;
                    });
    return e;
}

} // namespace modk
