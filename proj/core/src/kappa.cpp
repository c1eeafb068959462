#include "modk/kappa.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace modk {

WVector::WVector(int modulus, std::vector<int> residues) : k(modulus), w(std::move(residues)) {
    if (k < 1) throw std::invalid_argument("w-vector: modulus must be >= 1");
    for (int r : w)
        if (r < 0 || r >= k)
            throw std::invalid_argument("w-vector: residue " + std::to_string(r) + " outside [0," +
                                        std::to_string(k) + ")");
}

ResidueWindows::ResidueWindows(const ArcSchedule& schedule, const WVector& w, const Graph& g)
    : k_(w.k), target_(w.w) {
    if (w.n() != g.vertex_count())
        throw std::invalid_argument("residue windows: w length does not match vertex count");
    effects_.resize(static_cast<std::size_t>(g.vertex_count()));
    for (const ScheduledArc& sa : schedule.arcs) {
        effects_[static_cast<std::size_t>(sa.arc.tail)].push_back(+1);
        effects_[static_cast<std::size_t>(sa.arc.head)].push_back(-1);
    }
    plus_prefix_.resize(effects_.size());
    for (std::size_t v = 0; v < effects_.size(); ++v) {
        auto& prefix = plus_prefix_[v];
        prefix.assign(effects_[v].size() + 1, 0);
        for (std::size_t t = 0; t < effects_[v].size(); ++t)
            prefix[t + 1] = prefix[t] + (effects_[v][t] > 0 ? 1 : 0);
    }
}

bool ResidueWindows::contains(int v, int t, int residue) const {
    const auto vi = static_cast<std::size_t>(v);
    const int d = static_cast<int>(effects_[vi].size());
    if (t < 0 || t > d) throw std::invalid_argument("residue windows: position out of range");

    // Reachable prefix residues form the interval [-minus, +plus] mod k.
    const int plus = plus_prefix_[vi][static_cast<std::size_t>(t)];
    const int minus = t - plus;
    if (t + 1 < k_) {
        const int offset = (residue + minus) % k_;
        if (offset > t) return false;
    }
    // Completable residues: w(v) - (any suffix sum), i.e. [w - plus_rem, w + minus_rem] mod k.
    const int total_plus = plus_prefix_[vi][static_cast<std::size_t>(d)];
    const int plus_rem = total_plus - plus;
    if (d - t + 1 < k_) {
        const int offset = (((residue - target_[vi] + plus_rem) % k_) + k_) % k_;
        if (offset > d - t) return false;
    }
    return true;
}

std::vector<int> ResidueWindows::window(int v, int t) const {
    std::vector<int> out;
    for (int r = 0; r < k_; ++r)
        if (contains(v, t, r)) out.push_back(r);
    return out;
}

namespace {

using Key = std::vector<int>;
using Table = std::map<Key, BigInt>;

} // namespace

KappaResult kappa_dp(const Graph& g, const Orientation& o, const PathDecomposition& pd,
                     const WVector& w, const KappaOptions& options) {
    validate(g, pd);
    if (w.n() != g.vertex_count())
        throw std::invalid_argument("kappa_dp: w length does not match vertex count");
    if (o.vertex_count != g.vertex_count() ||
        o.arcs.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("kappa_dp: orientation does not match graph");

    const NiceEventSequence events = make_nice(pd);
    ArcSchedule schedule = arc_schedule(o, pd);
    if (options.tie_break == ArcTieBreak::ReverseTailHead) {
        auto it = schedule.arcs.begin();
        while (it != schedule.arcs.end()) {
            auto jt = it;
            while (jt != schedule.arcs.end() && jt->bag == it->bag) ++jt;
            std::reverse(it, jt);
            it = jt;
        }
    }
    const ResidueWindows windows(schedule, w, g);

    const int k = w.k;
    KappaStats stats;
    Table table;
    table[{}] = 1;
    stats.max_table_size = 1;

    std::vector<int> live;
    std::vector<int> arcs_seen(static_cast<std::size_t>(g.vertex_count()), 0);
    const auto record = [&] { stats.max_table_size = std::max(stats.max_table_size, table.size()); };

    std::size_t ev_i = 0, arc_i = 0;
    for (int bag = 0; bag <= events.bag_count; ++bag) {
        for (; ev_i < events.events.size() && events.events[ev_i].bag == bag; ++ev_i) {
            const NiceEvent& ev = events.events[ev_i];
            const int v = ev.vertex;
            const auto it = std::lower_bound(live.begin(), live.end(), v);
            const auto idx = static_cast<std::size_t>(it - live.begin());
            Table next;
            auto hint = next.end();
            if (ev.kind == EventKind::Introduce) {
                // No subset of v's incident arcs can reach w(v): kappa is 0.
                if (options.use_windows && !windows.contains(v, 0, 0)) return {BigInt(0), stats};
                live.insert(it, v);
                for (auto& [key, val] : table) {
                    Key nk;
                    nk.reserve(key.size() + 1);
                    nk.insert(nk.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(idx));
                    nk.push_back(0);
                    nk.insert(nk.end(), key.begin() + static_cast<std::ptrdiff_t>(idx), key.end());
                    hint = next.emplace_hint(hint, std::move(nk), std::move(val));
                }
            } else {
                live.erase(it);
                const int target = w.w[static_cast<std::size_t>(v)] % k;
                for (auto& [key, val] : table) {
                    if (key[idx] != target) continue;
                    Key nk;
                    nk.reserve(key.size() - 1);
                    nk.insert(nk.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(idx));
                    nk.insert(nk.end(), key.begin() + static_cast<std::ptrdiff_t>(idx) + 1, key.end());
                    hint = next.emplace_hint(hint, std::move(nk), std::move(val));
                }
            }
            table = std::move(next);
            record();
            if (table.empty()) return {BigInt(0), stats};
        }

        for (; arc_i < schedule.arcs.size() && schedule.arcs[arc_i].bag == bag; ++arc_i) {
            const Arc a = schedule.arcs[arc_i].arc;
            const int tu = arcs_seen[static_cast<std::size_t>(a.tail)] + 1;
            const int tv = arcs_seen[static_cast<std::size_t>(a.head)] + 1;
            const auto pu = static_cast<std::size_t>(
                std::lower_bound(live.begin(), live.end(), a.tail) - live.begin());
            const auto pv = static_cast<std::size_t>(
                std::lower_bound(live.begin(), live.end(), a.head) - live.begin());

            // s_new(d) = s_old(d) - s_old(d - a): either the arc is skipped or
            // it is taken, flipping parity and shifting both endpoint residues.
            Table next;
            for (auto& [key, val] : table) {
                const bool skip_ok = !options.use_windows ||
                                     (windows.contains(a.tail, tu, key[pu]) &&
                                      windows.contains(a.head, tv, key[pv]));
                if (skip_ok) {
                    auto [slot, inserted] = next.try_emplace(key, val);
                    if (!inserted) slot->second += val;
                }
                Key taken = key;
                taken[pu] = taken[pu] + 1 == k ? 0 : taken[pu] + 1;
                taken[pv] = taken[pv] == 0 ? k - 1 : taken[pv] - 1;
                const bool take_ok = !options.use_windows ||
                                     (windows.contains(a.tail, tu, taken[pu]) &&
                                      windows.contains(a.head, tv, taken[pv]));
                if (take_ok) {
                    auto [slot, inserted] = next.try_emplace(std::move(taken), BigInt(-val));
                    if (!inserted) slot->second -= val;
                }
            }
            for (auto zit = next.begin(); zit != next.end();)
                zit = (zit->second == 0) ? next.erase(zit) : std::next(zit);
            table = std::move(next);
            ++arcs_seen[static_cast<std::size_t>(a.tail)];
            ++arcs_seen[static_cast<std::size_t>(a.head)];
            ++stats.arcs_processed;
            record();
            if (table.empty()) return {BigInt(0), stats};
        }
    }

    // Everything forgotten: the empty key carries kappa.
    BigInt value = 0;
    if (const auto it = table.find(Key{}); it != table.end()) value = it->second;
    return {value, stats};
}

BigInt max_table_bound(const Graph& g, const PathDecomposition& pd) {
    const int width = validate(g, pd);
    const int base = max_degree(g) / 2 + 1;
    BigInt bound = 1;
    for (int i = 0; i < width + 1; ++i) bound *= base;
    return bound;
}

} // namespace modk
