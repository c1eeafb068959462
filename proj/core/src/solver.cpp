#include "modk/solver.hpp"

#include "modk/rng.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace modk {

void DecisionConfig::validate() const {
    if (k < 1) throw std::invalid_argument("decision config: k must be >= 1");
    if (s < 1) throw std::invalid_argument("decision config: s must be >= 1");
    if (p < 1) throw std::invalid_argument("decision config: p must be >= 1");
    if (threads < 1) throw std::invalid_argument("decision config: threads must be >= 1");
}

DecideResult decide_k_colorable(const Graph& g, const PathDecomposition& pd,
                                const DecisionConfig& cfg) {
    cfg.validate();
    modk::validate(g, pd);
    const auto p64 = static_cast<std::uint64_t>(cfg.p);
    if (cfg.s > ~std::uint64_t{0} / p64)
        throw std::invalid_argument("decision config: p * s overflows");
    const std::uint64_t total = p64 * cfg.s;

    const Orientation arcs = orient(g);
    const int n = g.vertex_count();

    DecideResult result;
    const auto run_trial = [&](std::uint64_t t) {
        Trial trial;
        trial.index = t;
        trial.w = sample_w(cfg.seed, t, n, cfg.k);
        const KappaResult kr = kappa_dp(g, arcs, pd, WVector(cfg.k, trial.w));
        trial.kappa = kr.value;
        trial.max_table_size = kr.stats.max_table_size;
        return trial;
    };

    // Trials are evaluated in fixed-size batches; the log is always the
    // sequential prefix ending at the first nonzero kappa, so any thread
    // count produces the identical result.
    const auto batch = static_cast<std::uint64_t>(cfg.threads);
    for (std::uint64_t start = 0; start < total; start += batch) {
        const std::uint64_t end = std::min(total, start + batch);
        std::vector<Trial> chunk(static_cast<std::size_t>(end - start));
        if (cfg.threads == 1) {
            chunk[0] = run_trial(start);
        } else {
            std::vector<std::thread> workers;
            std::vector<std::exception_ptr> errors(chunk.size());
            for (std::uint64_t t = start; t < end; ++t) {
                workers.emplace_back([&, t] {
                    const auto slot = static_cast<std::size_t>(t - start);
                    try {
                        chunk[slot] = run_trial(t);
                    } catch (...) {
                        errors[slot] = std::current_exception();
                    }
                });
            }
            for (auto& th : workers) th.join();
            for (const auto& err : errors)
                if (err) std::rethrow_exception(err);
        }
        for (auto& trial : chunk) {
            const bool hit = trial.kappa != 0;
            result.trials.push_back(std::move(trial));
            if (hit) {
                result.yes = true;
                return result;
            }
        }
    }
    return result;
}

bool verify_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.size()) != g.vertex_count())
        throw std::invalid_argument("verify_coloring: coloring length mismatch");
    for (auto [u, v] : g.edges())
        if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
    return true;
}

std::vector<int> find_maximal_color_class(const Graph& g, const PathDecomposition& pd,
                                          const DecisionConfig& cfg, int anchor) {
    cfg.validate();
    modk::validate(g, pd);
    if (anchor < 0 || anchor >= g.vertex_count())
        throw std::invalid_argument("find_maximal_color_class: anchor out of range");

    std::vector<int> cls = {anchor};
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (u == anchor) continue;
        const bool independent = std::none_of(cls.begin(), cls.end(),
                                              [&](int v) { return g.has_edge(u, v); });
        if (!independent) continue;
        std::vector<int> candidate = cls;
        candidate.insert(std::lower_bound(candidate.begin(), candidate.end(), u), u);
        const ContractionResult cr = contract_independent_set(g, candidate);
        const PathDecomposition cpd = derive_contracted_pd(pd, candidate, cr);
        DecisionConfig sub = cfg;
        sub.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(u));
        if (decide_k_colorable(cr.graph, cpd, sub).yes) cls = std::move(candidate);
    }
    return cls;
}

ExtractResult extract_coloring(const Graph& g, const PathDecomposition& pd, int k,
                               std::uint64_t s, std::uint64_t seed, int p, int threads) {
    if (k < 1) throw std::invalid_argument("extract_coloring: k must be >= 1");
    if (s < 1) throw std::invalid_argument("extract_coloring: s must be >= 1");
    modk::validate(g, pd);
    const int n = g.vertex_count();
    if (p < 0) p = std::max(1, 2 * n * k);

    ExtractResult res;
    res.coloring.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> remaining(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) remaining[static_cast<std::size_t>(v)] = v;

    for (int round = 0; round < k && !remaining.empty(); ++round) {
        const InducedResult ind = induced_subgraph(g, remaining);
        const PathDecomposition ipd = derive_induced_pd(pd, remaining);
        DecisionConfig cfg;
        cfg.k = k - round;
        cfg.s = s;
        cfg.p = p;
        cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(round) + 0x636c617373ULL);
        cfg.threads = threads;
        const std::vector<int> cls = find_maximal_color_class(ind.graph, ipd, cfg, 0);

        std::vector<char> taken(static_cast<std::size_t>(ind.graph.vertex_count()), 0);
        for (int v : cls) {
            res.coloring[static_cast<std::size_t>(ind.kept[static_cast<std::size_t>(v)])] = round;
            taken[static_cast<std::size_t>(v)] = 1;
        }
        std::vector<int> next;
        for (std::size_t i = 0; i < remaining.size(); ++i)
            if (!taken[i]) next.push_back(remaining[i]);
        remaining = std::move(next);
    }

    if (!remaining.empty()) {
        res.failure_reason = "vertices remain uncolored after " + std::to_string(k) + " classes";
        return res;
    }
    if (!verify_coloring(g, res.coloring)) {
        res.failure_reason = "extracted coloring failed verification";
        return res;
    }
    res.success = true;
    return res;
}

} // namespace modk
