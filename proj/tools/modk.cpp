#include "modk/families.hpp"
#include "modk/graph.hpp"
#include "modk/kappa.hpp"
#include "modk/oracles.hpp"
#include "modk/path_decomposition.hpp"
#include "modk/rng.hpp"
#include "modk/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace modk;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

int env_threads() {
    if (const char* v = std::getenv("MODK_THREADS")) {
        const int t = std::atoi(v);
        if (t >= 1) return t;
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) { return parse_dimacs(read_file(path)); }

// Built-in family spec "name:size", e.g. "triangles:2" or "squared_path:30".
Graph build_family(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::runtime_error("family: expected name:size");
    const std::string name = spec.substr(0, colon);
    const int size = std::stoi(spec.substr(colon + 1));
    if (name == "triangles") return disjoint_triangles(size);
    if (name == "path") return path_graph(size);
    if (name == "cycle") return cycle_graph(size);
    if (name == "complete") return complete_graph(size);
    if (name == "empty") return empty_graph(size);
    if (name == "squared_path") return squared_path(size);
    throw std::runtime_error("family: unknown name '" + name + "'");
}

struct PdChoice {
    PathDecomposition pd;
    std::string source;
};

PdChoice resolve_pd(const Graph& g, const std::string& pd_file, const std::string& order) {
    PdChoice out;
    if (!pd_file.empty()) {
        out.pd = parse_pd(read_file(pd_file));
        out.source = pd_file;
    } else if (order == "bfs") {
        out.pd = boundary_decomposition(g, bfs_order(g));
        out.source = "(boundary:bfs)";
    } else if (order == "identity") {
        std::vector<int> id(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) id[static_cast<std::size_t>(v)] = v;
        out.pd = boundary_decomposition(g, id);
        out.source = "(boundary:identity)";
    } else {
        throw std::runtime_error("unknown --order '" + order + "' (identity|bfs)");
    }
    validate(g, out.pd);
    return out;
}

std::vector<int> parse_w_list(const std::string& csv) {
    std::vector<int> w;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::runtime_error("--w: empty residue");
        w.push_back(std::stoi(item));
    }
    return w;
}

json trials_json(const std::vector<Trial>& trials) {
    json arr = json::array();
    for (const Trial& t : trials) {
        arr.push_back({{"trial", t.index},
                       {"w", t.w},
                       {"kappa", t.kappa.str()},
                       {"max_table", t.max_table_size}});
    }
    return arr;
}

void emit(const json& report, const std::string& summary) {
    std::cout << report.dump(2) << '\n';
    std::cerr << summary << '\n';
}

struct CommonFlags {
    std::string graph_file;
    std::string family;
    std::string pd_file;
    std::string order = "identity";
    std::uint64_t seed = 0;
};

Graph load_instance(const CommonFlags& flags) {
    if (!flags.graph_file.empty()) return load_graph(flags.graph_file);
    if (!flags.family.empty()) return build_family(flags.family);
    throw std::runtime_error("need --graph or --family");
}

// ---------------------------------------------------------------- decide

int cmd_decide(const CommonFlags& flags, int k, std::uint64_t s, int p, bool oracle) {
    const Graph g = load_instance(flags);
    const PdChoice pc = resolve_pd(g, flags.pd_file, flags.order);

    DecisionConfig cfg;
    cfg.k = k;
    cfg.s = s;
    cfg.p = p;
    cfg.seed = flags.seed;
    cfg.threads = env_threads();

    Stopwatch clock;
    const DecideResult res = decide_k_colorable(g, pc.pd, cfg);

    json report;
    report["command"] = "decide";
    report["inputs"] = {{"graph", flags.graph_file.empty() ? flags.family : flags.graph_file},
                        {"pd", pc.source},
                        {"k", k},
                        {"s", s},
                        {"p", p},
                        {"seed", flags.seed},
                        {"threads", cfg.threads}};
    report["verdict"] = res.yes ? "yes" : "no";
    report["trials"] = trials_json(res.trials);
    if (oracle) {
        json checks = json::array();
        for (const Trial& t : res.trials) {
            const BigInt expect = brute_kappa(orient(g), WVector(k, t.w));
            checks.push_back({{"trial", t.index},
                              {"brute_kappa", expect.str()},
                              {"match", expect == t.kappa}});
        }
        report["oracle"] = checks;
    }
    report["timing_ms"] = clock.ms();
    emit(report, "decide: verdict=" + std::string(res.yes ? "yes" : "no") +
                     " trials=" + std::to_string(res.trials.size()));
    return res.yes ? kExitYes : kExitNo;
}

// ---------------------------------------------------------------- color

int cmd_color(const CommonFlags& flags, int k, std::uint64_t s, int p) {
    const Graph g = load_instance(flags);
    const PdChoice pc = resolve_pd(g, flags.pd_file, flags.order);

    Stopwatch clock;
    const ExtractResult res = extract_coloring(g, pc.pd, k, s, flags.seed, p, env_threads());

    json report;
    report["command"] = "color";
    report["inputs"] = {{"graph", flags.graph_file.empty() ? flags.family : flags.graph_file},
                        {"pd", pc.source},
                        {"k", k},
                        {"s", s},
                        {"p", p},
                        {"seed", flags.seed}};
    report["verdict"] = res.success ? "success" : "failure";
    if (res.success) {
        report["coloring"] = res.coloring;
        report["verified"] = verify_coloring(g, res.coloring);
    } else {
        report["failure_reason"] = res.failure_reason;
    }
    report["timing_ms"] = clock.ms();
    emit(report, "color: " + std::string(res.success ? "success" : "failure"));
    return res.success ? kExitYes : kExitNo;
}

// ---------------------------------------------------------------- kappa

int cmd_kappa(const CommonFlags& flags, int k, const std::string& w_csv,
              const std::string& orientation_file, bool oracle) {
    const Graph g = load_instance(flags);
    const PdChoice pc = resolve_pd(g, flags.pd_file, flags.order);

    Orientation o = orient(g);
    std::string orientation_source = "(default:low-to-high)";
    if (!orientation_file.empty()) {
        o = parse_orientation(read_file(orientation_file), g);
        orientation_source = orientation_file;
    }
    const std::vector<int> w_list = parse_w_list(w_csv);
    if (static_cast<int>(w_list.size()) != g.vertex_count())
        throw std::runtime_error("--w has " + std::to_string(w_list.size()) + " residues, graph has " +
                                 std::to_string(g.vertex_count()) + " vertices");
    const WVector w(k, w_list);

    Stopwatch clock;
    const KappaResult res = kappa_dp(g, o, pc.pd, w);

    json report;
    report["command"] = "kappa";
    report["inputs"] = {{"graph", flags.graph_file.empty() ? flags.family : flags.graph_file},
                        {"pd", pc.source},
                        {"orientation", orientation_source},
                        {"k", k},
                        {"w", w_list}};
    report["kappa"] = res.value.str();
    report["max_table"] = res.stats.max_table_size;
    report["table_bound"] = max_table_bound(g, pc.pd).str();
    if (oracle) {
        const BigInt expect = brute_kappa(o, w);
        report["oracle"] = {{"brute_kappa", expect.str()}, {"match", expect == res.value}};
    }
    report["timing_ms"] = clock.ms();
    emit(report, "kappa = " + res.value.str());
    return kExitYes;
}

// ---------------------------------------------------------------- check

struct NamedInstance {
    std::string name;
    Graph g;
    Orientation o;
    int k;
};

std::vector<NamedInstance> builtin_instances() {
    std::vector<NamedInstance> out;
    const auto add = [&](std::string name, Graph g, int k) {
        Orientation o = orient(g);
        out.push_back({std::move(name), std::move(g), std::move(o), k});
    };
    add("edge-k2", path_graph(2), 2);
    add("path3-k2", path_graph(3), 2);
    add("path3-k3", path_graph(3), 3);
    add("k3-k3", complete_graph(3), 3);
    add("c4-k2", cycle_graph(4), 2);
    add("c5-k3", cycle_graph(5), 3);
    add("k4-k3", complete_graph(4), 3);
    {
        Graph tri = disjoint_triangles(1);
        out.push_back({"triangle-cyclic-k3", tri, triangles_cyclic_orientation(tri), 3});
    }
    return out;
}

int cmd_check(const std::string& suite, int t_max, const std::string& graph_file, int k_extra,
              int count, std::uint64_t seed) {
    json items = json::array();
    bool all_ok = true;
    Stopwatch clock;

    std::vector<NamedInstance> family;
    if (suite == "lemma6" || suite == "lemma78" || suite == "eq1") {
        family = builtin_instances();
        if (!graph_file.empty()) {
            Graph g = load_graph(graph_file);
            Orientation o = orient(g);
            family.push_back({graph_file, std::move(g), std::move(o), k_extra});
        }
    }

    if (suite == "lemma6") {
        for (const auto& inst : family) {
            const BiSumCheck c = lemma6_check(inst.o, inst.k);
            all_ok = all_ok && c.ok;
            items.push_back({{"instance", inst.name},
                             {"lhs_kappa0_doubled", c.lhs.str()},
                             {"rhs_sum_kappa_sq", c.rhs.str()},
                             {"ok", c.ok}});
        }
    } else if (suite == "lemma78") {
        for (const auto& inst : family) {
            for (int rep = 0; rep < 3; ++rep) {
                const std::vector<int> wv =
                    rep == 0 ? std::vector<int>(static_cast<std::size_t>(inst.g.vertex_count()), 0)
                             : sample_w(seed, static_cast<std::uint64_t>(rep), inst.g.vertex_count(),
                                        inst.k);
                const BoundCheck c = lemma78_check(inst.o, WVector(inst.k, wv));
                all_ok = all_ok && c.equality_ok && c.bound_ok;
                items.push_back({{"instance", inst.name},
                                 {"w", wv},
                                 {"equality_lhs", c.equality_lhs},
                                 {"equality_rhs", c.equality_rhs},
                                 {"equality_ok", c.equality_ok},
                                 {"bound_lhs", c.bound_lhs},
                                 {"bound_rhs", c.bound_rhs},
                                 {"bound_ok", c.bound_ok}});
            }
        }
    } else if (suite == "eq1") {
        for (const auto& inst : family) {
            for (int rep = 0; rep < 3; ++rep) {
                const std::vector<int> wv =
                    rep == 0 ? std::vector<int>(static_cast<std::size_t>(inst.g.vertex_count()), 0)
                             : sample_w(seed, static_cast<std::uint64_t>(rep), inst.g.vertex_count(),
                                        inst.k);
                const WVector w(inst.k, wv);
                const CharSumValue cs = charsum_kappa(inst.o, w);
                const BigInt exact = brute_kappa(inst.o, w);
                const double err = std::abs(cs.value.real() - exact.convert_to<double>());
                const bool ok = err <= 1e-6 && cs.imag_magnitude <= 1e-6;
                all_ok = all_ok && ok;
                items.push_back({{"instance", inst.name},
                                 {"w", wv},
                                 {"charsum_re", cs.value.real()},
                                 {"charsum_im", cs.value.imag()},
                                 {"exact", exact.str()},
                                 {"abs_error", err},
                                 {"ok", ok}});
            }
        }
    } else if (suite == "oracle") {
        for (int i = 0; i < count; ++i) {
            TrialRng rng(seed, static_cast<std::uint64_t>(i));
            const int n = 1 + static_cast<int>(rng.below(8));
            const int max_m = n * (n - 1) / 2;
            const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(max_m, 16) + 1)));
            std::vector<std::pair<int, int>> edges;
            while (static_cast<int>(edges.size()) < m) {
                const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                if (u != v) edges.emplace_back(u, v);
            }
            const Graph g(n, edges);
            const int k = 2 + static_cast<int>(rng.below(4));
            std::vector<int> order(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
            for (int v = n - 1; v > 0; --v)
                std::swap(order[static_cast<std::size_t>(v)],
                          order[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(v + 1)))]);
            const PathDecomposition pd = boundary_decomposition(g, order);
            const Orientation o = orient(g);
            bool ok = true;
            for (int rep = 0; rep < 4; ++rep) {
                std::vector<int> wv(static_cast<std::size_t>(n), 0);
                if (rep > 0)
                    for (auto& r : wv) r = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
                const WVector w(k, wv);
                ok = ok && kappa_dp(g, o, pd, w).value == brute_kappa(o, w);
            }
            all_ok = all_ok && ok;
            if (!ok)
                items.push_back({{"instance", i}, {"n", n}, {"m", g.edge_count()}, {"k", k}, {"ok", false}});
        }
        items.push_back({{"random_instances", count}, {"all_match", all_ok}});
    } else if (suite == "triangles") {
        for (int t = 1; t <= t_max; ++t) {
            const Graph g = disjoint_triangles(t);
            const Orientation o = triangles_cyclic_orientation(g);
            const WEnumeration e = enumerate_nonzero_w(o, 3);
            BigInt expect_attainable = 1, expect_nonzero = 1;
            for (int i = 0; i < t; ++i) {
                expect_attainable *= 7;
                expect_nonzero *= 6;
            }
            const bool ok = BigInt(e.attainable_count()) == expect_attainable &&
                            BigInt(e.nonzero_count()) == expect_nonzero;
            all_ok = all_ok && ok;
            items.push_back({{"t", t},
                             {"attainable", e.attainable_count()},
                             {"attainable_expected", expect_attainable.str()},
                             {"nonzero", e.nonzero_count()},
                             {"nonzero_expected", expect_nonzero.str()},
                             {"ok", ok}});
        }
    } else {
        throw std::runtime_error("unknown --suite '" + suite +
                                 "' (lemma6|lemma78|eq1|oracle|triangles)");
    }

    json report;
    report["command"] = "check";
    report["suite"] = suite;
    report["items"] = items;
    report["pass"] = all_ok;
    report["timing_ms"] = clock.ms();
    emit(report, "check " + suite + ": " + (all_ok ? "pass" : "FAIL"));
    return all_ok ? kExitYes : kExitNo;
}

// ---------------------------------------------------------------- bench

int cmd_bench(const CommonFlags& flags, int k, int trials) {
    const Graph g = load_instance(flags);
    const PdChoice pc = resolve_pd(g, flags.pd_file, flags.order);
    const Orientation o = orient(g);

    std::size_t kappa_max_table = 0;
    Stopwatch kappa_clock;
    for (int t = 0; t < trials; ++t) {
        const std::vector<int> wv = sample_w(flags.seed, static_cast<std::uint64_t>(t),
                                             g.vertex_count(), k);
        const KappaResult r = kappa_dp(g, o, pc.pd, WVector(k, wv));
        kappa_max_table = std::max(kappa_max_table, r.stats.max_table_size);
    }
    const double kappa_ms = kappa_clock.ms();

    Stopwatch color_clock;
    const ColorDpResult cdp = count_colorings_dp(g, pc.pd, k);
    const double color_ms = color_clock.ms();

    json report;
    report["command"] = "bench";
    report["inputs"] = {{"graph", flags.graph_file.empty() ? flags.family : flags.graph_file},
                        {"pd", pc.source},
                        {"k", k},
                        {"trials", trials},
                        {"seed", flags.seed},
                        {"width", pc.pd.width()},
                        {"max_degree", max_degree(g)}};
    report["kappa_dp"] = {{"max_table_observed", kappa_max_table},
                          {"table_bound", max_table_bound(g, pc.pd).str()},
                          {"ms", kappa_ms}};
    report["color_dp"] = {{"max_table_observed", cdp.max_table_size},
                          {"colorings", cdp.count.str()},
                          {"ms", color_ms}};
    report["kappa_table_below_baseline"] = kappa_max_table < cdp.max_table_size;
    report["timing_ms"] = kappa_ms + color_ms;
    emit(report, "bench: kappa max table " + std::to_string(kappa_max_table) + " vs color-DP " +
                     std::to_string(cdp.max_table_size));
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-k subgraph counting toolkit: decide and extract k-colorings over path decompositions"};
    app.require_subcommand(1);

    CommonFlags flags;
    int k = 0;
    std::uint64_t s = 1;
    int p_decide = 2;
    int p_color = -1;
    bool oracle = false;
    std::string w_csv;
    std::string orientation_file;
    std::string suite;
    int t_max = 2;
    int count = 100;
    int bench_trials = 5;

    const auto add_common = [&](CLI::App* cmd, bool need_k) {
        cmd->add_option("--graph", flags.graph_file, "DIMACS .col file");
        cmd->add_option("--family", flags.family, "built-in family name:size");
        cmd->add_option("--pd", flags.pd_file, "path decomposition file");
        cmd->add_option("--order", flags.order, "boundary heuristic order (identity|bfs)");
        cmd->add_option("--seed", flags.seed, "RNG seed");
        auto* opt = cmd->add_option("--k", k, "number of colors");
        if (need_k) opt->required();
    };

    CLI::App* decide = app.add_subcommand("decide", "decide k-colorability under a coloring-count promise");
    add_common(decide, true);
    decide->add_option("--s", s, "promise bound on the number of proper k-colorings")->required();
    decide->add_option("--p", p_decide, "repetition multiplier (trials = p*s)");
    decide->add_flag("--oracle", oracle, "cross-check trial kappas against brute force");

    CLI::App* color = app.add_subcommand("color", "extract a proper k-coloring by self-reduction");
    add_common(color, true);
    color->add_option("--s", s, "promise bound on the number of proper k-colorings")->required();
    color->add_option("--p", p_color, "repetition multiplier (default 2*n*k)");

    CLI::App* kappa = app.add_subcommand("kappa", "compute one kappa value exactly");
    add_common(kappa, true);
    kappa->add_option("--w", w_csv, "residue vector, comma separated")->required();
    kappa->add_option("--orientation", orientation_file, "orientation override file");
    kappa->add_flag("--oracle", oracle, "cross-check against brute force");

    CLI::App* check = app.add_subcommand("check", "run an identity suite");
    check->add_option("--suite", suite, "lemma6|lemma78|eq1|oracle|triangles")->required();
    check->add_option("--t", t_max, "max triangle count for the triangles suite");
    check->add_option("--count", count, "instance count for the oracle suite");
    check->add_option("--graph", flags.graph_file, "extra DIMACS instance to include");
    check->add_option("--k", k, "colors for the extra instance");
    check->add_option("--seed", flags.seed, "RNG seed");

    CLI::App* bench = app.add_subcommand("bench", "state-table sizes: kappa DP vs color DP");
    add_common(bench, true);
    bench->add_option("--trials", bench_trials, "random w draws for the kappa DP");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    try {
        if (decide->parsed()) return cmd_decide(flags, k, s, p_decide, oracle);
        if (color->parsed()) return cmd_color(flags, k, s, p_color);
        if (kappa->parsed()) return cmd_kappa(flags, k, w_csv, orientation_file, oracle);
        if (check->parsed()) return cmd_check(suite, t_max, flags.graph_file, k == 0 ? 2 : k, count, flags.seed);
        if (bench->parsed()) return cmd_bench(flags, k, bench_trials);
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cout << err.dump(2) << '\n';
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
