#include "modk/path_decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace modk {

PathDecomposition::PathDecomposition(std::vector<std::vector<int>> b) : bags(std::move(b)) {
    for (auto& bag : bags) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
}

int PathDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

int validate(const Graph& g, const PathDecomposition& pd) {
    const int n = g.vertex_count();
    const int p = pd.bag_count();
    std::vector<int> first(static_cast<std::size_t>(n), -1);
    std::vector<int> last(static_cast<std::size_t>(n), -1);
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < p; ++i) {
        for (int v : pd.bags[static_cast<std::size_t>(i)]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("pd: bag " + std::to_string(i) + " contains vertex " +
                                            std::to_string(v) + " out of range");
            auto vi = static_cast<std::size_t>(v);
            if (first[vi] < 0) first[vi] = i;
            last[vi] = i;
            ++count[vi];
        }
    }
    for (int v = 0; v < n; ++v) {
        auto vi = static_cast<std::size_t>(v);
        if (first[vi] < 0)
            throw std::invalid_argument("pd: vertex " + std::to_string(v) + " missing from all bags");
        if (count[vi] != last[vi] - first[vi] + 1)
            throw std::invalid_argument("pd: vertex " + std::to_string(v) +
                                        " occupies a non-contiguous bag interval");
    }
    for (auto [u, v] : g.edges()) {
        const int lo = std::max(first[static_cast<std::size_t>(u)], first[static_cast<std::size_t>(v)]);
        const int hi = std::min(last[static_cast<std::size_t>(u)], last[static_cast<std::size_t>(v)]);
        if (lo > hi)
            throw std::invalid_argument("pd: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} covered by no bag");
    }
    return pd.width();
}

NiceEventSequence make_nice(const PathDecomposition& pd) {
    NiceEventSequence seq;
    seq.bag_count = pd.bag_count();
    std::vector<int> prev;
    for (int i = 0; i < pd.bag_count(); ++i) {
        const auto& cur = pd.bags[static_cast<std::size_t>(i)];
        std::vector<int> gone, fresh;
        std::set_difference(prev.begin(), prev.end(), cur.begin(), cur.end(), std::back_inserter(gone));
        std::set_difference(cur.begin(), cur.end(), prev.begin(), prev.end(), std::back_inserter(fresh));
        for (int v : gone) seq.events.push_back({EventKind::Forget, v, i});
        for (int v : fresh) seq.events.push_back({EventKind::Introduce, v, i});
        prev = cur;
    }
    for (int v : prev) seq.events.push_back({EventKind::Forget, v, pd.bag_count()});
    return seq;
}

PathDecomposition boundary_decomposition(const Graph& g, std::span<const int> order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("boundary_decomposition: order is not a permutation");
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || position[static_cast<std::size_t>(v)] >= 0)
            throw std::invalid_argument("boundary_decomposition: order is not a permutation");
        position[static_cast<std::size_t>(v)] = i;
    }
    // last_nbr[v]: largest order position among v's neighbors
    std::vector<int> last_nbr(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            last_nbr[static_cast<std::size_t>(v)] =
                std::max(last_nbr[static_cast<std::size_t>(v)], position[static_cast<std::size_t>(u)]);

    std::vector<std::vector<int>> bags(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& bag = bags[static_cast<std::size_t>(i)];
        bag.push_back(order[static_cast<std::size_t>(i)]);
        for (int j = 0; j < i; ++j) {
            int u = order[static_cast<std::size_t>(j)];
            if (last_nbr[static_cast<std::size_t>(u)] >= i) bag.push_back(u);
        }
    }
    return PathDecomposition(std::move(bags));
}

std::vector<int> bfs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        std::queue<int> q;
        q.push(root);
        seen[static_cast<std::size_t>(root)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    q.push(u);
                }
            }
        }
    }
    return order;
}

ArcSchedule arc_schedule(const Orientation& o, const PathDecomposition& pd) {
    const int p = pd.bag_count();
    // first bag index containing v
    std::vector<int> first(static_cast<std::size_t>(o.vertex_count), p);
    std::vector<std::vector<char>> member(
        static_cast<std::size_t>(p), std::vector<char>(static_cast<std::size_t>(o.vertex_count), 0));
    for (int i = 0; i < p; ++i)
        for (int v : pd.bags[static_cast<std::size_t>(i)]) {
            member[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = 1;
            first[static_cast<std::size_t>(v)] = std::min(first[static_cast<std::size_t>(v)], i);
        }

    ArcSchedule sched;
    sched.arcs.reserve(o.arcs.size());
    for (const Arc& a : o.arcs) {
        int r = -1;
        int start = std::max(first[static_cast<std::size_t>(a.tail)], first[static_cast<std::size_t>(a.head)]);
        for (int i = start; i < p; ++i) {
            if (member[static_cast<std::size_t>(i)][static_cast<std::size_t>(a.tail)] &&
                member[static_cast<std::size_t>(i)][static_cast<std::size_t>(a.head)]) {
                r = i;
                break;
            }
        }
        if (r < 0)
            throw std::invalid_argument("arc_schedule: arc (" + std::to_string(a.tail) + "," +
                                        std::to_string(a.head) + ") covered by no bag");
        sched.arcs.push_back({a, r});
    }
    std::sort(sched.arcs.begin(), sched.arcs.end(), [](const ScheduledArc& x, const ScheduledArc& y) {
        return std::tie(x.bag, x.arc.tail, x.arc.head) < std::tie(y.bag, y.arc.tail, y.arc.head);
    });
    return sched;
}

PathDecomposition derive_contracted_pd(const PathDecomposition& pd, std::span<const int> s,
                                       const ContractionResult& cr) {
    std::set<int> in_s(s.begin(), s.end());
    std::vector<std::vector<int>> bags;
    for (const auto& bag : pd.bags) {
        std::vector<int> mapped;
        for (int v : bag)
            if (!in_s.count(v)) mapped.push_back(cr.vertex_map[static_cast<std::size_t>(v)]);
        mapped.push_back(cr.supervertex);
        bags.push_back(std::move(mapped));
    }
    return PathDecomposition(std::move(bags));
}

PathDecomposition derive_induced_pd(const PathDecomposition& pd, std::span<const int> keep) {
    std::set<int> kept(keep.begin(), keep.end());
    std::vector<int> new_id;
    {
        int next = 0;
        int maxv = kept.empty() ? -1 : *kept.rbegin();
        new_id.assign(static_cast<std::size_t>(maxv + 1), -1);
        for (int v : kept) new_id[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<std::vector<int>> bags;
    for (const auto& bag : pd.bags) {
        std::vector<int> mapped;
        for (int v : bag)
            if (kept.count(v)) mapped.push_back(new_id[static_cast<std::size_t>(v)]);
        if (!mapped.empty()) bags.push_back(std::move(mapped));
    }
    return PathDecomposition(std::move(bags));
}

PathDecomposition parse_pd(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int p = 0, n = 0;
    std::vector<std::vector<int>> bags;
    std::vector<char> seen_index;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "pd") {
            if (have_header)
                throw std::runtime_error("pd: duplicate header at line " + std::to_string(lineno));
            if (!(ls >> p >> n) || p < 0 || n < 0)
                throw std::runtime_error("pd: malformed header at line " + std::to_string(lineno));
            bags.assign(static_cast<std::size_t>(p), {});
            seen_index.assign(static_cast<std::size_t>(p), 0);
            have_header = true;
        } else if (tag == "b") {
            if (!have_header)
                throw std::runtime_error("pd: b line before header at line " + std::to_string(lineno));
            int idx = 0;
            if (!(ls >> idx) || idx < 1 || idx > p)
                throw std::runtime_error("pd: bad bag index at line " + std::to_string(lineno));
            if (seen_index[static_cast<std::size_t>(idx - 1)])
                throw std::runtime_error("pd: duplicate bag index at line " + std::to_string(lineno));
            seen_index[static_cast<std::size_t>(idx - 1)] = 1;
            int v = 0;
            while (ls >> v) {
                if (v < 1 || v > n)
                    throw std::runtime_error("pd: vertex out of range at line " + std::to_string(lineno));
                bags[static_cast<std::size_t>(idx - 1)].push_back(v - 1);
            }
        } else {
            throw std::runtime_error("pd: unknown line type '" + tag + "' at line " +
                                     std::to_string(lineno));
        }
    }
    if (!have_header) throw std::runtime_error("pd: missing header");
    for (int i = 0; i < p; ++i)
        if (!seen_index[static_cast<std::size_t>(i)])
            throw std::runtime_error("pd: bag " + std::to_string(i + 1) + " missing");
    return PathDecomposition(std::move(bags));
}

PathDecomposition parse_pd(const std::string& text) {
    std::istringstream in(text);
    return parse_pd(in);
}

std::string render_pd(const PathDecomposition& pd, int vertex_count) {
    std::ostringstream out;
    out << "pd " << pd.bag_count() << ' ' << vertex_count << '\n';
    for (int i = 0; i < pd.bag_count(); ++i) {
        out << "b " << i + 1;
        for (int v : pd.bags[static_cast<std::size_t>(i)]) out << ' ' << v + 1;
        out << '\n';
    }
    return out.str();
}

} // namespace modk
