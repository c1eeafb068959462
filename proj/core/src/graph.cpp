#include "modk/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace modk {

namespace {

std::pair<int, int> normalize_edge(int u, int v) {
    return u < v ? std::pair{u, v} : std::pair{v, u};
}

} // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::set<std::pair<int, int>> unique;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        unique.insert(normalize_edge(u, v));
    }
    edges_.assign(unique.begin(), unique.end());
    adjacency_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nbrs = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

Orientation orient(const Graph& g) {
    Orientation o;
    o.vertex_count = g.vertex_count();
    o.arcs.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) o.arcs.push_back({u, v});
    return o;
}

Orientation orient(const Graph& g, std::span<const Arc> arcs) {
    std::set<std::pair<int, int>> seen;
    for (const Arc& a : arcs) {
        if (!g.has_edge(a.tail, a.head))
            throw std::invalid_argument("orient: arc (" + std::to_string(a.tail) + "," +
                                        std::to_string(a.head) + ") is not a graph edge");
        auto e = normalize_edge(a.tail, a.head);
        if (!seen.insert(e).second)
            throw std::invalid_argument("orient: edge {" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + "} covered twice");
    }
    if (static_cast<int>(seen.size()) != g.edge_count())
        throw std::invalid_argument("orient: arc list does not cover every edge");
    Orientation o;
    o.vertex_count = g.vertex_count();
    o.arcs.assign(arcs.begin(), arcs.end());
    return o;
}

Orientation reverse(const Orientation& o) {
    Orientation r;
    r.vertex_count = o.vertex_count;
    r.arcs.reserve(o.arcs.size());
    for (const Arc& a : o.arcs) r.arcs.push_back({a.head, a.tail});
    return r;
}

std::vector<Arc> doubled_arcs(const Orientation& o) {
    std::vector<Arc> arcs = o.arcs;
    arcs.reserve(2 * o.arcs.size());
    for (const Arc& a : o.arcs) arcs.push_back({a.head, a.tail});
    return arcs;
}

ContractionResult contract_independent_set(const Graph& g, std::span<const int> s) {
    if (s.empty()) throw std::invalid_argument("contract: empty vertex set");
    std::vector<char> in_s(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("contract: vertex out of range");
        in_s[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : s)
        for (int u : g.neighbors(v))
            if (in_s[static_cast<std::size_t>(u)])
                throw std::invalid_argument("contract: set is not independent (" +
                                            std::to_string(v) + "-" + std::to_string(u) + ")");

    ContractionResult cr;
    cr.vertex_map.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_s[static_cast<std::size_t>(v)]) cr.vertex_map[static_cast<std::size_t>(v)] = next++;
    cr.supervertex = next;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in_s[static_cast<std::size_t>(v)]) cr.vertex_map[static_cast<std::size_t>(v)] = cr.supervertex;

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(cr.vertex_map[static_cast<std::size_t>(u)],
                           cr.vertex_map[static_cast<std::size_t>(v)]);
    cr.graph = Graph(next + 1, edges);
    return cr;
}

InducedResult induced_subgraph(const Graph& g, std::span<const int> keep) {
    InducedResult res;
    res.vertex_map.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        res.vertex_map[static_cast<std::size_t>(v)] = static_cast<int>(res.kept.size());
        res.kept.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int mu = res.vertex_map[static_cast<std::size_t>(u)];
        int mv = res.vertex_map[static_cast<std::size_t>(v)];
        if (mu >= 0 && mv >= 0) edges.emplace_back(mu, mv);
    }
    res.graph = Graph(static_cast<int>(res.kept.size()), edges);
    return res;
}

Graph parse_dimacs(std::istream& in) {
    bool have_header = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header)
                throw std::runtime_error("dimacs: duplicate p line at line " + std::to_string(lineno));
            std::string fmt;
            long declared_m = 0;
            if (!(ls >> fmt >> n >> declared_m) || (fmt != "edge" && fmt != "edges" && fmt != "col"))
                throw std::runtime_error("dimacs: malformed p line at line " + std::to_string(lineno));
            if (n < 0) throw std::runtime_error("dimacs: negative vertex count");
            have_header = true;
        } else if (tag == "e") {
            if (!have_header)
                throw std::runtime_error("dimacs: e line before p line at line " + std::to_string(lineno));
            int u = 0, v = 0;
            if (!(ls >> u >> v))
                throw std::runtime_error("dimacs: malformed e line at line " + std::to_string(lineno));
            if (u == v)
                throw std::runtime_error("dimacs: self-loop at line " + std::to_string(lineno));
            if (u < 1 || v < 1 || u > n || v > n)
                throw std::runtime_error("dimacs: vertex out of range at line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw std::runtime_error("dimacs: unknown line type '" + tag + "' at line " +
                                     std::to_string(lineno));
        }
    }
    if (!have_header) throw std::runtime_error("dimacs: missing p line");
    return Graph(n, edges);
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string render_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Orientation parse_orientation(std::istream& in, const Graph& g) {
    std::vector<Arc> arcs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag != "a")
            throw std::runtime_error("orientation: unknown line type '" + tag + "' at line " +
                                     std::to_string(lineno));
        int u = 0, v = 0;
        if (!(ls >> u >> v))
            throw std::runtime_error("orientation: malformed a line at line " + std::to_string(lineno));
        if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count())
            throw std::runtime_error("orientation: vertex out of range at line " + std::to_string(lineno));
        arcs.push_back({u - 1, v - 1});
    }
    return orient(g, arcs);
}

Orientation parse_orientation(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    return parse_orientation(in, g);
}

} // namespace modk
