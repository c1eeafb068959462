#include "modk/families.hpp"

#include <stdexcept>

namespace modk {

Graph empty_graph(int n) { return Graph(n, {}); }

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph disjoint_triangles(int t) {
    if (t < 0) throw std::invalid_argument("disjoint_triangles: t must be >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i) {
        const int b = 3 * i;
        edges.emplace_back(b, b + 1);
        edges.emplace_back(b + 1, b + 2);
        edges.emplace_back(b, b + 2);
    }
    return Graph(3 * t, edges);
}

Orientation triangles_cyclic_orientation(const Graph& g) {
    if (g.vertex_count() % 3 != 0)
        throw std::invalid_argument("triangles_cyclic_orientation: not a triangle family graph");
    std::vector<Arc> arcs;
    for (int i = 0; i < g.vertex_count() / 3; ++i) {
        const int b = 3 * i;
        arcs.push_back({b, b + 1});
        arcs.push_back({b + 1, b + 2});
        arcs.push_back({b + 2, b});
    }
    return orient(g, arcs);
}

Graph squared_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 2);
    return Graph(n, edges);
}

} // namespace modk
