#pragma once

#include "modk/graph.hpp"

namespace modk {

// Instance families for the check/bench commands and the test suites.

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// t vertex-disjoint triangles on 3t vertices.
Graph disjoint_triangles(int t);
// Orientation giving every triangle vertex one incoming and one outgoing arc.
Orientation triangles_cyclic_orientation(const Graph& g);

// Square of a path: edges i..i+1 and i..i+2. Max degree 4, bags
// {i, i+1, i+2} give width 2 under the identity boundary order.
Graph squared_path(int n);

} // namespace modk
