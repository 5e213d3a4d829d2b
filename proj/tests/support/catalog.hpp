#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "addspan/graph.hpp"

namespace addspan::testing {

/// One representative of every isomorphism class of connected simple graphs
/// on exactly n vertices, 1 <= n <= 6. Sizes: 1, 1, 2, 6, 21, 112.
const std::vector<Graph>& connected_graphs(std::size_t n);

/// All classes for 1..max_n in order of n.
std::vector<Graph> connected_graphs_up_to(std::size_t max_n);

/// Plain queue BFS over an edge list, independent of the library's own.
std::vector<int> reference_bfs(std::size_t n, const std::vector<Edge>& edges, Vertex s);

/// Connected G(n, p) sample: resamples until connected.
Graph random_connected(std::size_t n, double p, std::mt19937_64& rng);

/// Edge list of g without the edges in `drop`.
std::vector<Edge> edges_without(const Graph& g, const EdgeMask& drop);

}  // namespace addspan::testing
