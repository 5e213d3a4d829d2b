#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "addspan/graph.hpp"

namespace addspan {

class BadParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph grid_graph(std::size_t rows, std::size_t cols);

/// G(n, p): each pair {i, j}, i < j, taken in lexicographic order, is kept
/// when the next 53-bit uniform from mt19937_64(seed) is below p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Spine edge 0-1 (always edge 0) plus `len - 1` layers of `width` vertices:
/// 0 is joined to the first layer, consecutive layers are complete bipartite,
/// the last layer is joined to 1. Every cycle through the spine has length
/// len + 1, and there are width^(len-1) of them.
Graph book_graph(std::size_t width, std::size_t len);

/// Path 0..L with `count` cycles of length `len`, cycle i built on the spine
/// edge (i*gap, i*gap + 1).
Graph caterpillar_cycles(std::size_t count, std::size_t gap, std::size_t len);

/// Path 0..L with `count` pendant cycles of length `len` hanging at spine
/// vertices i*gap. The cycles share no edge with the spine.
Graph spaced_cycles(std::size_t count, std::size_t gap, std::size_t len);

/// Vertex i goes to perm[i]. Seed 0 gives the identity.
std::vector<Vertex> relabel_permutation(std::size_t n, std::uint64_t seed);

/// Same graph under relabel_permutation(n, seed). Edge ids are preserved.
Graph relabel(const Graph& g, std::uint64_t seed);

/// Named generator with key=value parameters, as used on the command line:
/// cycle n; complete n; grid rows cols; erdos_renyi n p seed;
/// book width len; caterpillar_triangles count gap len;
/// spaced_triangles count gap len. Any of them also takes relabel=SEED.
/// Unknown names or missing parameters throw
/// BadParameters.
Graph generate(const std::string& name, const std::map<std::string, std::string>& params);

}  // namespace addspan
