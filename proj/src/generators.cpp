#include "addspan/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <vector>

namespace addspan {

namespace {

Graph from_edges(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

}  // namespace

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw BadParameters("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  }
  return from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw BadParameters("complete needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return from_edges(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw BadParameters("grid needs rows, cols >= 1");
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return from_edges(rows * cols, edges);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw BadParameters("erdos_renyi needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back({i, j});
    }
  }
  return from_edges(n, edges);
}

Graph book_graph(std::size_t width, std::size_t len) {
  if (width == 0 || len < 2) throw BadParameters("book needs width >= 1 and len >= 2");
  const std::size_t layers = len - 1;
  auto id = [&](std::size_t layer, std::size_t i) {
    return static_cast<Vertex>(2 + layer * width + i);
  };
  std::vector<Edge> edges{{0, 1}};
  for (std::size_t i = 0; i < width; ++i) edges.push_back({0, id(0, i)});
  for (std::size_t l = 0; l + 1 < layers; ++l) {
    for (std::size_t i = 0; i < width; ++i) {
      for (std::size_t j = 0; j < width; ++j) edges.push_back({id(l, i), id(l + 1, j)});
    }
  }
  for (std::size_t i = 0; i < width; ++i) edges.push_back({id(layers - 1, i), 1});
  return from_edges(2 + layers * width, edges);
}

namespace {

void check_chain(std::size_t count, std::size_t gap, std::size_t len) {
  if (count == 0) throw BadParameters("need count >= 1");
  if (gap == 0) throw BadParameters("need gap >= 1");
  if (len < 3) throw BadParameters("cycles need len >= 3");
}

}  // namespace

Graph caterpillar_cycles(std::size_t count, std::size_t gap, std::size_t len) {
  check_chain(count, gap, len);
  const std::size_t spine = (count - 1) * gap + 2;
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < spine; ++i) edges.push_back({i, i + 1});
  auto next = static_cast<Vertex>(spine);
  for (std::size_t c = 0; c < count; ++c) {
    auto a = static_cast<Vertex>(c * gap);
    Vertex prev = a;
    for (std::size_t s = 0; s + 2 < len; ++s) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, a + 1});
  }
  return from_edges(next, edges);
}

Graph spaced_cycles(std::size_t count, std::size_t gap, std::size_t len) {
  check_chain(count, gap, len);
  const std::size_t spine = (count - 1) * gap + 1;
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < spine; ++i) edges.push_back({i, i + 1});
  auto next = static_cast<Vertex>(spine);
  for (std::size_t c = 0; c < count; ++c) {
    auto a = static_cast<Vertex>(c * gap);
    Vertex prev = a;
    for (std::size_t s = 0; s + 1 < len; ++s) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, a});
  }
  return from_edges(next, edges);
}

std::vector<Vertex> relabel_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
  }
  return perm;
}

Graph relabel(const Graph& g, std::uint64_t seed) {
  if (seed == 0) return g;
  const std::vector<Vertex> perm = relabel_permutation(g.num_vertices(), seed);
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return from_edges(g.num_vertices(), edges);
}

namespace {

class ParamReader {
 public:
  ParamReader(const std::string& gen, const std::map<std::string, std::string>& params)
      : gen_(gen), params_(params) {}

  std::uint64_t integer(const std::string& key, std::optional<std::uint64_t> fallback = {}) const {
    auto it = params_.find(key);
    if (it == params_.end()) {
      if (fallback) return *fallback;
      throw BadParameters(gen_ + " needs " + key);
    }
    std::uint64_t v = 0;
    const std::string& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw BadParameters(gen_ + ": " + key + " must be a non-negative integer");
    }
    return v;
  }

  double real(const std::string& key) const {
    auto it = params_.find(key);
    if (it == params_.end()) throw BadParameters(gen_ + " needs " + key);
    try {
      std::size_t used = 0;
      double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return v;
    } catch (const std::exception&) {
      throw BadParameters(gen_ + ": " + key + " must be a number");
    }
  }

 private:
  std::string gen_;
  const std::map<std::string, std::string>& params_;
};

}  // namespace

namespace {

Graph generate_plain(const std::string& name, const ParamReader& r) {
  if (name == "cycle") return cycle_graph(r.integer("n"));
  if (name == "complete") return complete_graph(r.integer("n"));
  if (name == "grid") return grid_graph(r.integer("rows"), r.integer("cols"));
  if (name == "erdos_renyi") return erdos_renyi(r.integer("n"), r.real("p"), r.integer("seed", 0));
  if (name == "book") return book_graph(r.integer("width"), r.integer("len", 2));
  if (name == "caterpillar_triangles") {
    return caterpillar_cycles(r.integer("count"), r.integer("gap", 1), r.integer("len", 3));
  }
  if (name == "spaced_triangles") {
    return spaced_cycles(r.integer("count"), r.integer("gap", 4), r.integer("len", 3));
  }
  throw BadParameters("unknown generator '" + name + "'");
}

}  // namespace

Graph generate(const std::string& name, const std::map<std::string, std::string>& params) {
  ParamReader r(name, params);
  return relabel(generate_plain(name, r), r.integer("relabel", 0));
}

}  // namespace addspan
