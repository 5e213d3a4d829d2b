#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace addspan {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Dist = std::int32_t;

/// Distance sentinel for unreachable pairs. Far above any hop count a
/// representable graph can produce, and small enough that `d + t` never
/// overflows for any sane t.
inline constexpr Dist kInf = std::numeric_limits<Dist>::max() / 4;

inline bool finite(Dist d) { return d < kInf; }

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex to;
  EdgeId edge;
};

class GraphError : public std::runtime_error {
 public:
  enum class Kind { SelfLoop, DuplicateEdge, VertexOutOfRange };

  GraphError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Set of edge indices of a fixed graph, stored as a bitset over 0..m-1.
/// Used both for removal sets E' and for candidate sets.
class EdgeMask {
 public:
  EdgeMask() = default;
  explicit EdgeMask(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  EdgeMask(std::size_t universe, std::span<const EdgeId> edges);

  std::size_t universe() const { return universe_; }

  bool contains(EdgeId e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1U);
  }
  void insert(EdgeId e);
  void erase(EdgeId e);
  void clear();

  std::size_t count() const;
  bool empty() const { return count() == 0; }

  /// Members in increasing order.
  std::vector<EdgeId> indices() const;

  bool is_subset_of(const EdgeMask& other) const;

  friend bool operator==(const EdgeMask&, const EdgeMask&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph. Edge indices follow insertion order and
/// adjacency lists are sorted by neighbor, so every traversal is
/// deterministic.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops, duplicate pairs, or endpoints >= n.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Arc> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  /// Throws std::out_of_range when a and b are not adjacent.
  EdgeId edge_between(Vertex a, Vertex b) const;

  Vertex other_end(EdgeId e, Vertex v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  EdgeMask empty_mask() const { return EdgeMask(num_edges()); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> adjacency_;
};

/// Convenience wrapper matching the textual constructor; used by tests and
/// generators.
Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

/// Row-major n x n hop-distance table.
class DistMatrix {
 public:
  DistMatrix() = default;
  explicit DistMatrix(std::size_t n) : n_(n), data_(n * n, kInf) {}

  std::size_t size() const { return n_; }
  Dist operator()(Vertex a, Vertex b) const { return data_[a * n_ + b]; }
  Dist& operator()(Vertex a, Vertex b) { return data_[a * n_ + b]; }
  std::span<const Dist> row(Vertex a) const {
    return {data_.data() + a * n_, n_};
  }
  std::span<Dist> row(Vertex a) { return {data_.data() + a * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<Dist> data_;
};

/// Hop distances from `source` in (V, E \ removed). With a depth cap,
/// vertices farther than the cap read as kInf.
std::vector<Dist> bfs_dist(const Graph& g, Vertex source, const EdgeMask& removed,
                           std::optional<Dist> depth_cap = std::nullopt);

/// Same as bfs_dist but writes into a caller-owned buffer and reuses a queue,
/// for hot loops.
void bfs_dist_into(const Graph& g, Vertex source, const EdgeMask& removed,
                   std::span<Dist> out, std::vector<Vertex>& queue,
                   Dist depth_cap = kInf);

DistMatrix all_pairs_dist(const Graph& g, const EdgeMask& removed);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Subgraph induced by `vertices` (which must be sorted). Vertex i of the
/// result is vertices[i]; edge_map[j] gives the parent index of result edge j.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Number of edges in a spanning forest of (V, E \ removed), i.e. n minus the
/// number of components.
std::size_t spanning_forest_size(const Graph& g, const EdgeMask& removed);

/// True when removing `removed` leaves every component of g connected.
bool keeps_components_connected(const Graph& g, const EdgeMask& removed);

}  // namespace addspan
