#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "addspan/graph.hpp"

namespace addspan {

/// Edges lying on some cycle of length <= t+2. Equivalently, e = uv belongs
/// iff G - e still joins u and v within t+1 hops. No removal set that keeps
/// an additive t-spanner can contain an edge outside this set.
struct CandidateSet {
  EdgeMask members;
  int t = 0;
};

CandidateSet candidate_edges(const Graph& g, int t);

/// A simple cycle in canonical orientation: smallest vertex first, and the
/// second vertex smaller than the last. edges()[i] joins vertices()[i] and
/// vertices()[(i+1) % length()].
class Cycle {
 public:
  /// Throws std::invalid_argument if the sequence is not a simple cycle of g.
  static Cycle from_vertices(const Graph& g, std::vector<Vertex> walk);

  std::size_t length() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  bool contains_edge(EdgeId e) const;
  bool contains_vertex(Vertex v) const;

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<EdgeId> edges_;
};

/// Distinct cycles of length <= t+2, at most `cap` of them, in canonical
/// enumeration order (by smallest vertex, then depth-first by neighbor).
std::vector<Cycle> enumerate_short_cycles(const Graph& g, int t, std::size_t cap);

/// Cycles of length <= t+2 through edge e, i.e. e plus a u-v path of length
/// <= t+1 in G - e. At most `cap`, in depth-first order from e's u endpoint.
std::vector<Cycle> cycles_through_edge(const Graph& g, EdgeId e, int t, std::size_t cap);

/// Greedy packing: scan in order, keep a cycle when it shares no edge with
/// those already kept, stop at `target`.
std::vector<Cycle> greedy_edge_disjoint(std::span<const Cycle> cycles, std::size_t target);

EdgeMask union_of_edges(const Graph& g, std::span<const Cycle> cycles);

}  // namespace addspan
