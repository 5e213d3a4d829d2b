#include "addspan/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace addspan {

EdgeMask::EdgeMask(std::size_t universe, std::span<const EdgeId> edges)
    : EdgeMask(universe) {
  for (EdgeId e : edges) insert(e);
}

void EdgeMask::insert(EdgeId e) {
  if (e >= universe_) {
    throw std::out_of_range("edge index " + std::to_string(e) +
                            " outside mask of size " + std::to_string(universe_));
  }
  words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void EdgeMask::erase(EdgeId e) {
  if (e < universe_) words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

void EdgeMask::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t EdgeMask::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<EdgeId> EdgeMask::indices() const {
  std::vector<EdgeId> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<EdgeId>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool EdgeMask::is_subset_of(const EdgeMask& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t theirs = w < other.words_.size() ? other.words_[w] : 0;
    if ((words_[w] & ~theirs) != 0) return false;
  }
  return true;
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  edges_.reserve(edges.size());
  for (const Edge& ed : edges) {
    if (ed.u >= n || ed.v >= n) {
      throw GraphError(GraphError::Kind::VertexOutOfRange,
                       "edge (" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
                           ") has an endpoint outside 0.." + std::to_string(n));
    }
    if (ed.u == ed.v) {
      throw GraphError(GraphError::Kind::SelfLoop,
                       "self-loop at vertex " + std::to_string(ed.u));
    }
    auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(ed);
    adjacency_[ed.u].push_back({ed.v, id});
    adjacency_[ed.v].push_back({ed.u, id});
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end(),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
    auto dup = std::adjacent_find(adj.begin(), adj.end(), [](const Arc& a, const Arc& b) {
      return a.to == b.to;
    });
    if (dup != adj.end()) {
      throw GraphError(GraphError::Kind::DuplicateEdge,
                       "duplicate edge (" + std::to_string(v) + "," +
                           std::to_string(dup->to) + ")");
    }
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a >= num_vertices() || b >= num_vertices()) return std::nullopt;
  const auto& adj = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a]
                                                                  : adjacency_[b];
  Vertex target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
  auto it = std::lower_bound(adj.begin(), adj.end(), target,
                             [](const Arc& arc, Vertex x) { return arc.to < x; });
  if (it == adj.end() || it->to != target) return std::nullopt;
  return it->edge;
}

EdgeId Graph::edge_between(Vertex a, Vertex b) const {
  auto e = find_edge(a, b);
  if (!e) {
    throw std::out_of_range("no edge between " + std::to_string(a) + " and " +
                            std::to_string(b));
  }
  return *e;
}

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return Graph(n, edges);
}

void bfs_dist_into(const Graph& g, Vertex source, const EdgeMask& removed,
                   std::span<Dist> out, std::vector<Vertex>& queue, Dist depth_cap) {
  std::fill(out.begin(), out.end(), kInf);
  queue.clear();
  out[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    Dist next = out[x] + 1;
    if (next > depth_cap) break;
    for (const Arc& arc : g.neighbors(x)) {
      if (out[arc.to] != kInf || removed.contains(arc.edge)) continue;
      out[arc.to] = next;
      queue.push_back(arc.to);
    }
  }
}

std::vector<Dist> bfs_dist(const Graph& g, Vertex source, const EdgeMask& removed,
                           std::optional<Dist> depth_cap) {
  if (source >= g.num_vertices()) {
    throw std::out_of_range("bfs source " + std::to_string(source) + " out of range");
  }
  std::vector<Dist> out(g.num_vertices());
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  bfs_dist_into(g, source, removed, out, queue, depth_cap.value_or(kInf));
  return out;
}

DistMatrix all_pairs_dist(const Graph& g, const EdgeMask& removed) {
  const std::size_t n = g.num_vertices();
  DistMatrix d(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) bfs_dist_into(g, s, removed, d.row(s), queue);
  return d;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

}  // namespace

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DisjointSets ds(n);
  for (const Edge& e : g.edges()) ds.unite(e.u, e.v);
  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = ds.find(v);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.num_vertices(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  InducedSubgraph sub;
  sub.vertex_map.assign(vertices.begin(), vertices.end());
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (local[ed.u] == static_cast<Vertex>(-1) || local[ed.v] == static_cast<Vertex>(-1)) {
      continue;
    }
    edges.push_back({local[ed.u], local[ed.v]});
    sub.edge_map.push_back(e);
  }
  sub.graph = Graph(vertices.size(), edges);
  return sub;
}

std::size_t spanning_forest_size(const Graph& g, const EdgeMask& removed) {
  DisjointSets ds(g.num_vertices());
  std::size_t merges = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (removed.contains(e)) continue;
    if (ds.unite(g.edge(e).u, g.edge(e).v)) ++merges;
  }
  return merges;
}

bool keeps_components_connected(const Graph& g, const EdgeMask& removed) {
  return spanning_forest_size(g, removed) == spanning_forest_size(g, g.empty_mask());
}

}  // namespace addspan
