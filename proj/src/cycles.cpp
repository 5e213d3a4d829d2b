#include "addspan/cycles.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace addspan {

namespace {

/// BFS with a visit stamp so repeated searches over one graph skip the O(n)
/// reset.
class StampedBfs {
 public:
  explicit StampedBfs(std::size_t n) : stamp_(n, 0), dist_(n, kInf) {}

  /// Distance from `source` to `target` in G minus `skip_edge`, if <= cap.
  bool reaches_within(const Graph& g, Vertex source, Vertex target, EdgeId skip_edge,
                      Dist cap) {
    begin();
    visit(source, 0);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex x = queue_[head];
      Dist next = dist_[x] + 1;
      if (next > cap) break;
      for (const Arc& arc : g.neighbors(x)) {
        if (arc.edge == skip_edge || seen(arc.to)) continue;
        if (arc.to == target) return true;
        visit(arc.to, next);
      }
    }
    return false;
  }

  /// Fills distances from `source` within the vertices accepted by `keep`,
  /// up to `cap` hops, skipping `skip_edge`.
  template <typename Keep>
  void run(const Graph& g, Vertex source, EdgeId skip_edge, Dist cap, Keep keep) {
    begin();
    visit(source, 0);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex x = queue_[head];
      Dist next = dist_[x] + 1;
      if (next > cap) break;
      for (const Arc& arc : g.neighbors(x)) {
        if (arc.edge == skip_edge || seen(arc.to) || !keep(arc.to)) continue;
        visit(arc.to, next);
      }
    }
  }

  Dist dist(Vertex v) const { return stamp_[v] == current_ ? dist_[v] : kInf; }

 private:
  void begin() {
    ++current_;
    queue_.clear();
  }
  bool seen(Vertex v) const { return stamp_[v] == current_; }
  void visit(Vertex v, Dist d) {
    stamp_[v] = current_;
    dist_[v] = d;
    queue_.push_back(v);
  }

  std::uint32_t current_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::vector<Dist> dist_;
  std::vector<Vertex> queue_;
};

constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

}  // namespace

CandidateSet candidate_edges(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("candidate set needs t >= 1");
  CandidateSet out{g.empty_mask(), t};
  StampedBfs bfs(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (bfs.reaches_within(g, ed.u, ed.v, e, t + 1)) out.members.insert(e);
  }
  return out;
}

Cycle Cycle::from_vertices(const Graph& g, std::vector<Vertex> walk) {
  const std::size_t len = walk.size();
  if (len < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  {
    std::vector<Vertex> sorted = walk;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("cycle repeats a vertex");
    }
  }
  auto smallest = std::min_element(walk.begin(), walk.end());
  std::rotate(walk.begin(), smallest, walk.end());
  if (walk[1] > walk.back()) std::reverse(walk.begin() + 1, walk.end());

  Cycle c;
  c.vertices_ = std::move(walk);
  c.edges_.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    Vertex a = c.vertices_[i];
    Vertex b = c.vertices_[(i + 1) % len];
    auto e = g.find_edge(a, b);
    if (!e) {
      throw std::invalid_argument("cycle uses non-edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
    }
    c.edges_.push_back(*e);
  }
  return c;
}

bool Cycle::contains_edge(EdgeId e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

bool Cycle::contains_vertex(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::vector<Cycle> enumerate_short_cycles(const Graph& g, int t, std::size_t cap) {
  if (t < 1) throw std::invalid_argument("cycle enumeration needs t >= 1");
  std::vector<Cycle> out;
  if (cap == 0) return out;
  const Dist max_len = t + 2;
  const std::size_t n = g.num_vertices();
  StampedBfs to_start(n);
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);

  for (Vertex s = 0; s < n && out.size() < cap; ++s) {
    // Distances back to s inside the vertices >= s bound how far a partial
    // path may still wander.
    to_start.run(g, s, kNoEdge, max_len, [s](Vertex v) { return v >= s; });

    path.assign(1, s);
    on_path[s] = 1;
    auto extend = [&](auto&& self, Vertex x) -> void {
      const auto used = static_cast<Dist>(path.size() - 1);
      for (const Arc& arc : g.neighbors(x)) {
        if (out.size() >= cap) return;
        Vertex y = arc.to;
        if (y == s) {
          if (path.size() >= 3 && path[1] < x) {
            std::vector<Vertex> cyc = path;
            out.push_back(Cycle::from_vertices(g, std::move(cyc)));
          }
          continue;
        }
        if (y < s || on_path[y]) continue;
        Dist back = to_start.dist(y);
        if (!finite(back) || used + 1 + back > max_len) continue;
        path.push_back(y);
        on_path[y] = 1;
        self(self, y);
        on_path[y] = 0;
        path.pop_back();
      }
    };
    extend(extend, s);
    on_path[s] = 0;
  }
  return out;
}

std::vector<Cycle> cycles_through_edge(const Graph& g, EdgeId e, int t, std::size_t cap) {
  if (t < 1) throw std::invalid_argument("cycle enumeration needs t >= 1");
  std::vector<Cycle> out;
  const Edge& ed = g.edge(e);
  const Dist max_path = t + 1;
  const std::size_t n = g.num_vertices();
  StampedBfs to_end(n);
  to_end.run(g, ed.v, e, max_path, [](Vertex) { return true; });

  std::vector<Vertex> path{ed.u};
  std::vector<char> on_path(n, 0);
  on_path[ed.u] = 1;
  auto extend = [&](auto&& self, Vertex x) -> void {
    const auto used = static_cast<Dist>(path.size() - 1);
    for (const Arc& arc : g.neighbors(x)) {
      if (out.size() >= cap) return;
      if (arc.edge == e || on_path[arc.to]) continue;
      Vertex y = arc.to;
      if (y == ed.v) {
        std::vector<Vertex> cyc = path;
        cyc.push_back(y);
        out.push_back(Cycle::from_vertices(g, std::move(cyc)));
        continue;
      }
      Dist back = to_end.dist(y);
      if (!finite(back) || used + 1 + back > max_path) continue;
      path.push_back(y);
      on_path[y] = 1;
      self(self, y);
      on_path[y] = 0;
      path.pop_back();
    }
  };
  if (cap > 0) extend(extend, ed.u);
  return out;
}

std::vector<Cycle> greedy_edge_disjoint(std::span<const Cycle> cycles, std::size_t target) {
  std::vector<Cycle> out;
  std::unordered_set<EdgeId> used;
  for (const Cycle& c : cycles) {
    if (out.size() >= target) break;
    bool clash = std::any_of(c.edges().begin(), c.edges().end(),
                             [&](EdgeId e) { return used.contains(e); });
    if (clash) continue;
    used.insert(c.edges().begin(), c.edges().end());
    out.push_back(c);
  }
  return out;
}

EdgeMask union_of_edges(const Graph& g, std::span<const Cycle> cycles) {
  EdgeMask out = g.empty_mask();
  for (const Cycle& c : cycles) {
    for (EdgeId e : c.edges()) out.insert(e);
  }
  return out;
}

}  // namespace addspan
