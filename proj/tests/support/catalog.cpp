#include "catalog.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace addspan::testing {

namespace {

using Bits = std::uint32_t;

std::vector<std::pair<int, int>> pair_index(std::size_t n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(n); ++i) {
    for (int j = i + 1; j < static_cast<int>(n); ++j) out.emplace_back(i, j);
  }
  return out;
}

bool connected(std::size_t n, Bits bits, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::size_t parts = n;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if (!((bits >> e) & 1U)) continue;
    int a = find(pairs[e].first);
    int b = find(pairs[e].second);
    if (a != b) {
      root[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

std::vector<Graph> enumerate(std::size_t n) {
  auto pairs = pair_index(n);
  std::vector<std::vector<int>> slot(n, std::vector<int>(n, -1));
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    slot[pairs[e].first][pairs[e].second] = slot[pairs[e].second][pairs[e].first] =
        static_cast<int>(e);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<Bits> seen;
  std::vector<Graph> out;
  const Bits limit = Bits{1} << pairs.size();
  for (Bits bits = 0; bits < limit; ++bits) {
    if (!connected(n, bits, pairs)) continue;
    Bits canon = bits;
    for (const auto& p : perms) {
      Bits img = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((bits >> e) & 1U) img |= Bits{1} << slot[p[pairs[e].first]][p[pairs[e].second]];
      }
      canon = std::min(canon, img);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((canon >> e) & 1U) {
        edges.push_back({static_cast<Vertex>(pairs[e].first), static_cast<Vertex>(pairs[e].second)});
      }
    }
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace

const std::vector<Graph>& connected_graphs(std::size_t n) {
  static std::map<std::size_t, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate(n)).first;
  return it->second;
}

std::vector<Graph> connected_graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& part = connected_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<int> reference_bfs(std::size_t n, const std::vector<Edge>& edges, Vertex s) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> dist(n, -1);
  std::deque<Vertex> q{s};
  dist[s] = 0;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    for (Vertex y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
  }
  return dist;
}

Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (coin(rng) < p) edges.push_back({i, j});
      }
    }
    Graph g(n, edges);
    if (components(g).size() == 1) return g;
  }
}

std::vector<Edge> edges_without(const Graph& g, const EdgeMask& drop) {
  std::vector<Edge> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!drop.contains(e)) out.push_back(g.edge(e));
  }
  return out;
}

}  // namespace addspan::testing
