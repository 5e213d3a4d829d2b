#include "addspan/constructive.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "addspan/verify.hpp"

namespace addspan {

namespace {

using Kind = ConstructiveError::Kind;

[[noreturn]] void fail(Kind kind, const std::string& what) { throw ConstructiveError(kind, what); }

bool covers(std::size_t have, Count need) { return static_cast<Count>(have) >= need; }

std::vector<EdgeId> edges_of(const Graph& g, const VertexPath& path) {
  std::vector<EdgeId> out;
  out.reserve(path.size());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.push_back(g.edge_between(path[i], path[i + 1]));
  return out;
}

int length_of(const VertexPath& path) { return static_cast<int>(path.size()) - 1; }

void validate_family(const Graph& g, const PathFamily& family) {
  if (family.u == family.v) throw std::invalid_argument("path family endpoints must differ");
  if (family.bound < 1) throw std::invalid_argument("path family bound must be >= 1");
  for (const VertexPath& p : family.paths) {
    if (p.size() < 2 || p.front() != family.u || p.back() != family.v) {
      throw std::invalid_argument("path does not join the family endpoints");
    }
    if (length_of(p) > family.bound) throw std::invalid_argument("path exceeds the length bound");
    std::vector<Vertex> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("path repeats a vertex");
    }
    edges_of(g, p);  // throws on a non-edge
  }
}

std::vector<VertexPath> greedy_paths(const Graph& g, const std::vector<VertexPath>& paths,
                                     std::size_t k) {
  std::vector<VertexPath> out;
  std::unordered_set<EdgeId> used;
  for (const VertexPath& p : paths) {
    if (out.size() == k) break;
    auto es = edges_of(g, p);
    if (std::any_of(es.begin(), es.end(), [&](EdgeId e) { return used.contains(e); })) continue;
    used.insert(es.begin(), es.end());
    out.push_back(p);
  }
  return out;
}

struct Extracted {
  Vertex a;
  Vertex b;
  std::vector<VertexPath> paths;
  int splits = 0;
};

std::optional<Extracted> extract(const Graph& g, Vertex a, Vertex b, int bound,
                                 std::vector<VertexPath> paths, std::size_t k) {
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  const Count kk = k;
  const Count need = f1(kk, static_cast<Count>(bound));

  if (bound >= 2) {
    std::unordered_map<EdgeId, std::size_t> uses;
    for (const VertexPath& p : paths) {
      for (EdgeId e : edges_of(g, p)) ++uses[e];
    }
    // Heavy: in at least f1(k, l) / (k l) of the paths.
    std::optional<EdgeId> heavy;
    for (auto [e, c] : uses) {
      if (static_cast<unsigned __int128>(c) * kk * static_cast<Count>(bound) >= need &&
          (!heavy || e < *heavy)) {
        heavy = e;
      }
    }
    if (heavy) {
      Vertex x = g.edge(*heavy).u;
      if (x == a || x == b) x = g.edge(*heavy).v;
      if (x != a && x != b) {
        std::vector<std::set<VertexPath>> prefixes(static_cast<std::size_t>(bound));
        std::vector<std::set<VertexPath>> suffixes(static_cast<std::size_t>(bound));
        for (const VertexPath& p : paths) {
          auto es = edges_of(g, p);
          if (std::find(es.begin(), es.end(), *heavy) == es.end()) continue;
          auto pos = static_cast<std::size_t>(std::find(p.begin(), p.end(), x) - p.begin());
          prefixes[pos].insert(VertexPath(p.begin(), p.begin() + static_cast<long>(pos) + 1));
          suffixes[p.size() - 1 - pos].insert(VertexPath(p.begin() + static_cast<long>(pos), p.end()));
        }
        auto recurse = [&](Vertex from, Vertex to, int len,
                           const std::set<VertexPath>& part) -> std::optional<Extracted> {
          auto sub = extract(g, from, to, len, {part.begin(), part.end()}, k);
          if (sub) ++sub->splits;
          return sub;
        };
        for (int i = 1; i < bound; ++i) {
          for (int j = 1; i + j <= bound; ++j) {
            const auto& pre = prefixes[static_cast<std::size_t>(i)];
            const auto& suf = suffixes[static_cast<std::size_t>(j)];
            const Count fi = f1(kk, static_cast<Count>(i));
            const Count fj = f1(kk, static_cast<Count>(j));
            auto product = static_cast<unsigned __int128>(pre.size()) * suf.size();
            if (product < static_cast<unsigned __int128>(fi) * fj) continue;
            if (covers(pre.size(), fi)) {
              if (auto sub = recurse(a, x, i, pre)) return sub;
            }
            if (covers(suf.size(), fj)) {
              if (auto sub = recurse(x, b, j, suf)) return sub;
            }
          }
        }
      }
    }
  }

  auto picked = greedy_paths(g, paths, k);
  if (picked.size() == k) return Extracted{a, b, std::move(picked), 0};
  return std::nullopt;
}

bool pairwise_edge_disjoint(const Graph& g, const std::vector<VertexPath>& paths) {
  std::unordered_set<EdgeId> used;
  for (const VertexPath& p : paths) {
    for (EdgeId e : edges_of(g, p)) {
      if (!used.insert(e).second) return false;
    }
  }
  return true;
}

/// Shortest path from `from` to `to`, each step going to the smallest
/// neighbor that is one hop closer to `to`.
VertexPath shortest_path(const Graph& g, Vertex from, Vertex to) {
  auto d = bfs_dist(g, to, g.empty_mask());
  if (!finite(d[from])) throw std::logic_error("shortest_path between disconnected vertices");
  VertexPath out{from};
  Vertex cur = from;
  while (cur != to) {
    for (const Arc& arc : g.neighbors(cur)) {
      if (d[arc.to] == d[cur] - 1) {
        cur = arc.to;
        break;
      }
    }
    out.push_back(cur);
  }
  return out;
}

}  // namespace

DisjointPathsResult find_disjoint_paths(const Graph& g, const PathFamily& family, std::size_t k,
                                        bool best_effort) {
  if (k == 0) throw std::invalid_argument("find_disjoint_paths needs k >= 1");
  validate_family(g, family);
  std::set<VertexPath> distinct(family.paths.begin(), family.paths.end());
  const Count need = f1(k, static_cast<Count>(family.bound));
  if (!best_effort && !covers(distinct.size(), need)) {
    fail(Kind::InsufficientPaths, "path family has " + std::to_string(distinct.size()) +
                                      " members, fewer than f1(k, l) = " + std::to_string(need));
  }

  DisjointPathsResult result;
  auto found = extract(g, family.u, family.v, family.bound, {distinct.begin(), distinct.end()}, k);
  if (!found) {
    if (best_effort) return result;
    fail(Kind::InternalAssertionFailed, "no disjoint paths despite a sufficient family");
  }

  result.u_prime = found->a;
  result.v_prime = found->b;
  result.paths = std::move(found->paths);
  result.splits = found->splits;
  const Dist du = bfs_dist(g, family.u, g.empty_mask())[result.u_prime];
  const Dist dv = bfs_dist(g, family.v, g.empty_mask())[result.v_prime];
  result.residual_bound = family.bound - du - dv;

  bool short_enough = std::all_of(result.paths.begin(), result.paths.end(), [&](const VertexPath& p) {
    return length_of(p) <= result.residual_bound && p.front() == result.u_prime &&
           p.back() == result.v_prime;
  });
  if (!short_enough || !pairwise_edge_disjoint(g, result.paths) || result.paths.size() != k) {
    fail(Kind::InternalAssertionFailed, "extracted paths break the residual bound or overlap");
  }
  result.success = true;
  return result;
}

MiddleEdgeResult middle_edge_removal(const Graph& g, EdgeId e,
                                     std::span<const Cycle> cycles_through_e, std::size_t k,
                                     int t, bool best_effort) {
  if (k == 0 || t < 1) throw std::invalid_argument("middle_edge_removal needs k >= 1 and t >= 1");
  const Vertex u = g.edge(e).u;
  const Vertex v = g.edge(e).v;
  const auto kt = static_cast<Count>(k) + static_cast<Count>(t) + 1;
  const Count need = f1(kt, static_cast<Count>(t) + 1);

  std::vector<VertexPath> detours;
  detours.reserve(cycles_through_e.size());
  for (const Cycle& c : cycles_through_e) {
    if (!c.contains_edge(e) || c.length() > static_cast<std::size_t>(t) + 2) {
      fail(Kind::PreconditionUnmet, "cycle misses the edge or is longer than t+2");
    }
    const auto& cv = c.vertices();
    const std::size_t len = cv.size();
    std::size_t at = static_cast<std::size_t>(std::find(cv.begin(), cv.end(), u) - cv.begin());
    // Walk away from v so the detour avoids e.
    bool forward = cv[(at + 1) % len] != v;
    VertexPath p;
    for (std::size_t step = 0; step < len; ++step) {
      p.push_back(cv[forward ? (at + step) % len : (at + len - step) % len]);
    }
    detours.push_back(std::move(p));
  }
  if (!best_effort && !covers(detours.size(), need)) {
    fail(Kind::PreconditionUnmet, "need f1(k+t+1, t+1) = " + std::to_string(need) +
                                      " cycles through the edge, got " +
                                      std::to_string(detours.size()));
  }

  PathFamily family{u, v, t + 1, std::move(detours)};
  DisjointPathsResult bundle;
  try {
    bundle = find_disjoint_paths(g, family, static_cast<std::size_t>(kt), best_effort);
  } catch (const ConstructiveError& err) {
    if (err.kind() == Kind::InsufficientPaths) fail(Kind::PreconditionUnmet, err.what());
    throw;
  }
  if (!bundle.success) fail(Kind::Failed, "no bundle of k+t+1 disjoint detours found");

  MiddleEdgeResult out;
  out.u_prime = bundle.u_prime;
  out.v_prime = bundle.v_prime;
  out.t_prime = bundle.residual_bound;

  std::unordered_set<EdgeId> blocked{e};
  for (EdgeId q : edges_of(g, shortest_path(g, u, bundle.u_prime))) blocked.insert(q);
  for (EdgeId q : edges_of(g, shortest_path(g, v, bundle.v_prime))) blocked.insert(q);

  out.removed = g.empty_mask();
  for (const VertexPath& p : bundle.paths) {
    if (out.edges.size() == k) break;
    auto es = edges_of(g, p);
    if (std::any_of(es.begin(), es.end(), [&](EdgeId q) { return blocked.contains(q); })) continue;
    // floor((len-1)/2) edges before the middle edge, ceil((len-1)/2) after.
    const std::size_t before = (es.size() - 1) / 2;
    out.edges.push_back(es[before]);
    out.removed.insert(es[before]);
  }
  if (out.edges.size() != k) {
    fail(Kind::InternalAssertionFailed, "fewer than k detours avoid the connecting paths");
  }
  if (!verify(g, out.removed, SpannerParams::additive(t)).ok()) {
    fail(Kind::InternalAssertionFailed, "middle-edge removal is not an additive t-spanner");
  }
  return out;
}

std::vector<EdgeId> SPForest::path_edges(Vertex v) const {
  std::vector<EdgeId> out;
  if (!reachable(v)) return out;
  while (parent[v] != kNone) {
    out.push_back(parent_edge[v]);
    v = parent[v];
  }
  return out;
}

EdgeMask SPForest::edge_union(std::size_t num_edges) const {
  EdgeMask out(num_edges);
  for (Vertex v : order) {
    if (parent[v] != kNone) out.insert(parent_edge[v]);
  }
  return out;
}

SPForest sp_forest(const Graph& g, const Cycle& c) {
  const std::size_t n = g.num_vertices();
  SPForest f;
  f.parent.assign(n, SPForest::kNone);
  f.parent_edge.assign(n, static_cast<EdgeId>(-1));
  f.depth.assign(n, kInf);
  std::vector<Vertex> roots = c.vertices();
  std::sort(roots.begin(), roots.end());
  for (Vertex r : roots) {
    f.depth[r] = 0;
    f.order.push_back(r);
  }
  for (std::size_t head = 0; head < f.order.size(); ++head) {
    Vertex x = f.order[head];
    for (const Arc& arc : g.neighbors(x)) {
      if (finite(f.depth[arc.to])) continue;
      f.depth[arc.to] = f.depth[x] + 1;
      f.parent[arc.to] = x;
      f.parent_edge[arc.to] = arc.edge;
      f.order.push_back(arc.to);
    }
  }
  return f;
}

CycleSeq make_sequence(const Graph& g, std::vector<Cycle> cycles, int t) {
  std::unordered_set<EdgeId> used;
  for (const Cycle& c : cycles) {
    if (c.length() > static_cast<std::size_t>(t) + 2) {
      throw std::invalid_argument("sequence cycle longer than t+2");
    }
    for (EdgeId e : c.edges()) {
      if (!used.insert(e).second) throw std::invalid_argument("sequence cycles share an edge");
    }
  }
  CycleSeq seq;
  seq.t = t;
  seq.forests.reserve(cycles.size());
  for (const Cycle& c : cycles) seq.forests.push_back(sp_forest(g, c));
  seq.cycles = std::move(cycles);
  return seq;
}

std::optional<StarWitness> check_star(const Graph&, const CycleSeq& seq) {
  const std::size_t p = seq.cycles.size();
  std::unordered_map<EdgeId, std::size_t> position;
  for (std::size_t j = 0; j < p; ++j) {
    for (EdgeId e : seq.cycles[j].edges()) position.emplace(e, j);
  }
  std::vector<Vertex> first_hit(p);
  for (std::size_t h = 0; h < p; ++h) {
    std::vector<Vertex> starts = seq.cycles[h].vertices();
    std::sort(starts.begin(), starts.end());
    for (std::size_t i = h + 1; i < p; ++i) {
      const SPForest& forest = seq.forests[i];
      std::fill(first_hit.begin(), first_hit.end(), SPForest::kNone);
      for (Vertex v : starts) {
        for (EdgeId e : forest.path_edges(v)) {
          auto it = position.find(e);
          if (it == position.end() || it->second <= i) continue;
          if (first_hit[it->second] == SPForest::kNone) first_hit[it->second] = v;
        }
      }
      for (std::size_t j = i + 1; j < p; ++j) {
        if (first_hit[j] != SPForest::kNone) return StarWitness{h, i, j, first_hit[j]};
      }
    }
  }
  return std::nullopt;
}

namespace {

/// Square bit matrix over cycle indices.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}
  void set(std::size_t r, std::size_t c) { bits_[r * stride_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  bool test(std::size_t r, std::size_t c) const {
    return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
};

constexpr std::size_t kNoCycle = static_cast<std::size_t>(-1);

/// For one forest: jump[v] is the nearest vertex w on P(v, C) (v itself
/// included) whose parent edge lies on a family cycle. Walking the jumps lists
/// the family cycles a path crosses without visiting its other edges.
std::vector<Vertex> cycle_edge_jumps(const SPForest& f, const std::vector<std::size_t>& cycle_of_edge) {
  std::vector<Vertex> jump(f.parent.size(), SPForest::kNone);
  for (Vertex v : f.order) {
    if (f.parent[v] == SPForest::kNone) continue;
    jump[v] = cycle_of_edge[f.parent_edge[v]] != kNoCycle ? v : jump[f.parent[v]];
  }
  return jump;
}

/// Family cycles crossed by the chosen paths from the vertices of `from`.
std::vector<std::size_t> crossed(const Cycle& from, const SPForest& f, const std::vector<Vertex>& jump,
                                 const std::vector<std::size_t>& cycle_of_edge) {
  std::vector<std::size_t> out;
  for (Vertex v : from.vertices()) {
    for (Vertex w = jump[v]; w != SPForest::kNone; w = jump[f.parent[w]]) {
      out.push_back(cycle_of_edge[f.parent_edge[w]]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CycleSeq build_sequence(const Graph& g, std::span<const Cycle> disjoint, int t, std::size_t p,
                        bool best_effort) {
  if (t < 1 || p == 0) throw std::invalid_argument("build_sequence needs t >= 1 and p >= 1");
  const std::size_t c = disjoint.size();
  std::vector<std::size_t> cycle_of_edge(g.num_edges(), kNoCycle);
  for (std::size_t idx = 0; idx < c; ++idx) {
    const Cycle& cyc = disjoint[idx];
    if (cyc.length() > static_cast<std::size_t>(t) + 2) {
      fail(Kind::PreconditionUnmet, "cycle longer than t+2");
    }
    for (EdgeId e : cyc.edges()) {
      if (cycle_of_edge[e] != kNoCycle) fail(Kind::PreconditionUnmet, "cycles share an edge");
      cycle_of_edge[e] = idx;
    }
  }
  const Count need = f2(static_cast<Count>(t), p);
  if (!best_effort && !covers(c, need)) {
    fail(Kind::PreconditionUnmet, "need f2(t, p) = " + std::to_string(need) +
                                      " edge-disjoint cycles, got " + std::to_string(c));
  }
  if (c < p) fail(best_effort ? Kind::Failed : Kind::PreconditionUnmet, "fewer cycles than p");

  auto finish = [&](std::vector<std::size_t> picked, SequenceCase how) {
    std::vector<Cycle> chosen;
    for (std::size_t idx : picked) chosen.push_back(disjoint[idx]);
    CycleSeq seq = make_sequence(g, std::move(chosen), t);
    seq.how = how;
    if (auto w = check_star(g, seq)) {
      fail(Kind::InternalAssertionFailed,
           "constructed sequence violates the ordering condition at (" + std::to_string(w->h) +
               "," + std::to_string(w->i) + "," + std::to_string(w->j) + ")");
    }
    return seq;
  };

  if (p == 1) return finish({0}, SequenceCase::Trivial);

  const auto long_path = static_cast<Count>(3 * t + 1) * p;
  const auto spacing = static_cast<std::size_t>(3 * t + 1);
  // 3p^2 |S| >= |C| puts a pair in the forbidden-pair family.
  const auto pair_scale = static_cast<unsigned __int128>(3) * p * p;
  BitMatrix forbidden_pair(c);
  std::vector<std::size_t> pair_degree(c, 0);
  std::vector<std::size_t> crossings(g.num_vertices());
  std::vector<std::size_t> seen_by(c);

  for (std::size_t star = 0; star < c; ++star) {
    SPForest f = sp_forest(g, disjoint[star]);

    // Long-path case: some P(v, C*) runs over >= (3t+1)p family edges.
    std::fill(crossings.begin(), crossings.end(), 0);
    std::optional<Vertex> deep;
    for (Vertex v : f.order) {
      if (f.parent[v] == SPForest::kNone) continue;
      crossings[v] = crossings[f.parent[v]] + (cycle_of_edge[f.parent_edge[v]] != kNoCycle ? 1 : 0);
      if (crossings[v] >= long_path && (!deep || v < *deep)) deep = v;
    }
    if (deep) {
      std::vector<EdgeId> path = f.path_edges(*deep);
      std::vector<std::size_t> picked;
      std::vector<std::size_t> anchors;
      for (std::size_t pos = 0; pos < path.size() && picked.size() < p; ++pos) {
        if (cycle_of_edge[path[pos]] == kNoCycle) continue;
        if (!anchors.empty() && pos < anchors.back() + spacing) continue;
        anchors.push_back(pos);
        picked.push_back(cycle_of_edge[path[pos]]);
      }
      if (picked.size() != p) {
        fail(Kind::InternalAssertionFailed, "long path yielded too few spaced cycles");
      }
      CycleSeq seq = finish(std::move(picked), SequenceCase::LongPath);
      seq.anchors = std::move(anchors);
      return seq;
    }

    auto jump = cycle_edge_jumps(f, cycle_of_edge);
    std::fill(seen_by.begin(), seen_by.end(), kNoCycle);
    for (std::size_t h = 0; h < c; ++h) {
      std::size_t hits = 0;
      for (Vertex v : disjoint[h].vertices()) {
        for (Vertex w = jump[v]; w != SPForest::kNone; w = jump[f.parent[w]]) {
          std::size_t idx = cycle_of_edge[f.parent_edge[w]];
          if (seen_by[idx] != h) {
            seen_by[idx] = h;
            ++hits;
          }
        }
      }
      if (pair_scale * hits >= c) {
        forbidden_pair.set(h, star);
        ++pair_degree[h];
      }
    }
  }

  // Forbidden-ordering case: grow the sequence greedily, never taking a cycle
  // in a forbidden single, pair, or triple with what is already chosen.
  const auto single_scale = static_cast<unsigned __int128>(3) * p;
  std::vector<char> forbidden_single(c, 0);
  std::size_t singles = 0;
  std::size_t pairs = 0;
  for (std::size_t h = 0; h < c; ++h) {
    pairs += pair_degree[h];
    if (single_scale * pair_degree[h] >= c) {
      forbidden_single[h] = 1;
      ++singles;
    }
  }

  std::vector<std::size_t> picked;
  std::vector<SPForest> picked_forests;
  std::vector<std::vector<Vertex>> picked_jumps;
  // crossed_sets[b][a]: family cycles crossed from picked[a] towards picked[b].
  std::vector<std::vector<std::vector<std::size_t>>> crossed_sets;
  std::vector<char> in_seq(c, 0);
  while (picked.size() < p) {
    std::optional<std::size_t> next;
    for (std::size_t cand = 0; cand < c && !next; ++cand) {
      if (in_seq[cand] || forbidden_single[cand]) continue;
      bool ok = std::none_of(picked.begin(), picked.end(),
                             [&](std::size_t h) { return forbidden_pair.test(h, cand); });
      for (std::size_t b = 0; ok && b < picked.size(); ++b) {
        for (std::size_t a = 0; ok && a < b; ++a) {
          ok = !std::binary_search(crossed_sets[b][a].begin(), crossed_sets[b][a].end(), cand);
        }
      }
      if (ok) next = cand;
    }
    if (!next) {
      fail(best_effort ? Kind::Failed : Kind::InternalAssertionFailed,
           "no admissible cycle to extend the sequence");
    }
    SPForest f = sp_forest(g, disjoint[*next]);
    auto jump = cycle_edge_jumps(f, cycle_of_edge);
    std::vector<std::vector<std::size_t>> towards_next;
    for (std::size_t a = 0; a < picked.size(); ++a) {
      towards_next.push_back(crossed(disjoint[picked[a]], f, jump, cycle_of_edge));
    }
    crossed_sets.push_back(std::move(towards_next));
    picked.push_back(*next);
    in_seq[*next] = 1;
  }

  CycleSeq seq = finish(std::move(picked), SequenceCase::Forbidden);
  seq.forbidden_singles = singles;
  seq.forbidden_pairs = pairs;
  return seq;
}

SequenceRemovalResult sequence_removal(const Graph& g, const CycleSeq& seq, int t, std::size_t k,
                                       bool best_effort) {
  if (t < 1 || k == 0) throw std::invalid_argument("sequence_removal needs t >= 1 and k >= 1");
  const std::size_t p = seq.cycles.size();
  const Count need = f3(static_cast<Count>(t), k);
  if (!best_effort && !covers(p, need)) {
    fail(Kind::PreconditionUnmet, "sequence of " + std::to_string(p) +
                                      " cycles is shorter than f3(t, k) = " + std::to_string(need));
  }
  for (const Cycle& c : seq.cycles) {
    if (c.length() > static_cast<std::size_t>(t) + 2) fail(Kind::PreconditionUnmet, "cycle longer than t+2");
  }
  if (check_star(g, seq)) fail(Kind::PreconditionUnmet, "sequence violates the ordering condition");

  std::vector<EdgeMask> forest_edges;
  forest_edges.reserve(p);
  for (const SPForest& f : seq.forests) forest_edges.push_back(f.edge_union(g.num_edges()));

  SequenceRemovalResult out;
  out.removed = g.empty_mask();
  std::vector<std::size_t> live(p);
  for (std::size_t i = 0; i < p; ++i) live[i] = i;
  out.live_sizes.push_back(live.size());

  const auto width = static_cast<Count>(t) + 2;
  for (std::size_t step = 1; step <= k; ++step) {
    if (live.empty()) {
      fail(best_effort ? Kind::Failed : Kind::InternalAssertionFailed, "ran out of live cycles");
    }
    const std::size_t pos = live.front();
    std::vector<std::size_t> rest(live.begin() + 1, live.end());

    // Edge of this cycle kept clear of the most remaining forests; ties go to
    // the smallest edge index.
    std::optional<EdgeId> best;
    std::size_t best_score = 0;
    for (EdgeId e : seq.cycles[pos].edges()) {
      auto score = static_cast<std::size_t>(std::count_if(
          rest.begin(), rest.end(), [&](std::size_t j) { return !forest_edges[j].contains(e); }));
      if (!best || score > best_score || (score == best_score && e < *best)) {
        best = e;
        best_score = score;
      }
    }
    std::erase_if(rest, [&](std::size_t j) { return forest_edges[j].contains(*best); });
    live = std::move(rest);

    out.edges.push_back(*best);
    out.taken_from.push_back(pos);
    out.removed.insert(*best);
    out.live_sizes.push_back(live.size());

    // |I_i| >= (k-i)(t+2)^(k-i-1) while edges remain to be chosen.
    if (!best_effort && step < k) {
      Count floor_size = saturating_mul(k - step, saturating_pow(width, k - step - 1));
      if (static_cast<Count>(live.size()) < floor_size) {
        fail(Kind::InternalAssertionFailed,
             "live set shrank below its guaranteed size at step " + std::to_string(step));
      }
    }
  }

  if (!verify(g, out.removed, SpannerParams::additive(t)).ok()) {
    fail(Kind::InternalAssertionFailed, "sequence removal is not an additive t-spanner");
  }
  return out;
}

}  // namespace addspan
