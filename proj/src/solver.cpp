#include "addspan/solver.hpp"

#include <algorithm>

#include "addspan/constructive.hpp"
#include "addspan/cycles.hpp"

namespace addspan {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::SmallF: return "small_f";
    case Branch::ManyCycles: return "many_cycles";
    case Branch::Oracle: return "oracle";
    case Branch::Constructive: return "constructive";
  }
  return "unknown";
}

Count binomial(Count n, Count r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (Count i = 0; i < r; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc >= kSaturated) return kSaturated;
  }
  return static_cast<Count>(acc);
}

namespace {

/// Lexicographic walk over k-subsets of `pool`. With `prune`, every prefix is
/// checked as well: feasible removal sets are closed under taking subsets, so
/// an infeasible prefix rules out all of its extensions.
class SubsetSearch {
 public:
  SubsetSearch(const SpannerChecker& checker, std::vector<EdgeId> pool, std::size_t k, bool prune)
      : checker_(checker),
        pool_(std::move(pool)),
        k_(k),
        prune_(prune),
        mask_(checker.graph().empty_mask()),
        base_forest_(spanning_forest_size(checker.graph(), mask_)) {}

  std::optional<EdgeMask> run() {
    if (k_ == 0) return mask_;
    if (pool_.size() < k_) return std::nullopt;
    if (descend(0, 0)) return mask_;
    return std::nullopt;
  }

  std::uint64_t examined() const { return examined_; }

 private:
  bool acceptable() {
    ++examined_;
    if (prune_ && spanning_forest_size(checker_.graph(), mask_) != base_forest_) return false;
    return checker_.admits(mask_);
  }

  bool descend(std::size_t start, std::size_t depth) {
    const std::size_t last = pool_.size() - (k_ - depth);
    for (std::size_t i = start; i <= last; ++i) {
      mask_.insert(pool_[i]);
      const bool complete = depth + 1 == k_;
      if (complete || prune_) {
        if (acceptable() && (complete || descend(i + 1, depth + 1))) return true;
      } else if (descend(i + 1, depth + 1)) {
        return true;
      }
      mask_.erase(pool_[i]);
    }
    return false;
  }

  const SpannerChecker& checker_;
  std::vector<EdgeId> pool_;
  std::size_t k_;
  bool prune_;
  EdgeMask mask_;
  std::size_t base_forest_;
  std::uint64_t examined_ = 0;
};

std::size_t as_size(Count c) {
  return c >= static_cast<Count>(SIZE_MAX) ? SIZE_MAX : static_cast<std::size_t>(c);
}

/// The disjoint-path / good-sequence construction on a family of short
/// cycles. nullopt when its preconditions do not hold.
std::optional<EdgeMask> construct(const Graph& g, int t, std::size_t k, const ThresholdTable& tb,
                                  const std::vector<Cycle>& cycles, bool best_effort) {
  try {
    std::vector<std::size_t> through(g.num_edges(), 0);
    for (const Cycle& c : cycles) {
      for (EdgeId e : c.edges()) ++through[e];
    }
    // A heavily shared edge: remove middle edges of detours around it.
    std::optional<EdgeId> heavy;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (static_cast<Count>(through[e]) >= tb.f1_prop) {
        heavy = e;
        break;
      }
    }
    if (!heavy && best_effort) {
      auto top = std::max_element(through.begin(), through.end());
      if (top != through.end() && *top >= k + static_cast<std::size_t>(t) + 1) {
        heavy = static_cast<EdgeId>(top - through.begin());
      }
    }
    if (heavy) {
      std::vector<Cycle> around;
      for (const Cycle& c : cycles) {
        if (c.contains_edge(*heavy)) around.push_back(c);
      }
      try {
        return middle_edge_removal(g, *heavy, around, k, t, best_effort).removed;
      } catch (const ConstructiveError& err) {
        if (err.kind() == ConstructiveError::Kind::InternalAssertionFailed) throw;
      }
    }

    // Otherwise many edge-disjoint cycles: order them, then pick along the order.
    auto disjoint = greedy_edge_disjoint(cycles, as_size(tb.n_disjoint));
    std::size_t p = as_size(tb.p);
    if (best_effort) p = std::min(p, disjoint.size());
    if (p == 0) return std::nullopt;
    CycleSeq seq = build_sequence(g, disjoint, t, p, best_effort);
    return sequence_removal(g, seq, t, k, best_effort).removed;
  } catch (const ConstructiveError& err) {
    if (err.kind() == ConstructiveError::Kind::InternalAssertionFailed) throw;
    return std::nullopt;
  }
}

/// Algorithm body shared by the additive and (alpha, beta) entry points.
/// `t` is the additive parameter that fixes the candidate set.
SolveResult solve_with(const Graph& g, int t, std::size_t k, const SpannerParams& params,
                       const SolveOptions& opts) {
  SolveResult out;
  out.removed = g.empty_mask();
  if (k == 0) {
    out.feasible = true;
    return out;
  }
  CandidateSet cand = candidate_edges(g, t);
  out.stats.candidate_edges = cand.members.count();
  const ThresholdTable tb = thresholds(t, static_cast<int>(std::min<std::size_t>(k, INT32_MAX)));
  const Count f4 = opts.f4_override.value_or(tb.f4);
  SpannerChecker checker(g, params);

  auto search = [&](std::vector<EdgeId> pool) {
    SubsetSearch s(checker, std::move(pool), k, /*prune=*/true);
    auto found = s.run();
    out.stats.subsets_examined += s.examined();
    return found;
  };
  auto accept = [&](EdgeMask mask, Branch branch) {
    if (!checker.admits(mask) || mask.count() != k || !mask.is_subset_of(cand.members)) {
      throw std::logic_error("solver produced an unverifiable removal set");
    }
    out.feasible = true;
    out.removed = std::move(mask);
    out.branch = branch;
    return out;
  };

  if (static_cast<Count>(out.stats.candidate_edges) > f4) {
    auto cycles = enumerate_short_cycles(g, t, as_size(tb.cycle_budget));
    out.stats.cycles_found = cycles.size();
    if (opts.mode == SolveMode::ConstructivePreferred) {
      if (auto mask = construct(g, t, k, tb, cycles, opts.best_effort_constructive)) {
        if (checker.admits(*mask)) return accept(std::move(*mask), Branch::Constructive);
      }
    }
    if (auto mask = search(union_of_edges(g, cycles).indices())) {
      return accept(std::move(*mask), Branch::ManyCycles);
    }
    out.stats.fell_back = true;
  }

  out.branch = Branch::SmallF;
  if (auto mask = search(cand.members.indices())) return accept(std::move(*mask), Branch::SmallF);
  return out;
}

}  // namespace

SolveResult solve_additive(const Graph& g, int t, std::size_t k, const SolveOptions& opts) {
  if (t < 1) throw std::invalid_argument("solve_additive needs t >= 1");
  return solve_with(g, t, k, SpannerParams::additive(t), opts);
}

SolveResult solve_ab(const Graph& g, const Rational& alpha, const Rational& beta, std::size_t k,
                     const SolveOptions& opts) {
  const SpannerParams params = SpannerParams::alpha_beta(alpha, beta);
  if (params.t() < 1) {
    // Every removed edge would need a detour of length <= 1.
    SolveResult out;
    out.removed = g.empty_mask();
    out.feasible = k == 0;
    return out;
  }
  return solve_with(g, params.t(), k, params, opts);
}

SolveResult solve_single(const Graph& g, const SpannerParams& params, std::size_t k,
                         const SolveOptions& opts) {
  if (params.is_additive()) {
    if (params.t() < 1) {
      SolveResult out;
      out.removed = g.empty_mask();
      out.feasible = k == 0;
      return out;
    }
    return solve_additive(g, params.t(), k, opts);
  }
  return solve_ab(g, params.alpha(), params.beta(), k, opts);
}

namespace {

void absorb(SolveStats& into, const SolveStats& from) {
  into.candidate_edges = std::max(into.candidate_edges, from.candidate_edges);
  into.cycles_found += from.cycles_found;
  into.subsets_examined += from.subsets_examined;
  into.fell_back = into.fell_back || from.fell_back;
}

int branch_rank(Branch b) {
  switch (b) {
    case Branch::SmallF: return 0;
    case Branch::ManyCycles: return 1;
    case Branch::Constructive: return 2;
    case Branch::Oracle: return 3;
  }
  return 0;
}

}  // namespace

MaxKResult solve_max_k(const Graph& g, const SpannerParams& params, std::size_t cap,
                       const SolveOptions& opts) {
  MaxKResult best;
  best.removed = g.empty_mask();
  const std::size_t rank = g.num_edges() - spanning_forest_size(g, g.empty_mask());
  const std::size_t limit = std::min(cap, rank);
  for (std::size_t k = 1; k <= limit; ++k) {
    SolveResult r = solve_single(g, params, k, opts);
    absorb(best.stats, r.stats);
    if (!r.feasible) break;
    best.k = k;
    best.removed = std::move(r.removed);
    best.branch = r.branch;
  }
  return best;
}

SolveResult oracle(const Graph& g, const SpannerParams& params, std::size_t k,
                   std::uint64_t budget) {
  SolveResult out;
  out.branch = Branch::Oracle;
  out.removed = g.empty_mask();
  const std::size_t rank = g.num_edges() - spanning_forest_size(g, g.empty_mask());
  if (k > rank) return out;
  if (binomial(g.num_edges(), k) > budget) {
    throw BudgetExceeded("C(" + std::to_string(g.num_edges()) + ", " + std::to_string(k) +
                         ") exceeds the oracle budget of " + std::to_string(budget));
  }
  std::vector<EdgeId> all(g.num_edges());
  for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
  SpannerChecker checker(g, params);
  SubsetSearch s(checker, std::move(all), k, /*prune=*/false);
  auto found = s.run();
  out.stats.subsets_examined = s.examined();
  if (found) {
    out.feasible = true;
    out.removed = std::move(*found);
  }
  return out;
}

SolveResult solve(const Graph& g, const SpannerParams& params, std::size_t k,
                  const SolveOptions& opts) {
  SolveResult out;
  out.removed = g.empty_mask();
  if (k == 0) {
    out.feasible = true;
    return out;
  }
  std::size_t collected = 0;
  bool any_branch = false;
  for (const auto& comp : components(g)) {
    if (collected >= k) break;
    InducedSubgraph sub = induced_subgraph(g, comp);
    if (sub.graph.num_edges() == 0) continue;
    MaxKResult part = solve_max_k(sub.graph, params, k - collected, opts);
    absorb(out.stats, part.stats);
    if (part.k == 0) continue;
    if (!any_branch || branch_rank(part.branch) > branch_rank(out.branch)) out.branch = part.branch;
    any_branch = true;
    // Any subset of a feasible removal set is feasible, so a prefix suffices.
    for (EdgeId local : part.removed.indices()) {
      if (collected == k) break;
      out.removed.insert(sub.edge_map[local]);
      ++collected;
    }
  }
  if (collected < k) {
    out.removed = g.empty_mask();
    return out;
  }
  if (!verify(g, out.removed, params).ok()) {
    throw std::logic_error("combined per-component removal failed verification");
  }
  out.feasible = true;
  return out;
}

}  // namespace addspan
