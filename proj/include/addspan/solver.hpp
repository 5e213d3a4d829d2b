#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "addspan/graph.hpp"
#include "addspan/rational.hpp"
#include "addspan/thresholds.hpp"
#include "addspan/verify.hpp"

namespace addspan {

enum class Branch { SmallF, ManyCycles, Oracle, Constructive };

std::string to_string(Branch b);

enum class SolveMode {
  /// Enumerate k-subsets in whichever branch the size of F selects.
  Exact,
  /// In the many-cycles branch, run the disjoint-path / sequence construction
  /// first and enumerate only if it does not apply.
  ConstructivePreferred,
};

struct SolveOptions {
  SolveMode mode = SolveMode::Exact;
  /// Replaces f4(t, k) in branch selection. Lets tests reach the many-cycles
  /// branch on small graphs.
  std::optional<Count> f4_override;
  /// Run the construction even below its guaranteed thresholds. Its output is
  /// verified either way.
  bool best_effort_constructive = false;
};

struct SolveStats {
  std::size_t candidate_edges = 0;
  std::size_t cycles_found = 0;
  std::uint64_t subsets_examined = 0;
  /// The many-cycles search came up empty (only possible with an overridden
  /// threshold) and the exhaustive search over F decided instead.
  bool fell_back = false;
};

struct SolveResult {
  bool feasible = false;
  EdgeMask removed;
  Branch branch = Branch::SmallF;
  SolveStats stats;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decides whether k edges can be removed keeping an additive t-spanner
/// (t >= 1). Feasible results are re-verified and lie inside the candidate
/// set; Infeasible only comes from a completed exhaustive search over it.
/// Returns the lexicographically smallest feasible mask of the searched pool.
SolveResult solve_additive(const Graph& g, int t, std::size_t k, const SolveOptions& opts = {});

/// Same question for dist_H <= alpha dist_G + beta, via t = floor(alpha+beta)-1.
/// t == 0 is infeasible for every k >= 1.
SolveResult solve_ab(const Graph& g, const Rational& alpha, const Rational& beta, std::size_t k,
                     const SolveOptions& opts = {});

/// Dispatches on params to solve_additive or solve_ab.
SolveResult solve_single(const Graph& g, const SpannerParams& params, std::size_t k,
                         const SolveOptions& opts = {});

struct MaxKResult {
  std::size_t k = 0;
  EdgeMask removed;
  Branch branch = Branch::SmallF;
  SolveStats stats;
};

/// Largest k <= cap with a feasible answer, found by stepping k upwards.
MaxKResult solve_max_k(const Graph& g, const SpannerParams& params,
                       std::size_t cap = static_cast<std::size_t>(-1),
                       const SolveOptions& opts = {});

/// Ground truth: every k-subset of all edges in lexicographic order, checked
/// with the verifier only. Throws BudgetExceeded when C(m, k) > budget, after
/// first rejecting k above the cycle rank (such removals always disconnect).
SolveResult oracle(const Graph& g, const SpannerParams& params, std::size_t k,
                   std::uint64_t budget = 50'000'000);

/// Whole-graph entry point: solves each component for its largest removable
/// count (capped by what is still needed) and combines.
SolveResult solve(const Graph& g, const SpannerParams& params, std::size_t k,
                  const SolveOptions& opts = {});

/// C(n, r), saturating at kSaturated.
Count binomial(Count n, Count r);

}  // namespace addspan
