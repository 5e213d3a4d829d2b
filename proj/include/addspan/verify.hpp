#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addspan/graph.hpp"
#include "addspan/rational.hpp"

namespace addspan {

/// Either an additive stretch t, or a pair (alpha, beta) bounding
/// dist_H <= alpha * dist_G + beta. For (alpha, beta) the associated additive
/// parameter is floor(alpha + beta) - 1: the only edges a solution may remove
/// lie on cycles of length at most floor(alpha + beta) + 1.
class SpannerParams {
 public:
  static SpannerParams additive(int t);
  static SpannerParams alpha_beta(Rational alpha, Rational beta);

  bool is_additive() const { return additive_; }

  /// Additive stretch, or the derived value for (alpha, beta).
  int t() const { return t_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }

  /// Whether a pair at distance `dist_g` in G may sit at `dist_h` in H.
  /// `dist_g` must be finite.
  bool allows(Dist dist_g, Dist dist_h) const;

  std::string describe() const;

 private:
  SpannerParams() = default;

  bool additive_ = true;
  int t_ = 0;
  Rational alpha_{1};
  Rational beta_{0};
};

struct Violation {
  Vertex x;
  Vertex y;
  Dist dist_in_g;
  Dist dist_in_h;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyResult {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Checks many removal sets against one graph. Distances in G are computed
/// once; each query runs BFS in H only from sources whose G-shortest paths can
/// touch a removed edge (a source s with dist(s,a) == dist(s,b) for every
/// removed edge ab keeps its whole distance row).
class SpannerChecker {
 public:
  SpannerChecker(const Graph& g, SpannerParams params);

  const Graph& graph() const { return *g_; }
  const SpannerParams& params() const { return params_; }

  /// Lexicographically smallest violating pair (x < y), if any.
  std::optional<Violation> first_violation(const EdgeMask& removed) const;
  bool admits(const EdgeMask& removed) const { return !first_violation(removed); }

  /// Distance in G; kInf across components.
  Dist dist_g(Vertex a, Vertex b) const;

 private:
  static constexpr std::size_t kMatrixLimit = 4096;

  const Graph* g_;
  SpannerParams params_;
  bool has_matrix_ = false;
  DistMatrix dist_g_;
  mutable std::vector<Dist> scratch_g_;
  mutable std::vector<Dist> scratch_h_;
  mutable std::vector<Vertex> queue_;
};

/// Precondition: removed.universe() == g.num_edges().
VerifyResult verify(const Graph& g, const EdgeMask& removed, const SpannerParams& params);

/// max over pairs connected in G of dist_H - dist_G, or kInf when H splits a
/// component of G.
Dist max_additive_stretch(const Graph& g, const EdgeMask& removed);

}  // namespace addspan
