#include "addspan/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace addspan {

SpannerParams SpannerParams::additive(int t) {
  if (t < 0) throw std::invalid_argument("additive stretch must be non-negative");
  SpannerParams p;
  p.additive_ = true;
  p.t_ = t;
  p.alpha_ = Rational(1);
  p.beta_ = Rational(t);
  return p;
}

SpannerParams SpannerParams::alpha_beta(Rational alpha, Rational beta) {
  if (alpha < Rational(1)) throw std::invalid_argument("alpha must be >= 1");
  if (beta < Rational(0)) throw std::invalid_argument("beta must be >= 0");
  SpannerParams p;
  p.additive_ = false;
  p.alpha_ = alpha;
  p.beta_ = beta;
  p.t_ = static_cast<int>((alpha + beta).floor() - 1);
  return p;
}

bool SpannerParams::allows(Dist dist_g, Dist dist_h) const {
  if (!finite(dist_h)) return false;
  if (additive_) return dist_h <= dist_g + t_;
  // dist_h <= (an/ad) dist_g + (bn/bd), cleared of denominators.
  __int128 lhs = static_cast<__int128>(dist_h) * alpha_.den() * beta_.den();
  __int128 rhs = static_cast<__int128>(alpha_.num()) * beta_.den() * dist_g +
                 static_cast<__int128>(beta_.num()) * alpha_.den();
  return lhs <= rhs;
}

std::string SpannerParams::describe() const {
  if (additive_) return "additive t=" + std::to_string(t_);
  return "alpha=" + alpha_.str() + " beta=" + beta_.str() + " (t=" + std::to_string(t_) + ")";
}

SpannerChecker::SpannerChecker(const Graph& g, SpannerParams params)
    : g_(&g), params_(params) {
  const std::size_t n = g.num_vertices();
  if (n <= kMatrixLimit) {
    dist_g_ = all_pairs_dist(g, g.empty_mask());
    has_matrix_ = true;
  }
  scratch_g_.resize(n);
  scratch_h_.resize(n);
  queue_.reserve(n);
}

Dist SpannerChecker::dist_g(Vertex a, Vertex b) const {
  if (has_matrix_) return dist_g_(a, b);
  return bfs_dist(*g_, a, g_->empty_mask())[b];
}

std::optional<Violation> SpannerChecker::first_violation(const EdgeMask& removed) const {
  const Graph& g = *g_;
  const std::size_t n = g.num_vertices();
  std::vector<EdgeId> gone = removed.indices();
  if (gone.empty()) return std::nullopt;

  // Distance rows from both endpoints of every removed edge decide which
  // sources can see a change.
  std::vector<std::vector<Dist>> endpoint_rows;
  if (!has_matrix_) {
    endpoint_rows.reserve(2 * gone.size());
    for (EdgeId e : gone) {
      endpoint_rows.push_back(bfs_dist(g, g.edge(e).u, g.empty_mask()));
      endpoint_rows.push_back(bfs_dist(g, g.edge(e).v, g.empty_mask()));
    }
  }
  auto affected = [&](Vertex s) {
    for (std::size_t i = 0; i < gone.size(); ++i) {
      const Edge& ed = g.edge(gone[i]);
      Dist da = has_matrix_ ? dist_g_(ed.u, s) : endpoint_rows[2 * i][s];
      Dist db = has_matrix_ ? dist_g_(ed.v, s) : endpoint_rows[2 * i + 1][s];
      if (da != db) return true;
    }
    return false;
  };

  for (Vertex s = 0; s < n; ++s) {
    if (!affected(s)) continue;
    std::span<const Dist> row_g;
    if (has_matrix_) {
      row_g = dist_g_.row(s);
    } else {
      bfs_dist_into(g, s, g.empty_mask(), scratch_g_, queue_);
      row_g = scratch_g_;
    }
    bfs_dist_into(g, s, removed, scratch_h_, queue_);
    for (Vertex y = s + 1; y < n; ++y) {
      if (!finite(row_g[y])) continue;
      if (!params_.allows(row_g[y], scratch_h_[y])) {
        return Violation{s, y, row_g[y], scratch_h_[y]};
      }
    }
  }
  return std::nullopt;
}

VerifyResult verify(const Graph& g, const EdgeMask& removed, const SpannerParams& params) {
  if (removed.universe() != g.num_edges()) {
    throw std::invalid_argument("removal mask does not match the graph's edge count");
  }
  return VerifyResult{SpannerChecker(g, params).first_violation(removed)};
}

Dist max_additive_stretch(const Graph& g, const EdgeMask& removed) {
  const std::size_t n = g.num_vertices();
  std::vector<Dist> row_g(n);
  std::vector<Dist> row_h(n);
  std::vector<Vertex> queue;
  Dist worst = 0;
  for (Vertex s = 0; s < n; ++s) {
    bfs_dist_into(g, s, g.empty_mask(), row_g, queue);
    bfs_dist_into(g, s, removed, row_h, queue);
    for (Vertex y = 0; y < n; ++y) {
      if (!finite(row_g[y])) continue;
      if (!finite(row_h[y])) return kInf;
      worst = std::max(worst, row_h[y] - row_g[y]);
    }
  }
  return worst;
}

}  // namespace addspan
