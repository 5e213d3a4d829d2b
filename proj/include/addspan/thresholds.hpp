#pragma once

#include <cstdint>

namespace addspan {

/// Counts appearing in the existence guarantees of the solver. All of them
/// grow very quickly, so arithmetic saturates at kSaturated rather than
/// wrapping. A saturated f4 only ever routes the solver to the exact branch.
using Count = std::uint64_t;
inline constexpr Count kSaturated = static_cast<Count>(INT64_MAX);

/// 2 (k l^3)^(l-1): enough u-v paths of length <= l to extract k edge-disjoint
/// paths between some nearby pair.
Count f1(Count k, Count l);

/// 27 (t+2)(3t+1) p^4: enough edge-disjoint short cycles to order p of them so
/// that earlier cycles reach later ones without crossing cycles further on.
Count f2(Count t, Count p);

/// k (t+2)^(k-1): sequence length that yields k removable edges.
Count f3(Count t, Count k);

struct ThresholdTable {
  int t = 0;
  int k = 0;
  Count p = 0;            // f3(t, k)
  Count n_disjoint = 0;   // f2(t, p)
  Count f1_prop = 0;      // f1(k+t+1, t+1)
  Count cycle_budget = 0; // n_disjoint (t+2) f1_prop
  Count f4 = 0;           // n_disjoint (t+2)^2 f1_prop

  bool saturated(Count v) const { return v >= kSaturated; }
};

/// Requires t >= 1 and k >= 1.
ThresholdTable thresholds(int t, int k);

Count saturating_mul(Count a, Count b);
Count saturating_add(Count a, Count b);
Count saturating_pow(Count base, Count exp);

}  // namespace addspan
