#include "addspan/thresholds.hpp"

#include <stdexcept>

namespace addspan {

Count saturating_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out) || out > kSaturated) return kSaturated;
  return out;
}

Count saturating_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out) || out > kSaturated) return kSaturated;
  return out;
}

Count saturating_pow(Count base, Count exp) {
  Count out = 1;
  for (Count i = 0; i < exp; ++i) {
    out = saturating_mul(out, base);
    if (out == kSaturated) break;
  }
  return out;
}

Count f1(Count k, Count l) {
  if (k == 0 || l == 0) throw std::invalid_argument("f1 needs k, l >= 1");
  Count kl3 = saturating_mul(k, saturating_pow(l, 3));
  return saturating_mul(2, saturating_pow(kl3, l - 1));
}

Count f2(Count t, Count p) {
  if (t == 0 || p == 0) throw std::invalid_argument("f2 needs t, p >= 1");
  Count out = saturating_mul(27, t + 2);
  out = saturating_mul(out, saturating_add(saturating_mul(3, t), 1));
  return saturating_mul(out, saturating_pow(p, 4));
}

Count f3(Count t, Count k) {
  if (t == 0 || k == 0) throw std::invalid_argument("f3 needs t, k >= 1");
  return saturating_mul(k, saturating_pow(t + 2, k - 1));
}

ThresholdTable thresholds(int t, int k) {
  if (t < 1 || k < 1) throw std::invalid_argument("thresholds need t >= 1 and k >= 1");
  ThresholdTable tb;
  tb.t = t;
  tb.k = k;
  const auto tt = static_cast<Count>(t);
  const auto kk = static_cast<Count>(k);
  tb.p = f3(tt, kk);
  tb.n_disjoint = f2(tt, tb.p);
  tb.f1_prop = f1(kk + tt + 1, tt + 1);
  tb.cycle_budget = saturating_mul(saturating_mul(tb.n_disjoint, tt + 2), tb.f1_prop);
  tb.f4 = saturating_mul(saturating_mul(tb.n_disjoint, saturating_pow(tt + 2, 2)), tb.f1_prop);
  return tb;
}

}  // namespace addspan
