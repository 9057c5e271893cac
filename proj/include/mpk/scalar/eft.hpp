// SPDX-License-Identifier: Apache-2.0
//
// Error-free transformations on binary64.
//
// Every routine here returns a pair (r, e) such that the mathematical result
// of the operation equals r + e exactly, with r the correctly rounded value.
// The translation units using these must be compiled with
// -ffp-contract=off; a contracted a*b+c silently breaks the identities.

#pragma once

#include <cmath>

namespace mpk {

struct TwoTerm {
  double hi;
  double lo;
};

/// Knuth's branch-free two-sum. No precondition on the magnitudes of a, b.
[[nodiscard]] inline TwoTerm two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

/// Dekker's fast two-sum; requires |a| >= |b| or a == 0.
[[nodiscard]] inline TwoTerm fast_two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double e = b - (s - a);
  return {s, e};
}

/// Veltkamp split of a into two 26-bit halves with a = hi + lo.
[[nodiscard]] inline TwoTerm split(double a) noexcept {
  constexpr double splitter = 134217729.0;  // 2^27 + 1
  const double t = splitter * a;
  const double hi = t - (t - a);
  return {hi, a - hi};
}

/// Dekker's product, valid when no intermediate overflows.
[[nodiscard]] inline TwoTerm two_prod_dekker(double a, double b) noexcept {
  const double p = a * b;
  const auto [ah, al] = split(a);
  const auto [bh, bl] = split(b);
  const double e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
  return {p, e};
}

/// Product via a correctly rounded fused multiply-add.
[[nodiscard]] inline TwoTerm two_prod_fma(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

#if defined(__FMA__) || defined(FP_FAST_FMA)
inline constexpr bool has_hardware_fma = true;
#else
inline constexpr bool has_hardware_fma = false;
#endif

[[nodiscard]] inline TwoTerm two_prod(double a, double b) noexcept {
  if constexpr (has_hardware_fma) {
    return two_prod_fma(a, b);
  } else {
    return two_prod_dekker(a, b);
  }
}

}  // namespace mpk
