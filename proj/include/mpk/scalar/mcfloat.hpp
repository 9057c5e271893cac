// SPDX-License-Identifier: Apache-2.0
//
// Multi-component floating point: an unevaluated sum of K binary64 values.
//
//   K = 1  binary64        53-bit significand
//   K = 2  double-double  106-bit
//   K = 3  triple-double  159-bit
//   K = 4  quad-double    212-bit
//
// Every value handed out by a public operation is renormalized: components
// are ordered by decreasing magnitude, zeros only trail, and
// |c[i+1]| <= ulp(c[i]) / 2. K = 1 reduces to plain binary64 arithmetic,
// bit for bit.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>

#include "mpk/scalar/eft.hpp"
#include "mpk/scalar/precision.hpp"

namespace mpk {

template <int K>
class MCFloat {
  static_assert(K >= 1 && K <= 4, "MCFloat supports 1 to 4 components");

 public:
  static constexpr int num_components = K;
  static constexpr int mantissa_bits = 53 * K;
  static constexpr Precision precision = *precision_from_components(K);

  constexpr MCFloat() noexcept = default;
  constexpr MCFloat(double x) noexcept : c_{x} {}  // NOLINT: exact embedding

  /// Wraps components that already satisfy the renormalized invariant.
  [[nodiscard]] static constexpr MCFloat from_components(const std::array<double, K>& c) noexcept {
    MCFloat r;
    r.c_ = c;
    return r;
  }

  [[nodiscard]] constexpr double operator[](int i) const noexcept { return c_[i]; }
  [[nodiscard]] constexpr const std::array<double, K>& components() const noexcept { return c_; }
  [[nodiscard]] constexpr double leading() const noexcept { return c_[0]; }

  [[nodiscard]] constexpr MCFloat operator-() const noexcept {
    MCFloat r;
    for (int i = 0; i < K; ++i) r.c_[i] = -c_[i];
    return r;
  }

  MCFloat& operator+=(const MCFloat& y) noexcept;
  MCFloat& operator-=(const MCFloat& y) noexcept;
  MCFloat& operator*=(const MCFloat& y) noexcept;
  MCFloat& operator/=(const MCFloat& y) noexcept;

 private:
  std::array<double, K> c_{};
};

using F64 = MCFloat<1>;
using DD = MCFloat<2>;
using TD = MCFloat<3>;
using QD = MCFloat<4>;

template <class T>
struct is_mcfloat : std::false_type {};
template <int K>
struct is_mcfloat<MCFloat<K>> : std::true_type {};
template <class T>
inline constexpr bool is_mcfloat_v = is_mcfloat<T>::value;

/// Spacing of binary64 numbers just above |x|; ulp(0) = 0.
[[nodiscard]] inline double ulp(double x) noexcept {
  if (x == 0.0 || !std::isfinite(x)) return 0.0;
  return std::ldexp(1.0, std::ilogb(x) - 52);
}

/// 2^-mantissa_bits for the K-component format.
template <int K>
[[nodiscard]] inline double unit_roundoff() noexcept {
  return std::ldexp(1.0, -53 * K);
}

namespace detail {

// Bottom-up two-sum sweeps until every adjacent pair is a fixed point of
// two_sum, which is exactly the renormalized invariant. All steps are exact.
template <std::size_t K>
inline void settle(std::array<double, K>& c) noexcept {
  if constexpr (K > 1) {
    for (int pass = 0; pass < 4 * static_cast<int>(K); ++pass) {
      bool changed = false;
      for (int i = static_cast<int>(K) - 2; i >= 0; --i) {
        const auto [s, e] = two_sum(c[i], c[i + 1]);
        if (s != c[i] || e != c[i + 1]) {
          changed = true;
          c[i] = s;
          c[i + 1] = e;
        }
      }
      if (!changed) break;
    }
  }
}

// Collapses N terms into a K-component expansion. The terms need not be
// ordered, but the work is smallest when they roughly decrease in magnitude.
// Everything is exact except the plain additions that fold the terms beyond
// the K-th component into the last one.
template <int K, std::size_t N>
[[nodiscard]] inline std::array<double, K> distill(std::array<double, N> x) noexcept {
  for (int i = static_cast<int>(N) - 2; i >= 0; --i) {
    const auto [s, e] = two_sum(x[i], x[i + 1]);
    x[i] = s;
    x[i + 1] = e;
  }
  std::array<double, K> out{};
  int j = 0;
  double eps = x[0];
  for (std::size_t i = 1; i < N; ++i) {
    if (j == K - 1) {
      eps += x[i];
      continue;
    }
    const auto [s, e] = two_sum(eps, x[i]);
    if (e != 0.0) {
      out[j++] = s;
      eps = e;
    } else {
      eps = s;
    }
  }
  out[j] = eps;
  settle(out);
  return out;
}

template <int K>
[[nodiscard]] inline MCFloat<K> add_generic(const MCFloat<K>& a, const MCFloat<K>& b) noexcept {
  // Merge by decreasing magnitude; both inputs are already ordered.
  std::array<double, 2 * K> m{};
  int i = 0, j = 0, t = 0;
  while (i < K && j < K) {
    if (std::fabs(a[i]) >= std::fabs(b[j])) {
      m[t++] = a[i++];
    } else {
      m[t++] = b[j++];
    }
  }
  while (i < K) m[t++] = a[i++];
  while (j < K) m[t++] = b[j++];
  return MCFloat<K>::from_components(distill<K>(m));
}

// Truncated expansion product. Partial products are binned by order
// o = i + j; exact two_prod/two_sum errors are pushed into the next bin, and
// bin K is summed in plain arithmetic together with the order-K products.
template <int K>
[[nodiscard]] inline MCFloat<K> mul_generic(const MCFloat<K>& a, const MCFloat<K>& b) noexcept {
  constexpr int cap = 4 * K * K;
  std::array<std::array<double, cap>, K + 1> bins;
  std::array<int, K + 1> count{};
  for (int o = 0; o < K; ++o) {
    for (int i = 0; i <= o; ++i) {
      const auto [p, e] = two_prod(a[i], b[o - i]);
      bins[o][count[o]++] = p;
      bins[o + 1][count[o + 1]++] = e;
    }
  }
  for (int i = 1; i < K; ++i) bins[K][count[K]++] = a[i] * b[K - i];

  std::array<double, K + 1> out{};
  for (int o = 0; o < K; ++o) {
    double s = bins[o][0];
    for (int t = 1; t < count[o]; ++t) {
      const auto [hi, lo] = two_sum(s, bins[o][t]);
      s = hi;
      bins[o + 1][count[o + 1]++] = lo;
    }
    out[o] = s;
  }
  double last = 0.0;
  for (int t = 0; t < count[K]; ++t) last += bins[K][t];
  out[K] = last;
  return MCFloat<K>::from_components(distill<K>(out));
}

template <int K>
[[nodiscard]] inline MCFloat<K> mul_pow2(const MCFloat<K>& x, double p2) noexcept {
  std::array<double, K> c = x.components();
  for (auto& v : c) v *= p2;
  return MCFloat<K>::from_components(c);
}

// Newton steps needed to lift a 53-bit seed past 53*K bits.
template <int K>
inline constexpr int newton_steps = K <= 1 ? 0 : (K == 2 ? 1 : 2);

}  // namespace detail

/// Renormalizes an arbitrary list of finite binary64 values into K components.
/// The result sums to the input total within one unit of the K-component format.
template <int K>
[[nodiscard]] inline MCFloat<K> renormalize(std::span<const double> raw) {
  if (raw.empty()) return {};
  std::array<double, 4 * K + 8> buf{};
  if (raw.size() > buf.size()) {
    // Longer inputs are folded in chunks; each fold is itself renormalized.
    MCFloat<K> acc;
    for (std::size_t off = 0; off < raw.size(); off += buf.size()) {
      const auto chunk = raw.subspan(off, std::min(buf.size(), raw.size() - off));
      acc += renormalize<K>(chunk);
    }
    return acc;
  }
  std::copy(raw.begin(), raw.end(), buf.begin());
  std::stable_sort(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(raw.size()),
                   [](double a, double b) { return std::fabs(a) > std::fabs(b); });
  return MCFloat<K>::from_components(detail::distill<K>(buf));
}

template <int K>
[[nodiscard]] inline MCFloat<K> operator+(const MCFloat<K>& a, const MCFloat<K>& b) noexcept {
  if constexpr (K == 1) {
    return MCFloat<1>(a[0] + b[0]);
  } else {
    const double lead = a[0] + b[0];
    if (!std::isfinite(lead)) return MCFloat<K>(lead);
    if constexpr (K == 2) {
      const auto [s, e] = two_sum(a[0], b[0]);
      const auto [t, f] = two_sum(a[1], b[1]);
      const auto u = fast_two_sum(s, e + t);
      const auto r = fast_two_sum(u.hi, u.lo + f);
      return MCFloat<2>::from_components({r.hi, r.lo});
    } else {
      return detail::add_generic(a, b);
    }
  }
}

template <int K>
[[nodiscard]] inline MCFloat<K> operator-(const MCFloat<K>& a, const MCFloat<K>& b) noexcept {
  return a + (-b);
}

template <int K>
[[nodiscard]] inline MCFloat<K> operator*(const MCFloat<K>& a, const MCFloat<K>& b) noexcept {
  if constexpr (K == 1) {
    return MCFloat<1>(a[0] * b[0]);
  } else {
    const double lead = a[0] * b[0];
    if (!std::isfinite(lead)) return MCFloat<K>(lead);
    if constexpr (K == 2) {
      auto [p, e] = two_prod(a[0], b[0]);
      e += a[0] * b[1] + a[1] * b[0];
      const auto r = fast_two_sum(p, e);
      return MCFloat<2>::from_components({r.hi, r.lo});
    } else {
      return detail::mul_generic(a, b);
    }
  }
}

/// Quotient via a Newton-refined reciprocal seeded by binary64 division,
/// followed by one residual correction of the quotient itself.
template <int K>
[[nodiscard]] inline MCFloat<K> operator/(const MCFloat<K>& a, const MCFloat<K>& b) noexcept {
  if constexpr (K == 1) {
    return MCFloat<1>(a[0] / b[0]);
  } else {
    const double lead = a[0] / b[0];
    if (!std::isfinite(lead) || !std::isfinite(b[0]) || b[0] == 0.0) return MCFloat<K>(lead);
    const MCFloat<K> one(1.0);
    MCFloat<K> y(1.0 / b[0]);
    for (int i = 0; i < detail::newton_steps<K>; ++i) y = y + y * (one - b * y);
    MCFloat<K> q = a * y;
    q = q + y * (a - b * q);
    return q;
  }
}

template <int K>
inline MCFloat<K>& MCFloat<K>::operator+=(const MCFloat<K>& y) noexcept {
  return *this = *this + y;
}
template <int K>
inline MCFloat<K>& MCFloat<K>::operator-=(const MCFloat<K>& y) noexcept {
  return *this = *this - y;
}
template <int K>
inline MCFloat<K>& MCFloat<K>::operator*=(const MCFloat<K>& y) noexcept {
  return *this = *this * y;
}
template <int K>
inline MCFloat<K>& MCFloat<K>::operator/=(const MCFloat<K>& y) noexcept {
  return *this = *this / y;
}

// Lexicographic comparison is exact on renormalized values up to the
// measure-zero ties at the ulp/2 boundary.
template <int K>
[[nodiscard]] inline bool operator==(const MCFloat<K>& a, const MCFloat<K>& b) noexcept {
  for (int i = 0; i < K; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

template <int K>
[[nodiscard]] inline std::partial_ordering operator<=>(const MCFloat<K>& a,
                                                       const MCFloat<K>& b) noexcept {
  for (int i = 0; i < K; ++i) {
    if (const auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::partial_ordering::equivalent;
}

template <int K>
[[nodiscard]] inline MCFloat<K> abs(const MCFloat<K>& x) noexcept {
  return x[0] < 0.0 ? -x : x;
}

template <int K>
[[nodiscard]] inline bool is_finite(const MCFloat<K>& x) noexcept {
  for (int i = 0; i < K; ++i) {
    if (!std::isfinite(x[i])) return false;
  }
  return true;
}

template <int K>
[[nodiscard]] inline bool is_zero(const MCFloat<K>& x) noexcept {
  return x[0] == 0.0;
}

/// Checks the renormalized-form invariant.
template <int K>
[[nodiscard]] inline bool is_renormalized(const MCFloat<K>& x) noexcept {
  for (int i = 0; i + 1 < K; ++i) {
    if (std::fabs(x[i + 1]) > ulp(x[i]) / 2) return false;
  }
  return true;
}

/// Principal square root via a Newton-refined reciprocal square root.
/// Throws std::domain_error for negative arguments.
template <int K>
[[nodiscard]] inline MCFloat<K> sqrt(const MCFloat<K>& x) {
  if (x[0] < 0.0) throw std::domain_error("sqrt of a negative multi-component value");
  if constexpr (K == 1) {
    return MCFloat<1>(std::sqrt(x[0]));
  } else {
    if (x[0] == 0.0) return {};
    if (!std::isfinite(x[0])) return MCFloat<K>(std::sqrt(x[0]));
    const MCFloat<K> one(1.0);
    MCFloat<K> r(1.0 / std::sqrt(x[0]));
    for (int i = 0; i < detail::newton_steps<K>; ++i) {
      r = r + detail::mul_pow2(r * (one - x * r * r), 0.5);
    }
    MCFloat<K> s = x * r;
    s = s + detail::mul_pow2(r * (x - s * s), 0.5);
    return s;
  }
}

/// Changes the component count. Promotion appends zeros and is exact;
/// demotion renormalizes into fewer components (to binary64 this is the
/// leading component of the rounded value).
template <int To, int From>
[[nodiscard]] inline MCFloat<To> precision_convert(const MCFloat<From>& x) noexcept {
  if constexpr (To == From) {
    return x;
  } else if constexpr (To > From) {
    std::array<double, To> c{};
    for (int i = 0; i < From; ++i) c[i] = x[i];
    return MCFloat<To>::from_components(c);
  } else {
    if (!is_finite(x)) return MCFloat<To>(x[0]);
    std::array<double, From> c = x.components();
    return MCFloat<To>::from_components(detail::distill<To>(c));
  }
}

template <int K>
[[nodiscard]] inline double to_double(const MCFloat<K>& x) noexcept {
  return precision_convert<1>(x)[0];
}

}  // namespace mpk
