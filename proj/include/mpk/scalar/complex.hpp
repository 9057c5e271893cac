// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mpk/scalar/mcfloat.hpp"

namespace mpk {

/// Complex number over a multi-component real type. Unlike std::complex,
/// this is defined for MCFloat and keeps every operation in the real
/// type's precision.
template <class R>
struct Complex {
  using real_type = R;

  R re{};
  R im{};

  constexpr Complex() noexcept = default;
  constexpr Complex(const R& r) noexcept : re(r) {}  // NOLINT: real embeds
  constexpr Complex(double r) noexcept : re(r) {}    // NOLINT
  constexpr Complex(const R& r, const R& i) noexcept : re(r), im(i) {}

  [[nodiscard]] constexpr Complex operator-() const noexcept { return {-re, -im}; }

  Complex& operator+=(const Complex& y) noexcept { return *this = *this + y; }
  Complex& operator-=(const Complex& y) noexcept { return *this = *this - y; }
  Complex& operator*=(const Complex& y) noexcept { return *this = *this * y; }
  Complex& operator/=(const Complex& y) noexcept { return *this = *this / y; }

  friend Complex operator+(const Complex& a, const Complex& b) noexcept {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) noexcept {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) noexcept {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  // Smith's algorithm: scale by the larger of |c|, |d| to avoid overflow
  // in c^2 + d^2.
  friend Complex operator/(const Complex& a, const Complex& b) noexcept {
    const R& c = b.re;
    const R& d = b.im;
    if (abs(c) >= abs(d)) {
      if (is_zero(c)) {
        // b == 0: propagate IEEE-style infinities/NaNs.
        return {a.re / c, a.im / c};
      }
      const R r = d / c;
      const R den = c + d * r;
      return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
    }
    const R r = c / d;
    const R den = c * r + d;
    return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
  }

  friend bool operator==(const Complex& a, const Complex& b) noexcept {
    return a.re == b.re && a.im == b.im;
  }
};

template <int K>
using MCComplex = Complex<MCFloat<K>>;

template <class T>
struct is_complex : std::false_type {};
template <class R>
struct is_complex<Complex<R>> : std::true_type {};
template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

template <class R>
[[nodiscard]] constexpr Complex<R> conj(const Complex<R>& z) noexcept {
  return {z.re, -z.im};
}

/// |z|^2 = re^2 + im^2.
template <class R>
[[nodiscard]] inline R abs2(const Complex<R>& z) noexcept {
  return z.re * z.re + z.im * z.im;
}

template <class R>
[[nodiscard]] inline R abs(const Complex<R>& z) {
  // Scale to keep re^2 + im^2 away from overflow/underflow.
  const R a = abs(z.re);
  const R b = abs(z.im);
  const R& big = a >= b ? a : b;
  const R& small = a >= b ? b : a;
  if (is_zero(big)) return R{};
  const R t = small / big;
  return big * sqrt(R(1.0) + t * t);
}

template <class R>
[[nodiscard]] inline bool is_finite(const Complex<R>& z) noexcept {
  return is_finite(z.re) && is_finite(z.im);
}

template <class R>
[[nodiscard]] inline bool is_zero(const Complex<R>& z) noexcept {
  return is_zero(z.re) && is_zero(z.im);
}

/// Principal square root: result has re >= 0, and im >= 0 when re == 0.
template <class R>
[[nodiscard]] inline Complex<R> sqrt(const Complex<R>& z) {
  if (is_zero(z)) return {};
  const R two(2.0);
  const R t = sqrt((abs(z.re) + abs(z)) / two);
  if (z.re[0] >= 0.0) return {t, z.im / (two * t)};
  const R im_mag = abs(z.im) / (two * t);
  return {im_mag, z.im[0] < 0.0 ? -t : t};
}

template <int To, int From>
[[nodiscard]] inline MCComplex<To> precision_convert(const MCComplex<From>& z) noexcept {
  return {precision_convert<To>(z.re), precision_convert<To>(z.im)};
}

}  // namespace mpk
