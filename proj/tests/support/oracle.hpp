// SPDX-License-Identifier: Apache-2.0
//
// Arbitrary-precision reference arithmetic for the tests. Values are held in
// MPFR through Boost.Multiprecision; 700 decimal digits (about 2300 bits) is
// wide enough to hold the exact sum of the components of any MCFloat whose
// components stay within the normal range.

#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "mpk/scalar/complex.hpp"
#include "mpk/scalar/mcfloat.hpp"
#include "mpk/scalar/traits.hpp"
#include "mpk/sparse/csr.hpp"

namespace mpk::test {

using Big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<700>,
                                          boost::multiprecision::et_off>;

struct BigComplex {
  Big re{0};
  Big im{0};

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    const Big d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

inline Big big_abs(const Big& x) { return boost::multiprecision::abs(x); }
inline Big big_abs(const BigComplex& z) { return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im); }
inline BigComplex big_conj(const BigComplex& z) { return {z.re, -z.im}; }
inline Big big_conj(const Big& x) { return x; }

template <int K>
Big to_big(const MCFloat<K>& x) {
  Big s = 0;
  for (int i = K - 1; i >= 0; --i) s += Big(x[i]);
  return s;
}

template <int K>
BigComplex to_big(const MCComplex<K>& z) {
  return {to_big(z.re), to_big(z.im)};
}

template <class S>
using big_t = std::conditional_t<ScalarTraits<S>::is_complex, BigComplex, Big>;

/// |got - exact| / |exact| as a double (|got - exact| when exact is zero).
template <class S>
double rel_err(const S& got, const big_t<S>& exact) {
  const Big diff = big_abs(to_big(got) - exact);
  const Big mag = big_abs(exact);
  return static_cast<double>(mag == 0 ? diff : diff / mag);
}

/// Nearest MCFloat<K> to an exact value, by peeling off nearest doubles.
template <int K>
MCFloat<K> from_big(Big v) {
  std::array<double, K> c{};
  for (int i = 0; i < K; ++i) {
    c[i] = static_cast<double>(v);
    v -= Big(c[i]);
  }
  return MCFloat<K>::from_components(c);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Random double with random sign and binary exponent in [emin, emax].
  double scaled(int emin, int emax) {
    const double m = uniform(1.0, 2.0);
    return (coin() ? -1.0 : 1.0) * std::ldexp(m, integer(emin, emax));
  }

  /// Renormalized MCFloat with full-width random tails.
  template <int K>
  MCFloat<K> mcfloat(int emin = -20, int emax = 20) {
    std::array<double, K> c{};
    c[0] = scaled(emin, emax);
    for (int i = 1; i < K; ++i) {
      const double u = ulp(c[i - 1]);
      c[i] = uniform(-0.5, 0.5) * u;
      if (std::abs(c[i]) >= 0.5 * u) c[i] = 0.0;
    }
    return MCFloat<K>::from_components(c);
  }

  template <class S>
  S scalar(int emin = -4, int emax = 4) {
    constexpr int k = ScalarTraits<S>::num_components;
    if constexpr (ScalarTraits<S>::is_complex) {
      return S(mcfloat<k>(emin, emax), mcfloat<k>(emin, emax));
    } else {
      return mcfloat<k>(emin, emax);
    }
  }

  std::mt19937_64& engine() noexcept { return gen_; }

 private:
  std::mt19937_64 gen_;
};

template <class T>
struct Dense {
  Index n = 0;
  std::vector<T> a;

  explicit Dense(Index size) : n(size), a(static_cast<std::size_t>(size * size), T(0)) {}
  T& operator()(Index i, Index j) { return a[static_cast<std::size_t>(i * n + j)]; }
  const T& operator()(Index i, Index j) const { return a[static_cast<std::size_t>(i * n + j)]; }
};

template <class S>
Dense<big_t<S>> to_dense_big(const CsrMatrix<S>& m) {
  Dense<big_t<S>> d(m.size());
  for (Index i = 0; i < m.size(); ++i) {
    for (Index p = m.row_ptr()[i]; p < m.row_ptr()[i + 1]; ++p) {
      d(i, m.col_idx()[p]) = to_big(m.values()[static_cast<std::size_t>(p)]);
    }
  }
  return d;
}

/// Solves A x = b by Gaussian elimination with partial pivoting.
template <class T>
std::vector<T> dense_solve(Dense<T> m, std::vector<T> b) {
  const Index n = m.n;
  for (Index k = 0; k < n; ++k) {
    Index piv = k;
    for (Index i = k + 1; i < n; ++i) {
      if (big_abs(m(i, k)) > big_abs(m(piv, k))) piv = i;
    }
    if (piv != k) {
      for (Index j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
    }
    for (Index i = k + 1; i < n; ++i) {
      const T f = m(i, k) / m(k, k);
      for (Index j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
      b[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] - f * b[static_cast<std::size_t>(k)];
    }
  }
  std::vector<T> x(static_cast<std::size_t>(n));
  for (Index i = n - 1; i >= 0; --i) {
    T acc = b[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < n; ++j) acc = acc - m(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = acc / m(i, i);
  }
  return x;
}

/// Incomplete elimination restricted to the nonzero pattern, in the
/// column-oriented KIJ order: L strictly below the diagonal, U on and above.
template <class T>
Dense<T> dense_ilu0(Dense<T> m, const CsrPattern& pat) {
  const Index n = m.n;
  std::vector<char> in(static_cast<std::size_t>(n * n), 0);
  for (Index i = 0; i < n; ++i) {
    for (Index p = pat.row_ptr()[i]; p < pat.row_ptr()[i + 1]; ++p) {
      in[static_cast<std::size_t>(i * n + pat.col_idx()[p])] = 1;
    }
  }
  auto has = [&](Index i, Index j) { return in[static_cast<std::size_t>(i * n + j)] != 0; };
  for (Index k = 0; k < n; ++k) {
    for (Index i = k + 1; i < n; ++i) {
      if (!has(i, k)) continue;
      m(i, k) = m(i, k) / m(k, k);
      for (Index j = k + 1; j < n; ++j) {
        if (has(i, j) && has(k, j)) m(i, j) = m(i, j) - m(i, k) * m(k, j);
      }
    }
  }
  return m;
}

}  // namespace mpk::test
