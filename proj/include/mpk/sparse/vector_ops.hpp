// SPDX-License-Identifier: Apache-2.0
//
// Dense vector kernels used by the Krylov solvers. All reductions
// accumulate in ascending index order, so results are reproducible bit for
// bit.

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpk/scalar/traits.hpp"

namespace mpk {

template <class S>
using DenseVector = std::vector<S>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
inline void check_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": length " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}
}  // namespace detail

/// sum conj(x_i) * y_i, conjugate-linear in the first argument.
template <class S>
[[nodiscard]] S hdot(std::span<const S> x, std::span<const S> y) {
  detail::check_same_length(x.size(), y.size(), "hdot");
  S acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += conj(x[i]) * y[i];
  return acc;
}

/// sum x_i * y_i without conjugation.
template <class S>
[[nodiscard]] S dot(std::span<const S> x, std::span<const S> y) {
  detail::check_same_length(x.size(), y.size(), "dot");
  S acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

template <class S>
[[nodiscard]] real_t<S> norm2(std::span<const S> x) {
  real_t<S> acc{};
  for (const auto& v : x) acc += abs2(v);
  return sqrt(acc);
}

/// y := y + alpha * x
template <class S>
void axpy(const S& alpha, std::span<const S> x, std::span<S> y) {
  detail::check_same_length(x.size(), y.size(), "axpy");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

/// y := x + beta * y
template <class S>
void xpby(std::span<const S> x, const S& beta, std::span<S> y) {
  detail::check_same_length(x.size(), y.size(), "xpby");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + beta * y[i];
}

/// x := alpha * x
template <class S>
void scale(const S& alpha, std::span<S> x) {
  for (auto& v : x) v = alpha * v;
}

template <class S>
void copy(std::span<const S> x, std::span<S> y) {
  detail::check_same_length(x.size(), y.size(), "copy");
  std::copy(x.begin(), x.end(), y.begin());
}

/// out := x - y
template <class S>
void sub(std::span<const S> x, std::span<const S> y, std::span<S> out) {
  detail::check_same_length(x.size(), y.size(), "sub");
  detail::check_same_length(x.size(), out.size(), "sub");
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
}

// Vector overloads; spans do not take part in template argument deduction.
template <class S>
[[nodiscard]] S hdot(const DenseVector<S>& x, const DenseVector<S>& y) {
  return hdot<S>(std::span<const S>(x), std::span<const S>(y));
}
template <class S>
[[nodiscard]] S dot(const DenseVector<S>& x, const DenseVector<S>& y) {
  return dot<S>(std::span<const S>(x), std::span<const S>(y));
}
template <class S>
[[nodiscard]] real_t<S> norm2(const DenseVector<S>& x) {
  return norm2<S>(std::span<const S>(x));
}

}  // namespace mpk
