// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>

#include "mpk/sparse/spmv.hpp"

namespace mpk::bench {

/// A benchmark system at one working precision: A, the exact solution x*
/// and b = A x* computed in that precision.
template <class S>
struct Problem {
  std::string name;
  CsrMatrix<S> a;
  DenseVector<S> x_star;
  DenseVector<S> b;
};

/// x*_i = sqrt(2) (i + 1) for real S, sqrt(2 + 3i) (i + 1) for complex S.
template <class S>
[[nodiscard]] DenseVector<S> exact_solution(Index n) {
  using R = real_t<S>;
  S base;
  if constexpr (ScalarTraits<S>::is_complex) {
    base = sqrt(S(R(2.0), R(3.0)));
  } else {
    base = sqrt(S(2.0));
  }
  DenseVector<S> x(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = base * S(static_cast<double>(i + 1));
  return x;
}

template <class S>
[[nodiscard]] Problem<S> build_problem(std::string name, CsrMatrix<S> a) {
  auto x_star = exact_solution<S>(a.size());
  auto b = spmv<S>(a, x_star);
  return Problem<S>{std::move(name), std::move(a), std::move(x_star), std::move(b)};
}

}  // namespace mpk::bench
