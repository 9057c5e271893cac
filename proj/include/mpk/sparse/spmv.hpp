// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <span>
#include <thread>
#include <vector>

#include "mpk/sparse/csr.hpp"
#include "mpk/sparse/vector_ops.hpp"

namespace mpk {

namespace detail {
template <class S>
void check_spmv_dims(Index n, std::size_t x, std::size_t y) {
  check_same_length(static_cast<std::size_t>(n), x, "spmv input");
  check_same_length(static_cast<std::size_t>(n), y, "spmv output");
}

template <class S, class V>
void spmv_rows(const CsrMatrix<V>& a, std::span<const S> x, std::span<S> y, Index first,
               Index last) {
  const auto rp = a.row_ptr();
  const auto ci = a.col_idx();
  const auto va = a.values();
  for (Index i = first; i < last; ++i) {
    S acc{};
    for (Index p = rp[i]; p < rp[i + 1]; ++p) {
      if constexpr (std::is_same_v<S, V>) {
        acc += va[p] * x[ci[p]];
      } else {
        acc += scalar_cast<S>(va[p]) * x[ci[p]];
      }
    }
    y[i] = acc;
  }
}
}  // namespace detail

/// y := A x, accumulating each row in ascending column order.
template <class S>
void spmv(const CsrMatrix<S>& a, std::span<const S> x, std::span<S> y) {
  detail::check_spmv_dims<S>(a.size(), x.size(), y.size());
  detail::spmv_rows<S, S>(a, x, y, 0, a.size());
}

template <class S>
[[nodiscard]] DenseVector<S> spmv(const CsrMatrix<S>& a, const DenseVector<S>& x) {
  DenseVector<S> y(x.size());
  spmv<S>(a, x, y);
  return y;
}

/// y := A^H x by row scatter: rows in ascending order, y_j += conj(a_ij) x_i.
template <class S>
void spmv_adjoint(const CsrMatrix<S>& a, std::span<const S> x, std::span<S> y) {
  detail::check_spmv_dims<S>(a.size(), x.size(), y.size());
  std::fill(y.begin(), y.end(), S{});
  const auto rp = a.row_ptr();
  const auto ci = a.col_idx();
  const auto va = a.values();
  for (Index i = 0; i < a.size(); ++i) {
    const S xi = x[i];
    for (Index p = rp[i]; p < rp[i + 1]; ++p) y[ci[p]] += conj(va[p]) * xi;
  }
}

template <class S>
[[nodiscard]] DenseVector<S> spmv_adjoint(const CsrMatrix<S>& a, const DenseVector<S>& x) {
  DenseVector<S> y(x.size());
  spmv_adjoint<S>(a, x, y);
  return y;
}

/// Mixed-precision y := A x with A stored in binary64. Each entry is promoted
/// exactly before the product, so the result equals spmv on the promoted
/// matrix bit for bit.
template <class S>
void spmv_mixed(const CsrMatrix<binary64_t<S>>& a64, std::span<const S> x, std::span<S> y) {
  detail::check_spmv_dims<S>(a64.size(), x.size(), y.size());
  detail::spmv_rows<S, binary64_t<S>>(a64, x, y, 0, a64.size());
}

template <class S>
[[nodiscard]] DenseVector<S> spmv_mixed(const CsrMatrix<binary64_t<S>>& a64,
                                        const DenseVector<S>& x) {
  DenseVector<S> y(x.size());
  spmv_mixed<S>(a64, x, y);
  return y;
}

/// Mixed-precision y := A^H x, same scatter order as spmv_adjoint.
template <class S>
void spmv_mixed_adjoint(const CsrMatrix<binary64_t<S>>& a64, std::span<const S> x,
                        std::span<S> y) {
  detail::check_spmv_dims<S>(a64.size(), x.size(), y.size());
  std::fill(y.begin(), y.end(), S{});
  const auto rp = a64.row_ptr();
  const auto ci = a64.col_idx();
  const auto va = a64.values();
  for (Index i = 0; i < a64.size(); ++i) {
    const S xi = x[i];
    for (Index p = rp[i]; p < rp[i + 1]; ++p) y[ci[p]] += conj(scalar_cast<S>(va[p])) * xi;
  }
}

/// Row-partitioned threaded y := A x for exploratory runs. Each row is still
/// summed in column order by one thread.
template <class S, class V = S>
void spmv_parallel(const CsrMatrix<V>& a, std::span<const S> x, std::span<S> y, int threads) {
  detail::check_spmv_dims<S>(a.size(), x.size(), y.size());
  const Index n = a.size();
  const int t = std::max(1, std::min<int>(threads, static_cast<int>(std::max<Index>(n, 1))));
  if (t == 1) {
    detail::spmv_rows<S, V>(a, x, y, 0, n);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(t));
  for (int k = 0; k < t; ++k) {
    const Index first = n * k / t;
    const Index last = n * (k + 1) / t;
    pool.emplace_back([&a, x, y, first, last] { detail::spmv_rows<S, V>(a, x, y, first, last); });
  }
}

}  // namespace mpk
