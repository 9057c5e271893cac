// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <span>

#include "mpk/sparse/spmv.hpp"

namespace mpk {

/// y := A x and y := A^H x on vectors of scalar kind S.
template <class Op, class S>
concept LinearOperator = requires(const Op& op, std::span<const S> x, std::span<S> y) {
  { op.size() } -> std::convertible_to<Index>;
  op.apply(x, y);
  op.apply_adjoint(x, y);
};

template <class S>
class CsrOperator {
 public:
  explicit CsrOperator(const CsrMatrix<S>& a, int threads = 1) : a_(&a), threads_(threads) {}

  [[nodiscard]] Index size() const noexcept { return a_->size(); }
  void apply(std::span<const S> x, std::span<S> y) const {
    if (threads_ > 1) {
      spmv_parallel<S, S>(*a_, x, y, threads_);
    } else {
      spmv<S>(*a_, x, y);
    }
  }
  void apply_adjoint(std::span<const S> x, std::span<S> y) const { spmv_adjoint<S>(*a_, x, y); }

 private:
  const CsrMatrix<S>* a_;
  int threads_;
};

/// Binary64 matrix applied to working-precision vectors.
template <class S>
class MixedCsrOperator {
 public:
  explicit MixedCsrOperator(const CsrMatrix<binary64_t<S>>& a64, int threads = 1)
      : a_(&a64), threads_(threads) {}

  [[nodiscard]] Index size() const noexcept { return a_->size(); }
  void apply(std::span<const S> x, std::span<S> y) const {
    if (threads_ > 1) {
      spmv_parallel<S, binary64_t<S>>(*a_, x, y, threads_);
    } else {
      spmv_mixed<S>(*a_, x, y);
    }
  }
  void apply_adjoint(std::span<const S> x, std::span<S> y) const {
    spmv_mixed_adjoint<S>(*a_, x, y);
  }

 private:
  const CsrMatrix<binary64_t<S>>* a_;
  int threads_;
};

}  // namespace mpk
