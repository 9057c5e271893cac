// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpk/scalar/traits.hpp"
#include "mpk/sparse/matrix_market.hpp"

namespace mpk {

/// Square CSR sparsity structure. Columns are strictly increasing within each
/// row, and the position of every diagonal entry is recorded up front so
/// factorizations can fail fast on a structurally missing pivot.
class CsrPattern {
 public:
  static constexpr Index no_diagonal = -1;

  CsrPattern(Index n, std::vector<Index> row_ptr, std::vector<Index> col_idx)
      : n_(n), row_ptr_(std::move(row_ptr)), col_idx_(std::move(col_idx)) {
    if (n_ < 0) throw std::invalid_argument("CSR dimension must be non-negative");
    if (row_ptr_.size() != static_cast<std::size_t>(n_) + 1 || row_ptr_.front() != 0 ||
        row_ptr_.back() != static_cast<Index>(col_idx_.size())) {
      throw std::invalid_argument("CSR row pointer inconsistent with nnz");
    }
    diag_.assign(static_cast<std::size_t>(n_), no_diagonal);
    for (Index i = 0; i < n_; ++i) {
      if (row_ptr_[i + 1] < row_ptr_[i]) throw std::invalid_argument("CSR row pointer decreases");
      for (Index p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
        const Index j = col_idx_[p];
        if (j < 0 || j >= n_) throw std::invalid_argument("CSR column index out of range");
        if (p > row_ptr_[i] && col_idx_[p - 1] >= j) {
          throw std::invalid_argument("CSR columns not strictly increasing in row " +
                                      std::to_string(i));
        }
        if (j == i) diag_[i] = p;
      }
    }
  }

  [[nodiscard]] Index size() const noexcept { return n_; }
  [[nodiscard]] Index nnz() const noexcept { return static_cast<Index>(col_idx_.size()); }
  [[nodiscard]] std::span<const Index> row_ptr() const noexcept { return row_ptr_; }
  [[nodiscard]] std::span<const Index> col_idx() const noexcept { return col_idx_; }
  /// Position of (i, i) in col_idx, or no_diagonal.
  [[nodiscard]] Index diag(Index i) const noexcept { return diag_[i]; }

  /// Position of (i, j), or -1 when structurally zero.
  [[nodiscard]] Index find(Index i, Index j) const noexcept {
    const auto first = col_idx_.begin() + row_ptr_[i];
    const auto last = col_idx_.begin() + row_ptr_[i + 1];
    const auto it = std::lower_bound(first, last, j);
    return (it != last && *it == j) ? static_cast<Index>(it - col_idx_.begin()) : -1;
  }

  friend bool operator==(const CsrPattern& a, const CsrPattern& b) noexcept {
    return a.n_ == b.n_ && a.row_ptr_ == b.row_ptr_ && a.col_idx_ == b.col_idx_;
  }

 private:
  Index n_;
  std::vector<Index> row_ptr_;
  std::vector<Index> col_idx_;
  std::vector<Index> diag_;
};

/// Square CSR matrix over a multi-component scalar. The pattern is shared
/// and immutable, so precision conversions and factor storage reuse it.
template <class S>
class CsrMatrix {
 public:
  using value_type = S;

  CsrMatrix(std::shared_ptr<const CsrPattern> pattern, std::vector<S> values)
      : pattern_(std::move(pattern)), values_(std::move(values)) {
    if (!pattern_) throw std::invalid_argument("null CSR pattern");
    if (values_.size() != static_cast<std::size_t>(pattern_->nnz())) {
      throw std::invalid_argument("CSR value count does not match pattern nnz");
    }
  }

  [[nodiscard]] Index size() const noexcept { return pattern_->size(); }
  [[nodiscard]] Index nnz() const noexcept { return pattern_->nnz(); }
  [[nodiscard]] const CsrPattern& pattern() const noexcept { return *pattern_; }
  [[nodiscard]] const std::shared_ptr<const CsrPattern>& pattern_ptr() const noexcept {
    return pattern_;
  }
  [[nodiscard]] std::span<const Index> row_ptr() const noexcept { return pattern_->row_ptr(); }
  [[nodiscard]] std::span<const Index> col_idx() const noexcept { return pattern_->col_idx(); }
  [[nodiscard]] std::span<const S> values() const noexcept { return values_; }
  [[nodiscard]] Index diag(Index i) const noexcept { return pattern_->diag(i); }

  /// A(i, j), zero when structurally absent.
  [[nodiscard]] S at(Index i, Index j) const noexcept {
    const Index p = pattern_->find(i, j);
    return p < 0 ? S{} : values_[static_cast<std::size_t>(p)];
  }

 private:
  std::shared_ptr<const CsrPattern> pattern_;
  std::vector<S> values_;
};

/// Same pattern, values converted to another precision of the same field.
template <class To, class From>
[[nodiscard]] CsrMatrix<To> convert_values(const CsrMatrix<From>& a) {
  std::vector<To> v;
  v.reserve(a.values().size());
  for (const auto& x : a.values()) v.push_back(scalar_cast<To>(x));
  return CsrMatrix<To>(a.pattern_ptr(), std::move(v));
}

/// Embeds a real matrix into complex storage with zero imaginary parts.
template <int K>
[[nodiscard]] CsrMatrix<MCComplex<K>> to_complex(const CsrMatrix<MCFloat<K>>& a) {
  std::vector<MCComplex<K>> v(a.values().begin(), a.values().end());
  return CsrMatrix<MCComplex<K>>(a.pattern_ptr(), std::move(v));
}

/// Expands symmetric/hermitian/skew storage, sums duplicates (in the target
/// precision, in file order) and sorts each row. Binary64 values embed
/// exactly. The field of S must match the file: a real file is not silently
/// promoted to complex (use to_complex for that).
template <class S>
[[nodiscard]] CsrMatrix<S> coo_to_csr(const CooMatrix& coo) {
  if (coo.n_rows != coo.n_cols) {
    throw std::invalid_argument("matrix is " + std::to_string(coo.n_rows) + "x" +
                                std::to_string(coo.n_cols) + "; a square matrix is required");
  }
  constexpr bool want_complex = ScalarTraits<S>::is_complex;
  if (want_complex != (coo.field == Field::complex)) {
    throw std::invalid_argument(std::string("matrix field is ") + std::string(to_string(coo.field)) +
                                " but a " + (want_complex ? "complex" : "real") +
                                " scalar type was requested");
  }

  struct Triplet {
    Index row;
    Index col;
    double re;
    double im;
  };
  std::vector<Triplet> t;
  t.reserve(coo.entries.size() * (coo.symmetry == Symmetry::general ? 1 : 2));
  for (const auto& e : coo.entries) {
    t.push_back({e.row, e.col, e.re, e.im});
    if (e.row == e.col) continue;
    switch (coo.symmetry) {
      case Symmetry::general: break;
      case Symmetry::symmetric: t.push_back({e.col, e.row, e.re, e.im}); break;
      case Symmetry::hermitian: t.push_back({e.col, e.row, e.re, -e.im}); break;
      case Symmetry::skew_symmetric: t.push_back({e.col, e.row, -e.re, -e.im}); break;
    }
  }
  std::stable_sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  const Index n = coo.n_rows;
  std::vector<Index> row_ptr(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Index> col_idx;
  std::vector<S> values;
  col_idx.reserve(t.size());
  values.reserve(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const S v = make_scalar<S>(t[k].re, t[k].im);
    if (k > 0 && t[k].row == t[k - 1].row && t[k].col == t[k - 1].col) {
      values.back() += v;
      continue;
    }
    col_idx.push_back(t[k].col);
    values.push_back(v);
    ++row_ptr[static_cast<std::size_t>(t[k].row) + 1];
  }
  std::partial_sum(row_ptr.begin(), row_ptr.end(), row_ptr.begin());
  auto pattern = std::make_shared<const CsrPattern>(n, std::move(row_ptr), std::move(col_idx));
  return CsrMatrix<S>(std::move(pattern), std::move(values));
}

}  // namespace mpk
