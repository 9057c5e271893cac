// SPDX-License-Identifier: Apache-2.0
//
// ILU(0): incomplete LU restricted to the sparsity pattern of A.
//
// L (unit lower, diagonal implicit) and U (upper including the diagonal)
// share one value array laid out on A's pattern: positions left of the
// diagonal hold L, the rest hold U. Factorization is the row-wise IKJ
// variant; in exact arithmetic it produces the same factors as the
// column-oriented KIJ elimination restricted to the pattern.

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpk/sparse/csr.hpp"
#include "mpk/sparse/vector_ops.hpp"

namespace mpk {

class SingularPivotError : public std::runtime_error {
 public:
  SingularPivotError(Index row, const std::string& what)
      : std::runtime_error("ILU(0) pivot " + std::to_string(row) + ": " + what), row_(row) {}
  [[nodiscard]] Index row() const noexcept { return row_; }

 private:
  Index row_;
};

class NumericBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
class IluFactors {
 public:
  using value_type = S;

  IluFactors(std::shared_ptr<const CsrPattern> pattern, std::vector<S> lu)
      : pattern_(std::move(pattern)), lu_(std::move(lu)) {}

  [[nodiscard]] Index size() const noexcept { return pattern_->size(); }
  [[nodiscard]] const CsrPattern& pattern() const noexcept { return *pattern_; }
  [[nodiscard]] const std::shared_ptr<const CsrPattern>& pattern_ptr() const noexcept {
    return pattern_;
  }
  /// Combined L\U values on the pattern.
  [[nodiscard]] std::span<const S> values() const noexcept { return lu_; }
  [[nodiscard]] Precision precision() const noexcept { return ScalarTraits<S>::precision; }

  /// L(i, j) for j < i, U(i, j) for j >= i, with L's unit diagonal implicit.
  [[nodiscard]] S lower(Index i, Index j) const noexcept {
    if (i == j) return S(1.0);
    const Index p = j < i ? pattern_->find(i, j) : -1;
    return p < 0 ? S{} : lu_[static_cast<std::size_t>(p)];
  }
  [[nodiscard]] S upper(Index i, Index j) const noexcept {
    const Index p = j >= i ? pattern_->find(i, j) : -1;
    return p < 0 ? S{} : lu_[static_cast<std::size_t>(p)];
  }

 private:
  std::shared_ptr<const CsrPattern> pattern_;
  std::vector<S> lu_;
};

/// Factorizes a copy of A's values. A zero or structurally missing pivot is
/// fatal and reported with its row.
template <class S>
[[nodiscard]] IluFactors<S> ilu0_factorize(const CsrMatrix<S>& a) {
  const Index n = a.size();
  const auto rp = a.row_ptr();
  const auto ci = a.col_idx();
  std::vector<S> lu(a.values().begin(), a.values().end());
  std::vector<Index> pos(static_cast<std::size_t>(n), -1);

  for (Index i = 0; i < n; ++i) {
    const Index di = a.diag(i);
    if (di == CsrPattern::no_diagonal) throw SingularPivotError(i, "diagonal entry structurally missing");
    for (Index p = rp[i]; p < rp[i + 1]; ++p) pos[ci[p]] = p;

    for (Index p = rp[i]; p < di; ++p) {
      const Index k = ci[p];
      lu[p] /= lu[a.diag(k)];
      const S lik = lu[p];
      for (Index q = a.diag(k) + 1; q < rp[k + 1]; ++q) {
        const Index target = pos[ci[q]];
        if (target >= 0) lu[target] -= lik * lu[q];
      }
    }

    for (Index p = rp[i]; p < rp[i + 1]; ++p) pos[ci[p]] = -1;
    if (is_zero(lu[di])) throw SingularPivotError(i, "zero pivot");
    if (!is_finite(lu[di])) throw NumericBreakdown("ILU(0) pivot " + std::to_string(i) + " is not finite");
  }
  return IluFactors<S>(a.pattern_ptr(), std::move(lu));
}

/// Demotes A's values to binary64, then factorizes entirely in binary64.
template <class S>
[[nodiscard]] IluFactors<binary64_t<S>> ilu0_factorize_demoted(const CsrMatrix<S>& a) {
  return ilu0_factorize(convert_values<binary64_t<S>>(a));
}

namespace detail {
template <class S>
void check_finite(std::span<const S> z, const char* what) {
  for (const auto& v : z) {
    if (!is_finite(v)) throw NumericBreakdown(std::string(what) + ": non-finite value in substitution");
  }
}
}  // namespace detail

/// z := U^-1 L^-1 r by a forward sweep over ascending rows and a backward
/// sweep over descending rows. r and z may alias.
template <class S>
void ilu0_apply(const IluFactors<S>& f, std::span<const S> r, std::span<S> z) {
  const Index n = f.size();
  detail::check_same_length(static_cast<std::size_t>(n), r.size(), "ilu0_apply");
  detail::check_same_length(static_cast<std::size_t>(n), z.size(), "ilu0_apply");
  const auto& pat = f.pattern();
  const auto rp = pat.row_ptr();
  const auto ci = pat.col_idx();
  const auto lu = f.values();

  for (Index i = 0; i < n; ++i) {
    S acc = r[i];
    for (Index p = rp[i]; p < pat.diag(i); ++p) acc -= lu[p] * z[ci[p]];
    z[i] = acc;
  }
  for (Index i = n - 1; i >= 0; --i) {
    S acc = z[i];
    for (Index p = pat.diag(i) + 1; p < rp[i + 1]; ++p) acc -= lu[p] * z[ci[p]];
    z[i] = acc / lu[pat.diag(i)];
  }
  detail::check_finite<S>(z, "ilu0_apply");
}

/// z := (LU)^-H r: forward sweep with U^H (diagonal conj(U_ii)), then a
/// backward sweep with the unit upper L^H. Column access is emulated by
/// scattering along rows. For real S this is the transpose solve.
template <class S>
void ilu0_apply_adjoint(const IluFactors<S>& f, std::span<const S> r, std::span<S> z) {
  const Index n = f.size();
  detail::check_same_length(static_cast<std::size_t>(n), r.size(), "ilu0_apply_adjoint");
  detail::check_same_length(static_cast<std::size_t>(n), z.size(), "ilu0_apply_adjoint");
  const auto& pat = f.pattern();
  const auto rp = pat.row_ptr();
  const auto ci = pat.col_idx();
  const auto lu = f.values();

  if (z.data() != r.data()) std::copy(r.begin(), r.end(), z.begin());
  for (Index i = 0; i < n; ++i) {
    const S wi = z[i] / conj(lu[pat.diag(i)]);
    z[i] = wi;
    for (Index p = pat.diag(i) + 1; p < rp[i + 1]; ++p) z[ci[p]] -= conj(lu[p]) * wi;
  }
  for (Index i = n - 1; i >= 0; --i) {
    const S zi = z[i];
    for (Index p = rp[i]; p < pat.diag(i); ++p) z[ci[p]] -= conj(lu[p]) * zi;
  }
  detail::check_finite<S>(z, "ilu0_apply_adjoint");
}

/// Mixed-precision substitution: r is demoted to binary64, both sweeps run
/// in binary64, and the result is promoted back exactly.
template <class S>
void ilu0_apply_mixed(const IluFactors<binary64_t<S>>& f, std::span<const S> r, std::span<S> z) {
  using B = binary64_t<S>;
  std::vector<B> work(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) work[i] = scalar_cast<B>(r[i]);
  ilu0_apply<B>(f, work, work);
  detail::check_same_length(r.size(), z.size(), "ilu0_apply_mixed");
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = scalar_cast<S>(work[i]);
}

template <class S>
void ilu0_apply_mixed_adjoint(const IluFactors<binary64_t<S>>& f, std::span<const S> r,
                              std::span<S> z) {
  using B = binary64_t<S>;
  std::vector<B> work(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) work[i] = scalar_cast<B>(r[i]);
  ilu0_apply_adjoint<B>(f, work, work);
  detail::check_same_length(r.size(), z.size(), "ilu0_apply_mixed_adjoint");
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = scalar_cast<S>(work[i]);
}

}  // namespace mpk
