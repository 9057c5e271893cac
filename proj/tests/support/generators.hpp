// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

#include "oracle.hpp"

namespace mpk::test {

/// Random pattern with a full diagonal and up to `extra` off-diagonal
/// entries per row.
inline std::shared_ptr<const CsrPattern> random_pattern(Rng& rng, Index n, int extra) {
  std::vector<Index> rp{0};
  std::vector<Index> ci;
  for (Index i = 0; i < n; ++i) {
    std::set<Index> cols{i};
    const int k = rng.integer(0, extra);
    for (int t = 0; t < k && n > 1; ++t) cols.insert(rng.integer(0, static_cast<int>(n - 1)));
    ci.insert(ci.end(), cols.begin(), cols.end());
    rp.push_back(static_cast<Index>(ci.size()));
  }
  return std::make_shared<const CsrPattern>(n, std::move(rp), std::move(ci));
}

inline std::shared_ptr<const CsrPattern> tridiagonal_pattern(Index n) {
  std::vector<Index> rp{0};
  std::vector<Index> ci;
  for (Index i = 0; i < n; ++i) {
    for (Index j = std::max<Index>(0, i - 1); j <= std::min<Index>(n - 1, i + 1); ++j) ci.push_back(j);
    rp.push_back(static_cast<Index>(ci.size()));
  }
  return std::make_shared<const CsrPattern>(n, std::move(rp), std::move(ci));
}

/// Values on a pattern; with dominance > 0 each diagonal entry exceeds the
/// off-diagonal row sum by that factor, which keeps elimination without
/// pivoting well conditioned.
template <class S>
CsrMatrix<S> random_values(Rng& rng, std::shared_ptr<const CsrPattern> pat, double dominance) {
  using R = real_t<S>;
  std::vector<S> v(static_cast<std::size_t>(pat->nnz()));
  for (Index i = 0; i < pat->size(); ++i) {
    R off{};
    for (Index p = pat->row_ptr()[i]; p < pat->row_ptr()[i + 1]; ++p) {
      if (pat->col_idx()[p] == i) continue;
      v[static_cast<std::size_t>(p)] = rng.scalar<S>(-1, 0);
      off += abs(v[static_cast<std::size_t>(p)]);
    }
    if (dominance > 0.0) {
      const S unit = rng.scalar<S>(0, 0);
      v[static_cast<std::size_t>(pat->diag(i))] = unit / abs(unit) * (off * R(1.0 + dominance) + R(1.0));
    } else {
      v[static_cast<std::size_t>(pat->diag(i))] = rng.scalar<S>(-1, 1);
    }
  }
  return CsrMatrix<S>(std::move(pat), std::move(v));
}

template <class S>
std::vector<S> random_vector(Rng& rng, Index n, int emin = -2, int emax = 2) {
  std::vector<S> x(static_cast<std::size_t>(n));
  for (auto& v : x) v = rng.scalar<S>(emin, emax);
  return x;
}

}  // namespace mpk::test
