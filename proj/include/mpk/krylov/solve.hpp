// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "mpk/krylov/bicg.hpp"
#include "mpk/krylov/bicgstab.hpp"
#include "mpk/krylov/cgs.hpp"
#include "mpk/krylov/gpbicg.hpp"

namespace mpk {

template <class S>
struct SolveResult {
  SolveReport report;
  DenseVector<S> x;
};

template <class S, LinearOperator<S> Op>
SolveReport run_method(Method method, const Op& a, std::span<const S> b, std::span<S> x,
                       const SolverConfig& cfg, const Preconditioner<S>* m) {
  switch (method) {
    case Method::bicg: return bicg<S>(a, b, x, cfg, m);
    case Method::cgs: return cgs<S>(a, b, x, cfg, m);
    case Method::bicgstab: return bicgstab<S>(a, b, x, cfg, m);
    case Method::gpbicg: return gpbicg<S>(a, b, x, cfg, m);
  }
  throw std::invalid_argument("unknown method");
}

/// Builds the preconditioner, runs the configured method from x = 0 and
/// fills every report field. total_seconds covers preconditioner
/// construction and the iteration. For mixed SpMV, a64 may carry the
/// binary64 copy of A; otherwise it is demoted here, outside the timing.
/// Factorization failures end up in report.breakdown.
template <class S>
[[nodiscard]] SolveResult<S> solve(const CsrMatrix<S>& a, std::span<const S> b,
                                   const SolverConfig& cfg, std::span<const S> x_star = {},
                                   const CsrMatrix<binary64_t<S>>* a64 = nullptr) {
  cfg.validate();
  if (cfg.precision != ScalarTraits<S>::precision) {
    throw std::invalid_argument("configured precision " + std::string(to_string(cfg.precision)) +
                                " does not match the scalar type");
  }
  detail::check_same_length(static_cast<std::size_t>(a.size()), b.size(), "solve");
  if (!x_star.empty()) detail::check_same_length(b.size(), x_star.size(), "solve x*");

  std::optional<CsrMatrix<binary64_t<S>>> demoted;
  if (cfg.spmv == SpmvMode::mixed && a64 == nullptr) {
    demoted.emplace(convert_values<binary64_t<S>>(a));
    a64 = &*demoted;
  }

  SolveResult<S> out;
  out.x.assign(b.size(), S{});
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto m = make_preconditioner<S>(cfg.precond, a);
    if (cfg.spmv == SpmvMode::mixed) {
      out.report = run_method<S>(cfg.method, MixedCsrOperator<S>(*a64, cfg.threads), b,
                                 std::span<S>(out.x), cfg, m.get());
    } else {
      out.report = run_method<S>(cfg.method, CsrOperator<S>(a, cfg.threads), b,
                                 std::span<S>(out.x), cfg, m.get());
    }
  } catch (const SingularPivotError& e) {
    out.report = SolveReport{};
    out.report.breakdown = e.what();
  } catch (const NumericBreakdown& e) {
    out.report = SolveReport{};
    out.report.breakdown = e.what();
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  out.report.set_timing(dt.count());

  DenseVector<S> res(b.size());
  spmv<S>(a, out.x, res);
  sub<S>(b, res, res);
  const real_t<S> bn = norm2<S>(b);
  const real_t<S> rn = norm2<S>(res);
  out.report.true_relres = to_double(is_zero(bn) ? rn : rn / bn);
  if (!x_star.empty()) {
    sub<S>(out.x, x_star, res);
    out.report.error_norm = to_double(norm2<S>(res));
  }
  return out;
}

template <class S>
[[nodiscard]] SolveResult<S> solve(const CsrMatrix<S>& a, const DenseVector<S>& b,
                                   const SolverConfig& cfg, const DenseVector<S>& x_star = {}) {
  return solve<S>(a, std::span<const S>(b), cfg, std::span<const S>(x_star));
}

}  // namespace mpk
