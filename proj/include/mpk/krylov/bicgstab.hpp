// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mpk/krylov/monitor.hpp"

namespace mpk {

/// Preconditioned BiCGSTAB. The stopping rule is checked on s after the
/// BiCG half step and on r after the minimal-residual step.
template <class S, LinearOperator<S> Op>
SolveReport bicgstab(const Op& a, std::span<const S> b, std::span<S> x, const SolverConfig& cfg,
                     const Preconditioner<S>* m = nullptr) {
  detail::check_system<S>(a, b, x, "bicgstab");
  const std::size_t n = b.size();
  detail::Monitor<S> mon(cfg, n);
  std::vector<S> r(n), rt(n), p(n), v(n), s(n), t(n), ph(n), sh(n);
  std::fill(x.begin(), x.end(), S{});

  try {
    a.apply(x, v);
    sub<S>(b, v, r);
    copy<S>(r, rt);
    if (mon.start(r)) return mon.report();
    S rho_prev{};
    S alpha{};
    S omega{};

    for (long long k = 1; k <= mon.max_iter(); ++k) {
      mon.begin(k);
      const S rho = hdot<S>(rt, r);
      if (is_zero(rho)) {
        mon.breakdown("rho = 0");
        break;
      }
      if (k == 1) {
        copy<S>(r, p);
      } else {
        const S beta = (rho / rho_prev) * (alpha / omega);
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
      }
      detail::precondition<S>(m, p, ph);
      a.apply(ph, v);
      const S sigma = hdot<S>(rt, v);
      if (is_zero(sigma)) {
        mon.breakdown("<r~0, A p^> = 0");
        break;
      }
      alpha = rho / sigma;
      for (std::size_t i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
      if (mon.check(s)) {
        if (mon.converged()) axpy<S>(alpha, ph, x);
        break;
      }

      detail::precondition<S>(m, s, sh);
      a.apply(sh, t);
      const S tt = hdot<S>(t, t);
      if (is_zero(tt)) {
        mon.breakdown("A s^ = 0");
        break;
      }
      omega = hdot<S>(t, s) / tt;
      for (std::size_t i = 0; i < n; ++i) {
        x[i] += alpha * ph[i] + omega * sh[i];
        r[i] = s[i] - omega * t[i];
      }
      if (mon.check(r)) break;
      if (is_zero(omega)) {
        mon.breakdown("omega = 0");
        break;
      }
      rho_prev = rho;
    }
  } catch (const NumericBreakdown& e) {
    mon.breakdown(e.what());
  }
  return mon.report();
}

}  // namespace mpk
