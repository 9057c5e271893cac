// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mpk/krylov/monitor.hpp"

namespace mpk {

/// Preconditioned CGS (squared BiCG). Two M-solves per iteration, on the
/// search direction and on u + q; the shadow residual stays at r_0.
template <class S, LinearOperator<S> Op>
SolveReport cgs(const Op& a, std::span<const S> b, std::span<S> x, const SolverConfig& cfg,
                const Preconditioner<S>* m = nullptr) {
  detail::check_system<S>(a, b, x, "cgs");
  const std::size_t n = b.size();
  detail::Monitor<S> mon(cfg, n);
  std::vector<S> r(n), rt(n), u(n), p(n), q(n), ph(n), vh(n), uh(n), w(n);
  std::fill(x.begin(), x.end(), S{});

  try {
    a.apply(x, vh);
    sub<S>(b, vh, r);
    copy<S>(r, rt);
    if (mon.start(r)) return mon.report();
    S rho_prev{};

    for (long long k = 1; k <= mon.max_iter(); ++k) {
      mon.begin(k);
      const S rho = hdot<S>(rt, r);
      if (is_zero(rho)) {
        mon.breakdown("rho = 0");
        break;
      }
      if (k == 1) {
        copy<S>(r, u);
        copy<S>(u, p);
      } else {
        const S beta = rho / rho_prev;
        for (std::size_t i = 0; i < n; ++i) {
          u[i] = r[i] + beta * q[i];
          p[i] = u[i] + beta * (q[i] + beta * p[i]);
        }
      }
      detail::precondition<S>(m, p, ph);
      a.apply(ph, vh);
      const S sigma = hdot<S>(rt, vh);
      if (is_zero(sigma)) {
        mon.breakdown("<r~0, A p^> = 0");
        break;
      }
      const S alpha = rho / sigma;
      for (std::size_t i = 0; i < n; ++i) {
        q[i] = u[i] - alpha * vh[i];
        w[i] = u[i] + q[i];
      }
      detail::precondition<S>(m, w, uh);
      axpy<S>(alpha, uh, x);
      a.apply(uh, w);
      axpy<S>(-alpha, w, r);
      if (mon.check(r)) break;
      rho_prev = rho;
    }
  } catch (const NumericBreakdown& e) {
    mon.breakdown(e.what());
  }
  return mon.report();
}

}  // namespace mpk
