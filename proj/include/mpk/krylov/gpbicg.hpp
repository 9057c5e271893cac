// SPDX-License-Identifier: Apache-2.0
//
// GPBiCG with Zhang's recurrences, preconditioned through M^-1 p and M^-1 t
// (two solves per iteration). The residual-side vectors follow the
// unpreconditioned recurrences for A M^-1. The solution update is rebuilt
// from the solved vectors only:
//
//   z^_n = zeta t^_n + eta (z^_{n-1} - alpha t^_{n-1} - alpha beta_{n-1} p^_{n-1} + alpha p^_n)
//   x_{n+1} = x_n + alpha p^_n + z^_n
//
// so x stays consistent with r even when M^-1 is applied in lower precision.

#pragma once

#include "mpk/krylov/monitor.hpp"

namespace mpk {

template <class S, LinearOperator<S> Op>
SolveReport gpbicg(const Op& a, std::span<const S> b, std::span<S> x, const SolverConfig& cfg,
                   const Preconditioner<S>* m = nullptr) {
  detail::check_system<S>(a, b, x, "gpbicg");
  const std::size_t n = b.size();
  detail::Monitor<S> mon(cfg, n);
  std::vector<S> r(n), rt(n), p(n), ph(n), ph_prev(n), ap(n), t(n), t_prev(n), th(n), th_prev(n),
      at(n), y(n), w(n), u(n), zh(n);
  std::fill(x.begin(), x.end(), S{});

  try {
    a.apply(x, ap);
    sub<S>(b, ap, r);
    copy<S>(r, rt);
    if (mon.start(r)) return mon.report();
    S rho = hdot<S>(rt, r);
    S beta{};

    for (long long k = 1; k <= mon.max_iter(); ++k) {
      mon.begin(k);
      const bool first = k == 1;
      if (is_zero(rho)) {
        mon.breakdown("rho = 0");
        break;
      }
      if (first) {
        copy<S>(r, p);
      } else {
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - u[i]);
      }
      detail::precondition<S>(m, p, ph);
      a.apply(ph, ap);
      const S sigma = hdot<S>(rt, ap);
      if (is_zero(sigma)) {
        mon.breakdown("<r~0, A p^> = 0");
        break;
      }
      const S alpha = rho / sigma;
      for (std::size_t i = 0; i < n; ++i) {
        if (!first) y[i] = t_prev[i] - r[i] - alpha * w[i] + alpha * ap[i];
        t[i] = r[i] - alpha * ap[i];
      }
      detail::precondition<S>(m, t, th);
      a.apply(th, at);

      S zeta{};
      S eta{};
      const S att = hdot<S>(at, at);
      const S att_t = hdot<S>(at, t);
      bool degenerate = false;
      if (first) {
        degenerate = is_zero(att);
        if (!degenerate) zeta = att_t / att;
      } else {
        const S yy = hdot<S>(y, y);
        const S y_at = hdot<S>(y, at);
        const S at_y = hdot<S>(at, y);
        const S y_t = hdot<S>(y, t);
        const S det = att * yy - y_at * at_y;
        degenerate = is_zero(det);
        if (!degenerate) {
          zeta = (yy * att_t - at_y * y_t) / det;
          eta = (att * y_t - y_at * att_t) / det;
        }
      }
      if (degenerate) {
        // A M^-1 t = 0 means t itself is the residual of x + alpha p^.
        if (mon.check(t)) {
          if (mon.converged()) axpy<S>(alpha, ph, x);
        } else {
          mon.breakdown("singular (zeta, eta) system");
        }
        break;
      }

      for (std::size_t i = 0; i < n; ++i) {
        if (first) {
          u[i] = zeta * ap[i];
          zh[i] = zeta * th[i];
        } else {
          u[i] = zeta * ap[i] + eta * (t_prev[i] - r[i] + beta * u[i]);
          zh[i] = zeta * th[i] +
                  eta * (zh[i] - alpha * th_prev[i] - alpha * beta * ph_prev[i] + alpha * ph[i]);
        }
        x[i] += alpha * ph[i] + zh[i];
        r[i] = first ? t[i] - zeta * at[i] : t[i] - eta * y[i] - zeta * at[i];
      }
      if (mon.check(r)) break;

      const S rho_new = hdot<S>(rt, r);
      if (is_zero(zeta)) {
        mon.breakdown("zeta = 0");
        break;
      }
      beta = (alpha / zeta) * (rho_new / rho);
      for (std::size_t i = 0; i < n; ++i) w[i] = at[i] + beta * ap[i];
      std::swap(t_prev, t);
      std::swap(th_prev, th);
      std::swap(ph_prev, ph);
      rho = rho_new;
    }
  } catch (const NumericBreakdown& e) {
    mon.breakdown(e.what());
  }
  return mon.report();
}

}  // namespace mpk
