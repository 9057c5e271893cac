// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mpk/krylov/monitor.hpp"

namespace mpk {

/// Preconditioned BiCG for complex systems. The shadow system is driven by
/// A^H and M^H with conjugated step lengths; for real S it is the classic
/// two-sided BiCG. x starts from zero.
template <class S, LinearOperator<S> Op>
SolveReport bicg(const Op& a, std::span<const S> b, std::span<S> x, const SolverConfig& cfg,
                 const Preconditioner<S>* m = nullptr) {
  detail::check_system<S>(a, b, x, "bicg");
  const std::size_t n = b.size();
  detail::Monitor<S> mon(cfg, n);
  std::vector<S> r(n), rt(n), z(n), zt(n), p(n), pt(n), q(n), qt(n);
  std::fill(x.begin(), x.end(), S{});

  try {
    a.apply(x, q);
    sub<S>(b, q, r);
    copy<S>(r, rt);
    if (mon.start(r)) return mon.report();
    detail::precondition<S>(m, r, z);
    detail::precondition_adjoint<S>(m, rt, zt);
    copy<S>(z, p);
    copy<S>(zt, pt);
    S rho = hdot<S>(zt, r);

    for (long long k = 1; k <= mon.max_iter(); ++k) {
      mon.begin(k);
      if (is_zero(rho)) {
        mon.breakdown("rho = 0");
        break;
      }
      a.apply(p, q);
      a.apply_adjoint(pt, qt);
      const S sigma = hdot<S>(pt, q);
      if (is_zero(sigma)) {
        mon.breakdown("<p~, A p> = 0");
        break;
      }
      const S alpha = rho / sigma;
      axpy<S>(alpha, p, x);
      axpy<S>(-alpha, q, r);
      axpy<S>(-conj(alpha), qt, rt);
      if (mon.check(r)) break;

      detail::precondition<S>(m, r, z);
      detail::precondition_adjoint<S>(m, rt, zt);
      const S rho_new = hdot<S>(zt, r);
      const S beta = rho_new / rho;
      xpby<S>(z, beta, p);
      xpby<S>(zt, conj(beta), pt);
      rho = rho_new;
    }
  } catch (const NumericBreakdown& e) {
    mon.breakdown(e.what());
  }
  return mon.report();
}

}  // namespace mpk
