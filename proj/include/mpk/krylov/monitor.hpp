// SPDX-License-Identifier: Apache-2.0
//
// Shared bookkeeping for the Krylov solvers: stopping rule, iteration count,
// breakdown reporting and wall-clock timing.

#pragma once

#include <chrono>
#include <span>
#include <string>
#include <vector>

#include "mpk/krylov/config.hpp"
#include "mpk/krylov/operator.hpp"
#include "mpk/precond/preconditioner.hpp"
#include "mpk/sparse/vector_ops.hpp"

namespace mpk::detail {

template <class S>
class Monitor {
 public:
  using R = real_t<S>;

  Monitor(const SolverConfig& cfg, std::size_t n)
      : start_time_(std::chrono::steady_clock::now()),
        max_iter_(cfg.resolved_max_iter(static_cast<long long>(n))),
        eps_rel_(cfg.eps_rel),
        eps_abs_(cfg.eps_abs) {}

  [[nodiscard]] long long max_iter() const noexcept { return max_iter_; }
  [[nodiscard]] bool converged() const noexcept { return converged_; }

  /// Records ||r_0||. Returns true when no iteration is needed.
  bool start(std::span<const S> r0) {
    r0_norm_ = norm2<S>(r0);
    last_ = r0_norm_;
    if (!is_finite(r0_norm_)) {
      breakdown_ = "initial residual is not finite";
      return true;
    }
    threshold_ = R(eps_rel_) * r0_norm_ + R(eps_abs_);
    converged_ = last_ < threshold_;
    return converged_;
  }

  void begin(long long k) noexcept { current_ = k; }

  /// Tests ||r|| against the stopping rule; true means stop.
  bool check(std::span<const S> r) {
    last_ = norm2<S>(r);
    iterations_ = current_;
    if (!is_finite(last_)) {
      breakdown("residual norm is not finite");
      return true;
    }
    converged_ = last_ < threshold_;
    return converged_;
  }

  /// Stops inside iteration k; only the k - 1 finished iterations count.
  bool breakdown(const std::string& what) {
    iterations_ = current_ > 0 ? current_ - 1 : 0;
    breakdown_ = what + (current_ > 0 ? " in iteration " + std::to_string(current_) : " before the first iteration");
    return true;
  }

  [[nodiscard]] SolveReport report() const {
    SolveReport rep;
    rep.iterations = iterations_;
    rep.converged = converged_;
    rep.breakdown = breakdown_;
    rep.final_recursive_relres = is_zero(r0_norm_) ? 0.0 : to_double(last_ / r0_norm_);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_time_;
    rep.set_timing(dt.count());
    return rep;
  }

 private:
  std::chrono::steady_clock::time_point start_time_;
  long long max_iter_;
  double eps_rel_;
  double eps_abs_;
  R r0_norm_{};
  R threshold_{};
  R last_{};
  long long current_ = 0;
  long long iterations_ = 0;
  bool converged_ = false;
  std::string breakdown_;
};

/// z := M^-1 r, or a copy without a preconditioner.
template <class S>
void precondition(const Preconditioner<S>* m, std::span<const S> r, std::span<S> z) {
  if (m != nullptr) {
    m->apply(r, z);
  } else {
    copy<S>(r, z);
  }
}

template <class S>
void precondition_adjoint(const Preconditioner<S>* m, std::span<const S> r, std::span<S> z) {
  if (m != nullptr) {
    m->apply_adjoint(r, z);
  } else {
    copy<S>(r, z);
  }
}

template <class S, class Op>
void check_system(const Op& a, std::span<const S> b, std::span<S> x, const char* who) {
  check_same_length(static_cast<std::size_t>(a.size()), b.size(), who);
  check_same_length(b.size(), x.size(), who);
}

}  // namespace mpk::detail
