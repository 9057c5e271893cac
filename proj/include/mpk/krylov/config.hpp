// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mpk/precond/preconditioner.hpp"
#include "mpk/scalar/precision.hpp"

namespace mpk {

enum class Method { bicg, cgs, bicgstab, gpbicg };
enum class SpmvMode { full, mixed };

inline constexpr Method all_methods[] = {Method::bicg, Method::cgs, Method::bicgstab,
                                         Method::gpbicg};

[[nodiscard]] constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::bicg: return "bicg";
    case Method::cgs: return "cgs";
    case Method::bicgstab: return "bicgstab";
    case Method::gpbicg: return "gpbicg";
  }
  return "?";
}

[[nodiscard]] constexpr std::optional<Method> parse_method(std::string_view s) noexcept {
  for (auto m : all_methods) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

[[nodiscard]] constexpr std::string_view to_string(SpmvMode m) noexcept {
  return m == SpmvMode::full ? "full" : "mixed";
}

[[nodiscard]] constexpr std::optional<SpmvMode> parse_spmv_mode(std::string_view s) noexcept {
  if (s == "full") return SpmvMode::full;
  if (s == "mixed") return SpmvMode::mixed;
  return std::nullopt;
}

struct SolverConfig {
  Method method = Method::bicg;
  Precision precision = Precision::dd;
  PrecondMode precond = PrecondMode::none;
  SpmvMode spmv = SpmvMode::full;
  double eps_rel = 1e-13;
  double eps_abs = 1e-100;
  /// Explicit iteration cap; when unset the cap is max_iter_factor * n.
  std::optional<long long> max_iter;
  int max_iter_factor = 3;
  /// Threads for the row-partitioned SpMV; 1 keeps everything serial and
  /// bitwise reproducible.
  int threads = 1;

  [[nodiscard]] long long resolved_max_iter(long long n) const noexcept {
    return max_iter ? *max_iter : static_cast<long long>(max_iter_factor) * n;
  }

  void validate() const {
    if (!(eps_rel > 0.0) || !(eps_abs > 0.0)) {
      throw std::invalid_argument("eps_rel and eps_abs must be positive");
    }
    if (max_iter && *max_iter <= 0) throw std::invalid_argument("max_iter must be positive");
    if (!max_iter && max_iter_factor <= 0) throw std::invalid_argument("max_iter_factor must be positive");
    if (spmv == SpmvMode::mixed && components(precision) < 2) {
      throw std::invalid_argument("mixed SpMV needs a working precision above binary64");
    }
    if (precond == PrecondMode::ilu0_mixed && components(precision) < 2) {
      throw std::invalid_argument("mixed ILU(0) needs a working precision above binary64");
    }
    if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  }
};

/// Outcome of one solve. Timing fields are the only non-deterministic part.
struct SolveReport {
  long long iterations = 0;
  bool converged = false;
  double total_seconds = 0.0;
  double ms_per_iteration = 0.0;
  /// ||r_k|| / ||r_0|| of the recursively updated residual at exit.
  double final_recursive_relres = 0.0;
  /// ||b - A x|| / ||b||, recomputed once at exit.
  double true_relres = 0.0;
  /// ||x - x*||_2 when the exact solution is known.
  std::optional<double> error_norm;
  /// Empty unless the iteration stopped on a breakdown or failed.
  std::string breakdown;

  void set_timing(double seconds) noexcept {
    total_seconds = seconds;
    ms_per_iteration = iterations > 0 ? 1000.0 * seconds / static_cast<double>(iterations) : 0.0;
  }
};

}  // namespace mpk
