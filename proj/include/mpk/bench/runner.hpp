// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <string>
#include <vector>

#include "mpk/krylov/config.hpp"
#include "mpk/sparse/matrix_market.hpp"

namespace mpk::bench {

/// One result row; err2 is NaN when the cell did not produce a solution.
struct BenchRow {
  std::string matrix;
  std::string method;
  std::string precision;
  std::string precond;
  std::string spmv_mode;
  long long iterations = 0;
  bool converged = false;
  double total_s = 0.0;
  double ms_per_iter = 0.0;
  double true_relres = std::numeric_limits<double>::quiet_NaN();
  double err2 = std::numeric_limits<double>::quiet_NaN();
};

struct BenchCell {
  Method method = Method::bicg;
  Precision precision = Precision::dd;
  PrecondMode precond = PrecondMode::none;
  SpmvMode spmv = SpmvMode::full;
};

struct BenchOptions {
  double eps_rel = 1e-13;
  double eps_abs = 1e-100;
  int max_iter_factor = 3;
  int threads = 1;
};

struct MatrixSource {
  std::string name;
  CooMatrix coo;
};

/// Plain, ILU(0), mixed SpMV, and mixed SpMV with mixed ILU(0).
struct Variant {
  PrecondMode precond;
  SpmvMode spmv;
};
inline constexpr Variant default_variants[] = {
    {PrecondMode::none, SpmvMode::full},
    {PrecondMode::ilu0_full, SpmvMode::full},
    {PrecondMode::none, SpmvMode::mixed},
    {PrecondMode::ilu0_mixed, SpmvMode::mixed},
};

/// Cross product of the given axes. Binary64 cannot run the mixed
/// variants; those combinations are left out.
[[nodiscard]] std::vector<BenchCell> make_grid(const std::vector<Method>& methods,
                                               const std::vector<Precision>& precisions,
                                               const std::vector<Variant>& variants);

/// 4 methods x {DD, TD, QD} x the four default variants.
[[nodiscard]] std::vector<BenchCell> default_grid();

/// A cell that could not run at all (invalid configuration, conversion
/// failure) still yields a row; its message lands in failures. Solver
/// breakdowns are results, reported in notes.
struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

/// Runs every cell on every matrix, sequentially. For each matrix and
/// precision the matrix is converted and b = A x* is built once, outside
/// the timed region.
[[nodiscard]] BenchResult run_benchmark(const std::vector<MatrixSource>& matrices,
                                        const std::vector<BenchCell>& cells,
                                        const BenchOptions& options);

}  // namespace mpk::bench
