// SPDX-License-Identifier: Apache-2.0

#include "mpk/bench/runner.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "mpk/bench/problem.hpp"
#include "mpk/krylov/solve.hpp"

namespace mpk::bench {

std::vector<BenchCell> make_grid(const std::vector<Method>& methods,
                                 const std::vector<Precision>& precisions,
                                 const std::vector<Variant>& variants) {
  std::vector<BenchCell> cells;
  for (auto method : methods) {
    for (auto precision : precisions) {
      for (auto v : variants) {
        const bool mixed = v.spmv == SpmvMode::mixed || v.precond == PrecondMode::ilu0_mixed;
        if (mixed && components(precision) < 2) continue;
        cells.push_back({method, precision, v.precond, v.spmv});
      }
    }
  }
  return cells;
}

std::vector<BenchCell> default_grid() {
  return make_grid({std::begin(all_methods), std::end(all_methods)},
                   {Precision::dd, Precision::td, Precision::qd},
                   {std::begin(default_variants), std::end(default_variants)});
}

namespace {

BenchRow labels(const std::string& matrix, const BenchCell& c) {
  BenchRow row;
  row.matrix = matrix;
  row.method = std::string(to_string(c.method));
  row.precision = std::string(to_string(c.precision));
  row.precond = std::string(to_string(c.precond));
  row.spmv_mode = std::string(to_string(c.spmv));
  return row;
}

std::string cell_label(const BenchRow& r) {
  return r.matrix + " " + r.method + " " + r.precision + " " + r.precond + " " + r.spmv_mode;
}

template <class S>
void run_cells(const MatrixSource& src, const std::vector<BenchCell>& cells,
               const BenchOptions& opt, BenchResult& out) {
  std::optional<Problem<S>> prob;
  std::string setup_error;
  try {
    prob.emplace(build_problem<S>(src.name, coo_to_csr<S>(src.coo)));
  } catch (const std::exception& e) {
    setup_error = e.what();
  }

  std::optional<CsrMatrix<binary64_t<S>>> a64;
  for (const auto& c : cells) {
    BenchRow row = labels(src.name, c);
    if (!prob) {
      out.failures.push_back(cell_label(row) + ": " + setup_error);
      out.rows.push_back(row);
      continue;
    }
    SolverConfig cfg;
    cfg.method = c.method;
    cfg.precision = c.precision;
    cfg.precond = c.precond;
    cfg.spmv = c.spmv;
    cfg.eps_rel = opt.eps_rel;
    cfg.eps_abs = opt.eps_abs;
    cfg.max_iter_factor = opt.max_iter_factor;
    cfg.threads = opt.threads;
    try {
      cfg.validate();
      if (c.spmv == SpmvMode::mixed && !a64) a64.emplace(convert_values<binary64_t<S>>(prob->a));
      const auto res = solve<S>(prob->a, std::span<const S>(prob->b), cfg,
                                std::span<const S>(prob->x_star), a64 ? &*a64 : nullptr);
      const auto& rep = res.report;
      row.iterations = rep.iterations;
      row.converged = rep.converged;
      row.total_s = rep.total_seconds;
      row.ms_per_iter = rep.ms_per_iteration;
      row.true_relres = rep.true_relres;
      row.err2 = rep.error_norm.value_or(row.err2);
      if (!rep.breakdown.empty()) out.notes.push_back(cell_label(row) + ": " + rep.breakdown);
    } catch (const std::exception& e) {
      out.failures.push_back(cell_label(row) + ": " + e.what());
    }
    out.rows.push_back(row);
  }
}

template <int K>
void run_precision(const MatrixSource& src, const std::vector<BenchCell>& cells,
                   const BenchOptions& opt, BenchResult& out) {
  if (src.coo.field == Field::complex) {
    run_cells<MCComplex<K>>(src, cells, opt, out);
  } else {
    run_cells<MCFloat<K>>(src, cells, opt, out);
  }
}

}  // namespace

BenchResult run_benchmark(const std::vector<MatrixSource>& matrices,
                          const std::vector<BenchCell>& cells, const BenchOptions& options) {
  BenchResult out;
  for (const auto& src : matrices) {
    std::vector<Precision> order;
    for (const auto& c : cells) {
      if (std::find(order.begin(), order.end(), c.precision) == order.end()) order.push_back(c.precision);
    }
    for (auto precision : order) {
      std::vector<BenchCell> subset;
      for (const auto& c : cells) {
        if (c.precision == precision) subset.push_back(c);
      }
      switch (precision) {
        case Precision::f64: run_precision<1>(src, subset, options, out); break;
        case Precision::dd: run_precision<2>(src, subset, options, out); break;
        case Precision::td: run_precision<3>(src, subset, options, out); break;
        case Precision::qd: run_precision<4>(src, subset, options, out); break;
      }
    }
  }
  return out;
}

}  // namespace mpk::bench
