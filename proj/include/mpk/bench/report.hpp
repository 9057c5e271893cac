// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpk/bench/runner.hpp"

namespace mpk::bench {

enum class ReportFormat { csv, json };

/// Per-iteration time ratios for one (matrix, method, precision); NaN where
/// a source row is missing or has no iterations.
struct RatioRow {
  std::string matrix;
  std::string method;
  std::string precision;
  double ilu0_over_plain = std::numeric_limits<double>::quiet_NaN();
  double ilu0d_over_plaind = std::numeric_limits<double>::quiet_NaN();
  double ilu0_over_ilu0d = std::numeric_limits<double>::quiet_NaN();
};

class ReportParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view csv_header =
    "matrix,method,precision,precond,spmv_mode,iterations,converged,total_s,ms_per_iter,"
    "true_relres,err2";
inline constexpr std::string_view ratio_csv_header =
    "matrix,method,precision,ilu0_over_plain,ilu0d_over_plaind,ilu0_over_ilu0d";

/// Rows in first-seen order of (matrix, method, precision).
[[nodiscard]] std::vector<RatioRow> compute_ratios(const std::vector<BenchRow>& rows);

/// CSV: header plus one line per row; with ratios, a blank line and the
/// ratio table follow. JSON: an array of row objects, or
/// {"rows": [...], "ratios": [...]} with ratios.
void emit_report(const std::vector<BenchRow>& rows, ReportFormat format, std::ostream& out,
                 bool with_ratios = false);

/// Parses the row table of either format (the ratio section is ignored).
[[nodiscard]] std::vector<BenchRow> parse_report(std::string_view text, ReportFormat format);

}  // namespace mpk::bench
