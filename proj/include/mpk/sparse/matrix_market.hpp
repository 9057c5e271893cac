// SPDX-License-Identifier: Apache-2.0
//
// Coordinate-format Matrix Market reader/writer. Values are kept in
// binary64, exactly as they appear in the file; symmetric storage is not
// expanded here (see coo_to_csr).

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpk {

using Index = std::int64_t;

enum class Field { real, complex };
enum class Symmetry { general, symmetric, hermitian, skew_symmetric };

[[nodiscard]] std::string_view to_string(Field f) noexcept;
[[nodiscard]] std::string_view to_string(Symmetry s) noexcept;

struct CooEntry {
  Index row = 0;  // 0-based
  Index col = 0;  // 0-based
  double re = 0.0;
  double im = 0.0;
};

struct CooMatrix {
  Index n_rows = 0;
  Index n_cols = 0;
  Field field = Field::real;
  Symmetry symmetry = Symmetry::general;
  std::vector<CooEntry> entries;
};

class MatrixMarketError : public std::runtime_error {
 public:
  MatrixMarketError(std::size_t line, const std::string& message);
  /// 1-based line of the offending input, 0 when not tied to a line.
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  /// The message without the location prefix.
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// Parses `%%MatrixMarket matrix coordinate {real|complex|integer|pattern}
/// {general|symmetric|hermitian|skew-symmetric}`. Integer entries are read as
/// real; pattern entries get value 1.
[[nodiscard]] CooMatrix read_matrix_market(std::istream& in);
[[nodiscard]] CooMatrix read_matrix_market(const std::filesystem::path& path);

/// Writes the matrix in coordinate layout; values use the shortest
/// representation that reads back to the same binary64.
void write_matrix_market(std::ostream& out, const CooMatrix& coo);
void write_matrix_market(const std::filesystem::path& path, const CooMatrix& coo);

}  // namespace mpk
