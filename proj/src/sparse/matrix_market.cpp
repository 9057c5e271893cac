// SPDX-License-Identifier: Apache-2.0

#include "mpk/sparse/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mpk {

std::string_view to_string(Field f) noexcept {
  return f == Field::real ? "real" : "complex";
}

std::string_view to_string(Symmetry s) noexcept {
  switch (s) {
    case Symmetry::general: return "general";
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::hermitian: return "hermitian";
    case Symmetry::skew_symmetric: return "skew-symmetric";
  }
  return "general";
}

MatrixMarketError::MatrixMarketError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "Matrix Market line " + std::to_string(line) + ": " + message
                                  : "Matrix Market: " + message),
      line_(line),
      detail_(message) {}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

enum class FileField { real, complex, integer, pattern };

// Tokenizer over one line; strtod-based so Fortran-style "1.5D+02" is not
// accepted but every C literal (including inf/nan) is.
class Tokens {
 public:
  explicit Tokens(const std::string& line) : p_(line.c_str()) {}

  bool next_index(Index& v) {
    skip();
    if (*p_ == '\0') return false;
    char* end = nullptr;
    const long long x = std::strtoll(p_, &end, 10);
    if (end == p_) return false;
    p_ = end;
    v = static_cast<Index>(x);
    return true;
  }

  bool next_double(double& v) {
    skip();
    if (*p_ == '\0') return false;
    char* end = nullptr;
    v = std::strtod(p_, &end);
    if (end == p_) return false;
    p_ = end;
    return true;
  }

  bool at_end() {
    skip();
    return *p_ == '\0';
  }

 private:
  void skip() {
    while (*p_ != '\0' && std::isspace(static_cast<unsigned char>(*p_))) ++p_;
  }
  const char* p_;
};

}  // namespace

CooMatrix read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw MatrixMarketError(0, "empty input");
  ++lineno;
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") throw MatrixMarketError(lineno, "missing %%MatrixMarket banner");
  object = lower(object);
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix") throw MatrixMarketError(lineno, "unsupported object '" + object + "'");
  if (format == "array") throw MatrixMarketError(lineno, "array (dense) layout is not supported");
  if (format != "coordinate") throw MatrixMarketError(lineno, "unknown format '" + format + "'");

  FileField ff;
  if (field == "real" || field == "double") {
    ff = FileField::real;
  } else if (field == "complex") {
    ff = FileField::complex;
  } else if (field == "integer") {
    ff = FileField::integer;
  } else if (field == "pattern") {
    ff = FileField::pattern;
  } else {
    throw MatrixMarketError(lineno, "unknown field '" + field + "'");
  }

  CooMatrix coo;
  coo.field = ff == FileField::complex ? Field::complex : Field::real;
  if (symmetry == "general") {
    coo.symmetry = Symmetry::general;
  } else if (symmetry == "symmetric") {
    coo.symmetry = Symmetry::symmetric;
  } else if (symmetry == "hermitian") {
    if (ff != FileField::complex) throw MatrixMarketError(lineno, "hermitian requires complex field");
    coo.symmetry = Symmetry::hermitian;
  } else if (symmetry == "skew-symmetric") {
    if (ff == FileField::pattern) throw MatrixMarketError(lineno, "skew-symmetric pattern is invalid");
    coo.symmetry = Symmetry::skew_symmetric;
  } else {
    throw MatrixMarketError(lineno, "unknown symmetry '" + symmetry + "'");
  }

  // Size line, after comments.
  Index declared = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%' || is_blank(line)) continue;
    Tokens t(line);
    if (!t.next_index(coo.n_rows) || !t.next_index(coo.n_cols) || !t.next_index(declared) ||
        !t.at_end()) {
      throw MatrixMarketError(lineno, "malformed size line, expected 'rows cols nnz'");
    }
    if (coo.n_rows <= 0 || coo.n_cols <= 0 || declared < 0) {
      throw MatrixMarketError(lineno, "non-positive dimensions or negative entry count");
    }
    break;
  }
  if (declared < 0) throw MatrixMarketError(lineno, "missing size line");

  coo.entries.reserve(static_cast<std::size_t>(declared));
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%' || is_blank(line)) continue;
    if (static_cast<Index>(coo.entries.size()) == declared) {
      throw MatrixMarketError(lineno, "more entries than the declared " + std::to_string(declared));
    }
    Tokens t(line);
    CooEntry e;
    Index i = 0, j = 0;
    if (!t.next_index(i) || !t.next_index(j)) throw MatrixMarketError(lineno, "malformed entry indices");
    if (i < 1 || i > coo.n_rows || j < 1 || j > coo.n_cols) {
      throw MatrixMarketError(lineno, "index (" + std::to_string(i) + ", " + std::to_string(j) +
                                          ") out of bounds");
    }
    e.row = i - 1;
    e.col = j - 1;
    switch (ff) {
      case FileField::pattern: e.re = 1.0; break;
      case FileField::real:
      case FileField::integer:
        if (!t.next_double(e.re)) throw MatrixMarketError(lineno, "missing value");
        break;
      case FileField::complex:
        if (!t.next_double(e.re) || !t.next_double(e.im)) {
          throw MatrixMarketError(lineno, "complex entry needs real and imaginary parts");
        }
        break;
    }
    if (!t.at_end()) throw MatrixMarketError(lineno, "trailing data after entry");
    if (!std::isfinite(e.re) || !std::isfinite(e.im)) throw MatrixMarketError(lineno, "non-finite value");
    coo.entries.push_back(e);
  }
  if (static_cast<Index>(coo.entries.size()) != declared) {
    throw MatrixMarketError(lineno, "expected " + std::to_string(declared) + " entries, found " +
                                        std::to_string(coo.entries.size()));
  }
  return coo;
}

CooMatrix read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_matrix_market(in);
  } catch (const MatrixMarketError& e) {
    throw MatrixMarketError(e.line(), path.string() + ": " + e.detail());
  }
}

void write_matrix_market(std::ostream& out, const CooMatrix& coo) {
  out << "%%MatrixMarket matrix coordinate " << to_string(coo.field) << ' '
      << to_string(coo.symmetry) << '\n';
  out << coo.n_rows << ' ' << coo.n_cols << ' ' << coo.entries.size() << '\n';
  char buf[64];
  for (const auto& e : coo.entries) {
    out << e.row + 1 << ' ' << e.col + 1;
    auto r = std::to_chars(buf, buf + sizeof buf, e.re);
    out << ' ' << std::string_view(buf, static_cast<std::size_t>(r.ptr - buf));
    if (coo.field == Field::complex) {
      r = std::to_chars(buf, buf + sizeof buf, e.im);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(r.ptr - buf));
    }
    out << '\n';
  }
}

void write_matrix_market(const std::filesystem::path& path, const CooMatrix& coo) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_matrix_market(out, coo);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace mpk
