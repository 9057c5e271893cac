// SPDX-License-Identifier: Apache-2.0

#include "mpk/bench/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <tuple>

#include "json.hpp"

namespace mpk::bench {

namespace {

using json = nlohmann::json;

const BenchRow* find_row(const std::vector<BenchRow>& rows, const RatioRow& key,
                         PrecondMode precond, SpmvMode spmv) {
  for (const auto& r : rows) {
    if (r.matrix == key.matrix && r.method == key.method && r.precision == key.precision &&
        r.precond == to_string(precond) && r.spmv_mode == to_string(spmv)) {
      return &r;
    }
  }
  return nullptr;
}

double ratio(const BenchRow* num, const BenchRow* den) {
  if (num == nullptr || den == nullptr || num->iterations <= 0 || den->iterations <= 0 ||
      !(den->ms_per_iter > 0.0)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return num->ms_per_iter / den->ms_per_iter;
}

std::string format_double(double v) {
  if (std::isnan(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ReportParseError("line " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(std::move(cur));
  return fields;
}

double parse_double(const std::string& s, std::size_t line_no) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ReportParseError("line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

long long parse_int(const std::string& s, std::size_t line_no) {
  long long v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ReportParseError("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
  return v;
}

bool parse_bool(const std::string& s, std::size_t line_no) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ReportParseError("line " + std::to_string(line_no) + ": bad boolean '" + s + "'");
}

json number_or_null(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json row_to_json(const BenchRow& r) {
  return json{{"matrix", r.matrix},
              {"method", r.method},
              {"precision", r.precision},
              {"precond", r.precond},
              {"spmv_mode", r.spmv_mode},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"total_s", r.total_s},
              {"ms_per_iter", r.ms_per_iter},
              {"true_relres", number_or_null(r.true_relres)},
              {"err2", number_or_null(r.err2)}};
}

void emit_csv(const std::vector<BenchRow>& rows, std::ostream& out, bool with_ratios) {
  out << csv_header << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.matrix) << ',' << csv_field(r.method) << ',' << csv_field(r.precision)
        << ',' << csv_field(r.precond) << ',' << csv_field(r.spmv_mode) << ',' << r.iterations
        << ',' << (r.converged ? "true" : "false") << ',' << format_double(r.total_s) << ','
        << format_double(r.ms_per_iter) << ',' << format_double(r.true_relres) << ','
        << format_double(r.err2) << '\n';
  }
  if (!with_ratios) return;
  out << '\n' << ratio_csv_header << '\n';
  for (const auto& q : compute_ratios(rows)) {
    out << csv_field(q.matrix) << ',' << csv_field(q.method) << ',' << csv_field(q.precision)
        << ',' << format_double(q.ilu0_over_plain) << ',' << format_double(q.ilu0d_over_plaind)
        << ',' << format_double(q.ilu0_over_ilu0d) << '\n';
  }
}

void emit_json(const std::vector<BenchRow>& rows, std::ostream& out, bool with_ratios) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(row_to_json(r));
  if (!with_ratios) {
    out << arr.dump(2) << '\n';
    return;
  }
  json ratios = json::array();
  for (const auto& q : compute_ratios(rows)) {
    ratios.push_back({{"matrix", q.matrix},
                      {"method", q.method},
                      {"precision", q.precision},
                      {"ilu0_over_plain", number_or_null(q.ilu0_over_plain)},
                      {"ilu0d_over_plaind", number_or_null(q.ilu0d_over_plaind)},
                      {"ilu0_over_ilu0d", number_or_null(q.ilu0_over_ilu0d)}});
  }
  out << json{{"rows", arr}, {"ratios", ratios}}.dump(2) << '\n';
}

std::vector<BenchRow> parse_csv(std::string_view text) {
  std::vector<BenchRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != csv_header) throw ReportParseError("line 1: unexpected CSV header");
      header_seen = true;
      continue;
    }
    if (line.empty()) break;  // ratio section follows
    const auto f = split_csv_line(line, line_no);
    if (f.size() != 11) {
      throw ReportParseError("line " + std::to_string(line_no) + ": expected 11 fields, got " +
                             std::to_string(f.size()));
    }
    BenchRow r;
    r.matrix = f[0];
    r.method = f[1];
    r.precision = f[2];
    r.precond = f[3];
    r.spmv_mode = f[4];
    r.iterations = parse_int(f[5], line_no);
    r.converged = parse_bool(f[6], line_no);
    r.total_s = parse_double(f[7], line_no);
    r.ms_per_iter = parse_double(f[8], line_no);
    r.true_relres = parse_double(f[9], line_no);
    r.err2 = parse_double(f[10], line_no);
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw ReportParseError("empty CSV report");
  return rows;
}

std::vector<BenchRow> parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ReportParseError(e.what());
  }
  const json& arr = doc.is_object() ? doc.at("rows") : doc;
  if (!arr.is_array()) throw ReportParseError("JSON report is not an array of rows");
  std::vector<BenchRow> rows;
  try {
    for (const auto& j : arr) {
      BenchRow r;
      r.matrix = j.at("matrix").get<std::string>();
      r.method = j.at("method").get<std::string>();
      r.precision = j.at("precision").get<std::string>();
      r.precond = j.at("precond").get<std::string>();
      r.spmv_mode = j.at("spmv_mode").get<std::string>();
      r.iterations = j.at("iterations").get<long long>();
      r.converged = j.at("converged").get<bool>();
      r.total_s = number_from(j.at("total_s"));
      r.ms_per_iter = number_from(j.at("ms_per_iter"));
      r.true_relres = number_from(j.at("true_relres"));
      r.err2 = number_from(j.at("err2"));
      rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ReportParseError(e.what());
  }
  return rows;
}

}  // namespace

std::vector<RatioRow> compute_ratios(const std::vector<BenchRow>& rows) {
  std::vector<RatioRow> out;
  std::map<std::tuple<std::string, std::string, std::string>, bool> seen;
  for (const auto& r : rows) {
    if (!seen.emplace(std::tuple{r.matrix, r.method, r.precision}, true).second) continue;
    RatioRow q;
    q.matrix = r.matrix;
    q.method = r.method;
    q.precision = r.precision;
    const auto* plain = find_row(rows, q, PrecondMode::none, SpmvMode::full);
    const auto* ilu = find_row(rows, q, PrecondMode::ilu0_full, SpmvMode::full);
    const auto* plain_d = find_row(rows, q, PrecondMode::none, SpmvMode::mixed);
    const auto* ilu_d = find_row(rows, q, PrecondMode::ilu0_mixed, SpmvMode::mixed);
    q.ilu0_over_plain = ratio(ilu, plain);
    q.ilu0d_over_plaind = ratio(ilu_d, plain_d);
    q.ilu0_over_ilu0d = ratio(ilu, ilu_d);
    out.push_back(std::move(q));
  }
  return out;
}

void emit_report(const std::vector<BenchRow>& rows, ReportFormat format, std::ostream& out,
                 bool with_ratios) {
  if (format == ReportFormat::csv) {
    emit_csv(rows, out, with_ratios);
  } else {
    emit_json(rows, out, with_ratios);
  }
  out.flush();
  if (!out) throw std::runtime_error("failed to write report");
}

std::vector<BenchRow> parse_report(std::string_view text, ReportFormat format) {
  return format == ReportFormat::csv ? parse_csv(text) : parse_json(text);
}

}  // namespace mpk::bench
