// SPDX-License-Identifier: Apache-2.0

#include "mpk/scalar/decimal.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <climits>
#include <memory>
#include <string>

namespace mpk::detail {
namespace {

// Components of a renormalized value can be separated by gaps, so the exact
// sum may need more than 53*K bits. The span of exponents bounds it.
mpfr_prec_t exact_precision(std::span<const double> c) {
  int hi = INT_MIN;
  int lo = INT_MAX;
  for (double v : c) {
    if (v == 0.0) continue;
    const int e = std::ilogb(v);
    hi = std::max(hi, e);
    lo = std::min(lo, e);
  }
  if (hi == INT_MIN) return 64;
  return static_cast<mpfr_prec_t>(hi - lo) + 64 + 53;
}

struct Mpfr {
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_t v;
};

}  // namespace

std::string format_components(std::span<const double> c, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  if (!std::isfinite(c[0])) {
    if (std::isnan(c[0])) return "nan";
    return c[0] < 0 ? "-inf" : "inf";
  }
  Mpfr sum(exact_precision(c));
  mpfr_set_zero(sum.v, std::signbit(c[0]) ? -1 : 1);
  for (double v : c) mpfr_add_d(sum.v, sum.v, v, MPFR_RNDN);  // exact at this precision
  if (mpfr_zero_p(sum.v)) return std::signbit(c[0]) ? "-0" : "0";

  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), sum.v, MPFR_RNDN),
      mpfr_free_str);
  std::string mant(raw.get());
  std::string out;
  if (mant.front() == '-') {
    out.push_back('-');
    mant.erase(0, 1);
  }
  out.push_back(mant[0]);
  if (mant.size() > 1) {
    out.push_back('.');
    out.append(mant, 1, std::string::npos);
  }
  out += "e";
  out += std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

void parse_components(std::string_view text, std::span<double> out) {
  std::string s(text);
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), [](unsigned char ch) { return !std::isspace(ch); }));
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw DecimalParseError("empty decimal literal");

  const auto k = static_cast<mpfr_prec_t>(out.size());
  Mpfr value(53 * k + 64);
  char* end = nullptr;
  mpfr_strtofr(value.v, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    throw DecimalParseError("not a decimal literal: '" + s + "'");
  }
  std::fill(out.begin(), out.end(), 0.0);
  if (!mpfr_number_p(value.v)) {
    out[0] = mpfr_get_d(value.v, MPFR_RNDN);
    return;
  }
  // Peel off nearest binary64 values; each subtraction is exact because the
  // peeled value agrees with the remainder in its leading bits.
  for (auto& comp : out) {
    comp = mpfr_get_d(value.v, MPFR_RNDN);
    mpfr_sub_d(value.v, value.v, comp, MPFR_RNDN);
  }
}

}  // namespace mpk::detail
