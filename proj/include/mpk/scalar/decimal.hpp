// SPDX-License-Identifier: Apache-2.0
//
// Decimal text conversion for multi-component values.

#pragma once

#include <cmath>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mpk/scalar/complex.hpp"

namespace mpk {

class DecimalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Significant digits that make format -> parse stable for a K-component
/// value: ceil(0.302 * 53K) + 2.
[[nodiscard]] constexpr int round_trip_digits(int k) noexcept {
  const int bits = 53 * k;
  return (bits * 302 + 999) / 1000 + 2;
}

namespace detail {
std::string format_components(std::span<const double> c, int digits);
void parse_components(std::string_view text, std::span<double> out);
}  // namespace detail

/// Scientific notation with the given number of significant digits
/// (default: the round-trip count for the format).
template <int K>
[[nodiscard]] std::string to_string(const MCFloat<K>& x, int digits = round_trip_digits(K)) {
  return detail::format_components(x.components(), digits);
}

template <int K>
[[nodiscard]] std::string to_string(const MCComplex<K>& z, int digits = round_trip_digits(K)) {
  std::string s = to_string(z.re, digits);
  const std::string im = to_string(z.im, digits);
  s += (im.front() == '-') ? " - " : " + ";
  s += (im.front() == '-') ? im.substr(1) : im;
  s += "i";
  return s;
}

/// Parses a decimal literal (optionally signed, with exponent, or
/// inf/nan) to the nearest K-component value.
template <int K>
[[nodiscard]] MCFloat<K> parse_mcfloat(std::string_view text) {
  std::array<double, K> c{};
  detail::parse_components(text, c);
  return MCFloat<K>::from_components(c);
}

template <int K>
std::ostream& operator<<(std::ostream& os, const MCFloat<K>& x) {
  return os << to_string(x);
}

template <int K>
std::ostream& operator<<(std::ostream& os, const MCComplex<K>& z) {
  return os << to_string(z);
}

}  // namespace mpk
