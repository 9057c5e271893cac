// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace mpk {

/// Runtime tag for the multi-component precision ladder.
enum class Precision { f64, dd, td, qd };

inline constexpr std::array<Precision, 4> all_precisions{Precision::f64, Precision::dd,
                                                         Precision::td, Precision::qd};

[[nodiscard]] constexpr int components(Precision p) noexcept {
  switch (p) {
    case Precision::f64: return 1;
    case Precision::dd: return 2;
    case Precision::td: return 3;
    case Precision::qd: return 4;
  }
  return 0;
}

/// Nominal significand width: 53 bits per binary64 component.
[[nodiscard]] constexpr int mantissa_bits(Precision p) noexcept { return 53 * components(p); }

[[nodiscard]] constexpr std::optional<Precision> precision_from_components(int k) noexcept {
  switch (k) {
    case 1: return Precision::f64;
    case 2: return Precision::dd;
    case 3: return Precision::td;
    case 4: return Precision::qd;
    default: return std::nullopt;
  }
}

[[nodiscard]] constexpr std::string_view to_string(Precision p) noexcept {
  switch (p) {
    case Precision::f64: return "f64";
    case Precision::dd: return "dd";
    case Precision::td: return "td";
    case Precision::qd: return "qd";
  }
  return "?";
}

[[nodiscard]] constexpr std::optional<Precision> parse_precision(std::string_view s) noexcept {
  for (auto p : all_precisions) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

}  // namespace mpk
