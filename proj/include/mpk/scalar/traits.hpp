// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mpk/scalar/complex.hpp"

namespace mpk {

/// Uniform view over the real and complex multi-component scalars.
template <class S>
struct ScalarTraits;

template <int K>
struct ScalarTraits<MCFloat<K>> {
  using real_type = MCFloat<K>;
  template <int J>
  using rebind = MCFloat<J>;
  static constexpr bool is_complex = false;
  static constexpr int num_components = K;
  static constexpr Precision precision = MCFloat<K>::precision;
  static constexpr int mantissa_bits = 53 * K;
};

template <int K>
struct ScalarTraits<Complex<MCFloat<K>>> {
  using real_type = MCFloat<K>;
  template <int J>
  using rebind = Complex<MCFloat<J>>;
  static constexpr bool is_complex = true;
  static constexpr int num_components = K;
  static constexpr Precision precision = MCFloat<K>::precision;
  static constexpr int mantissa_bits = 53 * K;
};

template <class S>
using real_t = typename ScalarTraits<S>::real_type;

/// Same field, single binary64 component: the storage type of a matrix read
/// from a binary64 file.
template <class S>
using binary64_t = typename ScalarTraits<S>::template rebind<1>;

template <class S>
concept McScalar = requires { typename ScalarTraits<S>::real_type; };

template <int K>
[[nodiscard]] constexpr MCFloat<K> conj(const MCFloat<K>& x) noexcept {
  return x;
}

template <int K>
[[nodiscard]] inline MCFloat<K> abs2(const MCFloat<K>& x) noexcept {
  return x * x;
}

template <int K>
[[nodiscard]] constexpr MCFloat<K> real_part(const MCFloat<K>& x) noexcept {
  return x;
}
template <class R>
[[nodiscard]] constexpr R real_part(const Complex<R>& z) noexcept {
  return z.re;
}

/// Converts between precisions of the same field (exact when promoting).
template <class To, class From>
[[nodiscard]] inline To scalar_cast(const From& x) noexcept {
  static_assert(ScalarTraits<To>::is_complex == ScalarTraits<From>::is_complex,
                "scalar_cast does not change the field");
  return precision_convert<ScalarTraits<To>::num_components>(x);
}

/// Builds a scalar of kind S from binary64 parts; im must be 0 for real S.
template <class S>
[[nodiscard]] inline S make_scalar(double re, double im = 0.0) noexcept {
  if constexpr (ScalarTraits<S>::is_complex) {
    return S(real_t<S>(re), real_t<S>(im));
  } else {
    return S(re);
  }
}

}  // namespace mpk
