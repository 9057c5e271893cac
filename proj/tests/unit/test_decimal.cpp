// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "mpk/scalar/decimal.hpp"
#include "support/oracle.hpp"

using namespace mpk;

TEST(Decimal, ParsesBeyondBinary64) {
  const auto x = parse_mcfloat<2>("0.1");
  EXPECT_EQ(x[0], 0.1);
  EXPECT_NE(x[1], 0.0);
  EXPECT_LE(mpk::test::rel_err<DD>(x, mpk::test::Big(1) / 10), std::ldexp(1.0, -105));
}

// Components may be separated by gaps, so a K > 1 value is recovered to the
// format's precision rather than bitwise.
TEST(Decimal, RoundTrip) {
  using mpk::test::to_big;
  mpk::test::Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.scaled(-1000, 1000);
    EXPECT_EQ(parse_mcfloat<1>(to_string(MCFloat<1>(x)))[0], x);
    const auto d = rng.mcfloat<2>(-300, 300);
    EXPECT_LE(mpk::test::rel_err<DD>(parse_mcfloat<2>(to_string(d)), to_big(d)), std::ldexp(1.0, -106));
    const auto q = rng.mcfloat<4>(-300, 300);
    EXPECT_LE(mpk::test::rel_err<QD>(parse_mcfloat<4>(to_string(q)), to_big(q)), std::ldexp(1.0, -212));
  }
}

TEST(Decimal, SpecialValues) {
  EXPECT_TRUE(std::isinf(parse_mcfloat<2>("-inf")[0]));
  EXPECT_TRUE(std::isnan(parse_mcfloat<3>("nan")[0]));
  EXPECT_THROW((void)parse_mcfloat<2>("1.5x"), DecimalParseError);
  EXPECT_THROW((void)parse_mcfloat<2>(""), DecimalParseError);
}

TEST(Decimal, ComplexFormat) {
  const MCComplex<1> z(MCFloat<1>(1.5), MCFloat<1>(-2.0));
  EXPECT_EQ(to_string(z, 3), "1.50e0 - 2.00e0i");
}
