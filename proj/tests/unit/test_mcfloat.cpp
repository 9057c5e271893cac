// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "mpk/scalar/mcfloat.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

using namespace mpk;
using mpk::test::Big;

TEST(Renormalize, AlreadyNormal) {
  const double raw[] = {1.0, 0.0};
  const auto x = renormalize<2>(raw);
  EXPECT_EQ(x[0], 1.0);
  EXPECT_EQ(x[1], 0.0);
}

TEST(Renormalize, Reorders) {
  const double raw[] = {std::ldexp(1.0, -60), 1.0};
  const auto x = renormalize<2>(raw);
  EXPECT_EQ(x[0], 1.0);
  EXPECT_EQ(x[1], std::ldexp(1.0, -60));
}

TEST(Renormalize, CarriesIntoLeadingComponent) {
  const double raw[] = {1.0, 1.0, std::ldexp(1.0, -100)};
  const auto x = renormalize<2>(raw);
  EXPECT_EQ(x[0], 2.0);
  EXPECT_EQ(x[1], std::ldexp(1.0, -100));
}

TEST(Arithmetic, AddZero) {
  mpk::test::Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto x = rng.mcfloat<4>();
    EXPECT_EQ(x + QD(), x);
  }
}

TEST(Arithmetic, OneThirdTimesThree) {
  const auto third = mpk::test::from_big<2>(Big(1) / 3);
  const DD p = third * DD(3.0);
  EXPECT_LE(mpk::test::rel_err<DD>(p, Big(1)), std::ldexp(1.0, -100));
}

TEST(Arithmetic, TwoThirdsQD) {
  const QD q = QD(2.0) / QD(3.0);
  EXPECT_LE(mpk::test::rel_err<QD>(q, Big(2) / 3), std::ldexp(1.0, -206));
}

TEST(Arithmetic, DivisionByZeroPropagates) {
  const DD q = DD(1.0) / DD(0.0);
  EXPECT_TRUE(std::isinf(q[0]));
  EXPECT_FALSE(is_finite(q));
}

TEST(Sqrt, ExactSquares) {
  EXPECT_EQ(sqrt(QD(1.0)), QD(1.0));
  EXPECT_EQ(sqrt(QD(4.0)), QD(2.0));
  EXPECT_EQ(sqrt(DD(4.0)), DD(2.0));
}

TEST(Sqrt, TwoInDD) {
  const DD s = sqrt(DD(2.0));
  EXPECT_LE(mpk::test::rel_err<DD>(s, boost::multiprecision::sqrt(Big(2))), std::ldexp(1.0, -100));
  EXPECT_DOUBLE_EQ(s[0], 1.4142135623730951);
}

TEST(Sqrt, NegativeIsADomainError) {
  EXPECT_THROW((void)sqrt(DD(-1.0)), std::domain_error);
}

TEST(Convert, PromoteEmbedsExactly) {
  const auto q = precision_convert<4>(MCFloat<1>(7.25));
  EXPECT_EQ(q[0], 7.25);
  EXPECT_EQ(q[1], 0.0);
  EXPECT_EQ(q[2], 0.0);
  EXPECT_EQ(q[3], 0.0);
}

TEST(Convert, DemoteDropsTail) {
  const DD x = DD(1.0) + DD(std::ldexp(1.0, -60));
  EXPECT_EQ(to_double(x), 1.0);
}

TEST(Convert, RoundTripOverRandomBinary64) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<std::uint64_t> bits;
  int mismatches = 0;
  for (int i = 0; i < 1'000'000; ++i) {
    double x = std::bit_cast<double>(bits(gen));
    if (!std::isfinite(x)) continue;
    const double back2 = to_double(precision_convert<2>(MCFloat<1>(x)));
    const double back4 = to_double(precision_convert<4>(MCFloat<1>(x)));
    if (std::bit_cast<std::uint64_t>(back2) != std::bit_cast<std::uint64_t>(x) ||
        std::bit_cast<std::uint64_t>(back4) != std::bit_cast<std::uint64_t>(x)) {
      ++mismatches;
    }
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(Bounds, AllComponentCounts) {
  for (int k = 1; k <= 4; ++k) {
    const auto c = mpk::test::check_mcfloat_bounds(k, 2000, 100 + static_cast<std::uint64_t>(k));
    EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
  }
}
