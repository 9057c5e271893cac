// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "mpk/scalar/complex.hpp"
#include "support/oracle.hpp"

using namespace mpk;
using mpk::test::Big;
using mpk::test::BigComplex;

using CDD = MCComplex<2>;
using CQD = MCComplex<4>;

TEST(Complex, ISquared) {
  const CDD i(DD(0.0), DD(1.0));
  const CDD p = i * i;
  EXPECT_EQ(p.re, DD(-1.0));
  EXPECT_EQ(p.im, DD(0.0));
}

TEST(Complex, DoubleConjugateIsIdentity) {
  mpk::test::Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const auto z = rng.scalar<CQD>();
    EXPECT_EQ(conj(conj(z)), z);
  }
}

TEST(Complex, Division) {
  const CDD q = CDD(DD(2.0), DD(3.0)) / CDD(DD(1.0), DD(-1.0));
  const double tol = std::ldexp(1.0, -100);
  EXPECT_LE(mpk::test::rel_err<CDD>(q, BigComplex{Big(-0.5), Big(2.5)}), tol);
}

TEST(Complex, DivisionByZeroGivesInfinity) {
  const CDD q = CDD(DD(1.0), DD(1.0)) / CDD();
  EXPECT_FALSE(is_finite(q));
}

TEST(Complex, SqrtPrincipalBranch) {
  const CDD r = sqrt(CDD(DD(-1.0)));
  EXPECT_EQ(r.re, DD(0.0));
  EXPECT_EQ(r.im, DD(1.0));
  const CDD two = sqrt(CDD(DD(4.0)));
  EXPECT_EQ(two.re, DD(2.0));
  EXPECT_EQ(two.im, DD(0.0));
}

TEST(Complex, SqrtTwoPlusThreeI) {
  const CQD z(QD(2.0), QD(3.0));
  const CQD s = sqrt(z);
  EXPECT_NEAR(s.re[0], 1.67414922803554, 1e-14);
  EXPECT_NEAR(s.im[0], 0.895977476129838, 1e-14);
  const auto sq = mpk::test::to_big(s) * mpk::test::to_big(s);
  EXPECT_LE(static_cast<double>(mpk::test::big_abs(sq - BigComplex{Big(2), Big(3)}) / boost::multiprecision::sqrt(Big(13))),
            std::ldexp(1.0, -206));
}

TEST(Complex, AbsAvoidsOverflow) {
  const CDD z(DD(1e300), DD(1e300));
  EXPECT_TRUE(std::isfinite(abs(z)[0]));
  EXPECT_NEAR(abs(z)[0], 1e300 * std::sqrt(2.0), 1e286);
}
