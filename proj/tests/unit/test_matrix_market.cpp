// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "mpk/sparse/matrix_market.hpp"

using namespace mpk;

namespace {

CooMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_market(in);
}

std::size_t error_line(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const MatrixMarketError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(MatrixMarket, SingleEntry) {
  const auto m = parse("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 3.5\n");
  EXPECT_EQ(m.n_rows, 1);
  EXPECT_EQ(m.n_cols, 1);
  EXPECT_EQ(m.field, Field::real);
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].row, 0);
  EXPECT_EQ(m.entries[0].col, 0);
  EXPECT_EQ(m.entries[0].re, 3.5);
}

TEST(MatrixMarket, SymmetricStoredOnce) {
  const auto m = parse(
      "%%MatrixMarket matrix coordinate real symmetric\n% comment\n2 2 2\n1 1 2\n2 1 -1\n");
  EXPECT_EQ(m.symmetry, Symmetry::symmetric);
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[1].row, 1);
  EXPECT_EQ(m.entries[1].col, 0);
}

TEST(MatrixMarket, ComplexAndPattern) {
  const auto c = parse("%%MatrixMarket matrix coordinate complex hermitian\n2 2 1\n2 1 1.5 -2\n");
  EXPECT_EQ(c.field, Field::complex);
  EXPECT_EQ(c.entries[0].im, -2.0);
  const auto p = parse("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n");
  EXPECT_EQ(p.entries[0].re, 1.0);
}

TEST(MatrixMarket, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("%%MatrixMarket matrix array real general\n1 1\n1\n"), 1u);
  EXPECT_EQ(error_line("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n"), 3u);
  EXPECT_EQ(error_line("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n"), 3u);
  EXPECT_NE(error_line("not a header\n"), 0u);
  EXPECT_NE(error_line("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 abc\n"), 0u);
}

TEST(MatrixMarket, WriteReadRoundTrip) {
  CooMatrix m;
  m.n_rows = m.n_cols = 3;
  m.field = Field::complex;
  m.entries = {{0, 0, 0.1, -1e-300}, {2, 1, 1.0 / 3.0, 2.5}, {1, 2, -7.0, 0.0}};
  std::stringstream s;
  write_matrix_market(s, m);
  const auto back = read_matrix_market(s);
  ASSERT_EQ(back.entries.size(), m.entries.size());
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    EXPECT_EQ(back.entries[i].row, m.entries[i].row);
    EXPECT_EQ(back.entries[i].col, m.entries[i].col);
    EXPECT_EQ(back.entries[i].re, m.entries[i].re);
    EXPECT_EQ(back.entries[i].im, m.entries[i].im);
  }
}
