#include "bcc/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bcc::linalg;

namespace {

Matrix<RationalField> rational_matrix(const std::vector<std::vector<int>>& rows) {
  RationalField f;
  Matrix<RationalField> m(f, static_cast<int>(rows.size()),
                          rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace

TEST(Rank, Basics) {
  EXPECT_EQ(rank(rational_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3);
  EXPECT_EQ(rank(rational_matrix({{0, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0, 0}})),
            0);
  EXPECT_EQ(rank(rational_matrix({{1, 2}, {2, 4}})), 1);
}

TEST(Kernel, Basics) {
  EXPECT_TRUE(kernel_basis(rational_matrix({{1, 0}, {0, 1}})).empty());
  EXPECT_EQ(kernel_basis(rational_matrix({{0, 0, 0}, {0, 0, 0}})).size(), 3u);

  auto basis = kernel_basis(rational_matrix({{1, 1, 0}}));
  ASSERT_EQ(basis.size(), 2u);
  for (const auto& v : basis) {
    EXPECT_EQ(v[0] + v[1], 0);  // exact annihilation of the single row
  }
  RationalField f;
  EXPECT_TRUE(independent(f, basis));
}

TEST(Independent, Basics) {
  RationalField f;
  EXPECT_TRUE(independent(f, {{mpq_class(1), mpq_class(0)}, {mpq_class(0), mpq_class(1)}}));
  EXPECT_FALSE(independent(f, {{mpq_class(1), mpq_class(1)}, {mpq_class(2), mpq_class(2)}}));
  EXPECT_THROW(independent(f, {{mpq_class(1)}, {mpq_class(1), mpq_class(0)}}),
               std::invalid_argument);
  EXPECT_TRUE(independent(f, {}));
}

TEST(RankNullity, RandomSmallMatrices) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = 1 + static_cast<int>(rng() % 7);
    RationalField f;
    Matrix<RationalField> m(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        m.at(r, c) = static_cast<int>(rng() % 3) - 1;  // entries in {-1,0,1}
      }
    }
    Matrix<RationalField> copy = m;
    const int rk = rank(std::move(copy));
    auto kernel = kernel_basis(m);
    EXPECT_EQ(rk + static_cast<int>(kernel.size()), cols);

    // Kernel vectors must be annihilated exactly.
    for (const auto& v : kernel) {
      for (int r = 0; r < rows; ++r) {
        mpq_class acc = 0;
        for (int c = 0; c < cols; ++c) acc += m.at(r, c) * v[c];
        EXPECT_EQ(acc, 0);
      }
    }
  }
}

// Entries in {-1,0,1} keep every minor below 8^4, so any prime beyond that
// bound preserves the rational rank.
TEST(PrimeVsRational, RankAgreesForLargePrime) {
  std::mt19937_64 rng(77);
  PrimeField zp(9973);
  RationalField f;
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 8);
    const int cols = 1 + static_cast<int>(rng() % 8);
    Matrix<RationalField> mq(f, rows, cols);
    Matrix<PrimeField> mp(zp, rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const int e = static_cast<int>(rng() % 3) - 1;
        mq.at(r, c) = e;
        mp.at(r, c) = zp.from_int(e);
      }
    }
    EXPECT_EQ(rank(std::move(mq)), rank(std::move(mp)));
  }
}

TEST(PrimeField, Arithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_THROW(f.inv(0), std::invalid_argument);
  EXPECT_THROW(PrimeField(6), std::invalid_argument);
}

TEST(FieldSpec, Parsing) {
  EXPECT_EQ(parse_field_spec("q"), FieldSpec::rationals());
  EXPECT_EQ(parse_field_spec("Q").name(), "Q");
  FieldSpec p5 = parse_field_spec("p=5");
  EXPECT_EQ(p5.kind, FieldSpec::Kind::prime);
  EXPECT_EQ(p5.prime, 5u);
  EXPECT_EQ(p5.name(), "GF(5)");
  EXPECT_THROW(parse_field_spec("p=4"), std::invalid_argument);
  EXPECT_THROW(parse_field_spec("p=abc"), std::invalid_argument);
  EXPECT_THROW(parse_field_spec("r"), std::invalid_argument);
}

TEST(Primality, KnownValues) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(9973));
  EXPECT_FALSE(is_prime(9975));
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_TRUE(is_prime((1ULL << 61) - 1));
  EXPECT_FALSE(is_prime((1ULL << 61) - 3));
}
