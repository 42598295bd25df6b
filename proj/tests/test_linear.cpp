#include <gtest/gtest.h>

#include "support.hpp"

using namespace gradec;
using namespace gradec::testing;

namespace {

std::vector<Ring> fields() { return {rationals(), prime_field(5), cyclotomic_field(3), parse_ring("Frac(QQ[a])")}; }

}  // namespace

TEST(Linear, RrefAndRank) {
  Matrix m = mat(rationals(), {{"1", "2", "3"}, {"2", "4", "6"}, {"1", "0", "1"}});
  EXPECT_EQ(rank(m), 2u);
  RowEchelon e = rref(m);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.reduced, mat(rationals(), {{"1", "0", "1"}, {"0", "1", "1"}, {"0", "0", "0"}}));
  // 2 = 0 in GF(2) changes the rank
  EXPECT_EQ(rank(mat(prime_field(2), {{"1", "1"}, {"1", "3"}})), 1u);
}

TEST(Linear, KernelIsAnnihilatedAndComplementary) {
  std::mt19937_64 rng(3);
  for (const auto& r : fields()) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix a = random_matrix(r, 4, rng, 1);
      Matrix k = kernel(a);
      EXPECT_EQ(k.cols() + rank(a), 4u);
      if (k.cols()) EXPECT_TRUE((a * k).is_zero());
      if (k.cols()) EXPECT_EQ(rank(k), k.cols());
    }
  }
}

TEST(Linear, InverseAndSolve) {
  std::mt19937_64 rng(9);
  for (const auto& r : fields()) {
    Matrix a = random_invertible(r, 4, rng);
    EXPECT_EQ(a * inverse(a), Matrix::identity(r, 4));
    Matrix b = random_matrix(r, 4, rng);
    b = b.block(0, 0, 4, 2);
    auto x = solve(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * *x, b);
  }
  Matrix singular = mat(rationals(), {{"1", "1"}, {"1", "1"}});
  EXPECT_FALSE(solve(singular, mat(rationals(), {{"1"}, {"0"}})).has_value());
  EXPECT_EQ(error_of([&] { inverse(singular); }), ErrorKind::DivisionByZero);
}

TEST(Linear, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(21);
  for (const auto& r : fields()) {
    Matrix a = random_matrix(r, 4, rng), b = random_matrix(r, 4, rng);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(Linear, MinpolyDividesCharpoly) {
  std::mt19937_64 rng(4);
  for (const auto& r : fields()) {
    for (int trial = 0; trial < 5; ++trial) {
      Matrix a = random_matrix(r, 4, rng, 1);
      UPoly m = minpoly(a);
      EXPECT_TRUE(eval_poly(m, a).is_zero());
      EXPECT_TRUE(divmod(charpoly(a), m).second.is_zero());
    }
  }
  // diag(1, 1, 2): minpoly (X-1)(X-2)
  Matrix d = mat(rationals(), {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "2"}});
  EXPECT_EQ(minpoly(d), upoly(rationals(), {"2", "-3", "1"}));
}

TEST(Linear, ExtendToBasis) {
  Matrix cols = mat(rationals(), {{"0"}, {"1"}, {"1"}});
  Matrix b = extend_to_basis(cols);
  EXPECT_EQ(b.rows(), 3u);
  EXPECT_FALSE(determinant(b).is_zero());
  EXPECT_EQ(b.col(0), cols.col(0));
}
