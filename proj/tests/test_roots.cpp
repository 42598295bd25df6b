#include <gtest/gtest.h>

#include <algorithm>

#include "gradec/roots.hpp"
#include "support.hpp"

using namespace gradec;
using namespace gradec::testing;

namespace {

UPoly from_roots(const Ring& r, const std::vector<Scalar>& roots) {
  UPoly p = UPoly::constant(Scalar::one(r));
  for (const auto& x : roots) p = p * UPoly(r, {-x, Scalar::one(r)});
  return p;
}

void expect_same_set(std::vector<Scalar> got, std::vector<Scalar> want) {
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  EXPECT_EQ(got, want);
}

}  // namespace

TEST(Roots, Rationals) {
  Ring q = rationals();
  UPoly p = from_roots(q, {sc(q, "1"), sc(q, "2"), sc(q, "-3/2"), sc(q, "2")});
  expect_same_set(roots_in_field(p), {sc(q, "1"), sc(q, "2"), sc(q, "-3/2")});
  EXPECT_TRUE(roots_in_field(upoly(q, {"1", "0", "1"})).empty());
  EXPECT_TRUE(roots_in_field(upoly(q, {"-2", "0", "1"})).empty());
}

TEST(Roots, PrimeField) {
  Ring f = prime_field(7);
  // x^2 - 2 = (x - 3)(x - 4) mod 7
  expect_same_set(roots_in_field(upoly(f, {"-2", "0", "1"})), {sc(f, "3"), sc(f, "4")});
  EXPECT_TRUE(roots_in_field(upoly(f, {"1", "0", "1"})).empty());
}

TEST(Roots, CyclotomicRootsOfUnity) {
  Ring f4 = cyclotomic_field(4);
  Scalar i = Scalar::variable(f4, "z");
  expect_same_set(roots_in_field(upoly(f4, {"1", "0", "1"})), {i, -i});
  Ring f3 = cyclotomic_field(3);
  Scalar z = Scalar::variable(f3, "z");
  expect_same_set(roots_in_field(upoly(f3, {"1", "1", "1"})), {z, z * z});
  // x^2 - 2 has no root in Q(zeta_3)
  EXPECT_TRUE(roots_in_field(upoly(f3, {"-2", "0", "1"})).empty());
}

TEST(Roots, PlantedCyclotomicRoots) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(-3, 3);
  for (unsigned e : {3u, 5u, 8u}) {
    Ring f = cyclotomic_field(e);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Scalar> planted;
      for (int k = 0; k < 3; ++k) {
        std::vector<mpq_class> coords;
        for (unsigned j = 0; j < f->degree(); ++j) coords.emplace_back(c(rng), 1 + (c(rng) & 1));
        planted.push_back(Scalar::cyclotomic(f, coords));
      }
      // times an irreducible factor contributing no roots
      UPoly p = from_roots(f, planted) * upoly(f, {"3", "0", "0", "1"});
      std::vector<Scalar> got = roots_in_field(p);
      for (const auto& r : got) EXPECT_TRUE(p.eval(r).is_zero());
      expect_same_set(got, planted);
    }
  }
}
