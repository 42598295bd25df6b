#include <gtest/gtest.h>

#include "gradec/session.hpp"
#include "gradec/simples.hpp"
#include "gradec/specialize.hpp"
#include "support.hpp"

using namespace gradec;
using namespace gradec::testing;

namespace {

// Every algebra over a field that the fixtures reach: exterior and rotation
// directly, the rest through their specializations.
std::vector<std::pair<std::string, AlgebraPtr>> field_algebras() {
  std::vector<std::pair<std::string, AlgebraPtr>> out;
  for (const auto& name : fixture_names()) {
    Session s = load_fixture(name);
    if (s.ring->is_field()) out.emplace_back(name, s.algebra);
    for (const auto& theta : s.specializations) out.emplace_back(name + "@" + theta.name, s.specialized_algebra(theta.name));
  }
  return out;
}

Matrix columns_of(const Ring& r, std::size_t n, const std::vector<std::vector<Scalar>>& vecs) {
  return Matrix::from_columns(r, n, vecs);
}

bool in_span(const Matrix& basis_cols, const std::vector<Scalar>& v) {
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t j = 0; j < basis_cols.cols(); ++j) cols.push_back(basis_cols.col(j));
  cols.push_back(v);
  return rank(columns_of(basis_cols.ring(), basis_cols.rows(), cols)) == basis_cols.cols();
}

std::vector<Scalar> unit_vector(const Ring& r, std::size_t n, std::size_t i) {
  std::vector<Scalar> v(n, Scalar::zero(r));
  v[i] = Scalar::one(r);
  return v;
}

void expect_radical_contract(const std::string& label, const GradedAlgebra& alg) {
  auto j = radical(alg);
  const std::size_t n = alg.dim();
  const Ring& r = alg.ring;
  Matrix jcols = j.empty() ? Matrix(r, n, 0) : columns_of(r, n, j);
  // (a) two-sided ideal
  for (const auto& x : j)
    for (std::size_t b = 0; b < n; ++b) {
      EXPECT_TRUE(in_span(jcols, alg.multiply(unit_vector(r, n, b), x))) << label;
      EXPECT_TRUE(in_span(jcols, alg.multiply(x, unit_vector(r, n, b)))) << label;
    }
  // (b) nilpotent: J^(dim J + 1) = 0
  std::vector<std::vector<Scalar>> power = j;
  for (std::size_t k = 0; k < j.size() && !power.empty(); ++k) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& x : j)
      for (const auto& y : power) next.push_back(alg.multiply(x, y));
    Matrix cb = next.empty() ? Matrix(r, n, 0) : column_basis(columns_of(r, n, next));
    power.clear();
    for (std::size_t c = 0; c < cb.cols(); ++c) power.push_back(cb.col(c));
  }
  EXPECT_TRUE(power.empty()) << label << ": radical is not nilpotent";
  // (c) the quotient is semisimple: its regular representation has zero radical
  ModuleRep reg = forget_grading(regular_module(std::make_shared<GradedAlgebra>(alg)));
  ModuleRep quo = j.empty() ? reg : quotient(reg, jcols);
  if (quo.dim() == 0) return;
  RowEchelon e = rref(stack_flat(quo.action));
  std::vector<Matrix> basis;
  for (std::size_t row = 0; row < e.pivots.size(); ++row)
    basis.push_back(unflatten(e.reduced.row(row), quo.dim(), quo.dim()));
  EXPECT_TRUE(matrix_algebra_radical(basis).empty()) << label;
}

AlgebraPtr specialized(const std::string& fixture, const std::string& spec) {
  return load_fixture(fixture).specialized_algebra(spec);
}

}  // namespace

TEST(Radical, ExteriorAlgebra) {
  Session s = load_fixture("exterior");
  auto j = radical(*s.algebra);
  ASSERT_EQ(j.size(), 3u);
  // the span is x, y, xy: every element has zero unit coordinate
  for (const auto& v : j) EXPECT_TRUE(v[s.algebra->unit].is_zero());
  EXPECT_EQ(rank(columns_of(rationals(), 4, j)), 3u);
}

TEST(Radical, SemisimpleHecke) { EXPECT_TRUE(radical(*specialized("hecke_s2", "v1q")).empty()); }

TEST(Radical, TruncatedPolynomialsInCharacteristicTwo) {
  // v = 1 over GF(2): T^2 = 1, so (T + 1)^2 = 0
  AlgebraPtr alg = specialized("hecke_s2", "v1f2");
  auto j = radical(*alg);
  ASSERT_EQ(j.size(), 1u);
  Ring f2 = prime_field(2);
  EXPECT_EQ(j[0], (std::vector<Scalar>{Scalar::one(f2), Scalar::one(f2)}));
}

TEST(Radical, ContractOnEveryFixtureAlgebra) {
  for (const auto& [label, alg] : field_algebras()) expect_radical_contract(label, *alg);
}

TEST(Radical, NeedsAComputableField) {
  Session s = load_fixture("fermion");
  EXPECT_EQ(error_of([&] { radical(*s.algebra); }), ErrorKind::UnsupportedField);
}

TEST(Simples, WedderburnCount) {
  for (const auto& [label, alg] : field_algebras()) {
    if (!check_split(alg)) continue;
    SimpleSet set = compute_simples(alg);
    std::size_t squares = 0;
    for (const auto& m : set.simples) {
      squares += m.dim() * m.dim();
      EXPECT_EQ(endomorphism_dimension(m), 1u) << label;
      EXPECT_TRUE(validate_module(m).ok()) << label;
      EXPECT_EQ(*std::min_element(m.degrees.begin(), m.degrees.end()), 0) << label;
    }
    EXPECT_EQ(alg->dim(), radical(*alg).size() + squares) << label;
    for (std::size_t i = 0; i + 1 < set.size(); ++i) EXPECT_LE(set.simples[i].dim(), set.simples[i + 1].dim());
  }
}

TEST(CompositionFactors, Examples) {
  Session f = load_fixture("fermion");
  AlgebraPtr lh = f.specialized_algebra("a0");
  SimpleSet set = compute_simples(lh);
  ASSERT_EQ(set.size(), 1u);
  GradedModuleRep red = modular_reduce(f.module("V"), f.specialization("a0"), lh);
  EXPECT_EQ(composition_factors(red, set), (std::vector<std::size_t>{2}));

  AlgebraPtr hq = specialized("hecke_s2", "v1q");
  SimpleSet hset = compute_simples(hq);
  EXPECT_EQ(composition_factors(forget_grading(regular_module(hq)), hset), (std::vector<std::size_t>{1, 1}));
  for (std::size_t i = 0; i < hset.size(); ++i) {
    auto counts = composition_factors(hset.simples[i], hset);
    for (std::size_t k = 0; k < counts.size(); ++k) EXPECT_EQ(counts[k], i == k ? 1u : 0u);
  }
}

TEST(CompositionFactors, InvariantUnderConjugation) {
  std::mt19937_64 rng(2024);
  for (const auto& [label, alg] : field_algebras()) {
    if (!check_split(alg)) continue;
    SimpleSet set = compute_simples(alg);
    ModuleRep reg = forget_grading(regular_module(alg));
    auto expected = composition_factors(reg, set);
    for (int trial = 0; trial < 3; ++trial) {
      Matrix p = random_invertible(alg->ring, reg.dim(), rng);
      EXPECT_EQ(composition_factors(change_basis(reg, p), set), expected) << label;
    }
  }
}

TEST(CompositionFactors, DimensionBound) {
  AlgebraPtr alg = specialized("hecke_s3_e3", "zeta3");
  SimpleSet set = compute_simples(alg);
  SimplesOptions small;
  small.max_dim = 3;
  EXPECT_EQ(error_of([&] { composition_factors(forget_grading(regular_module(alg)), set, small); }),
            ErrorKind::DimensionBound);
}

TEST(CheckSplit, Examples) {
  EXPECT_TRUE(check_split(specialized("hecke_s2", "v1q")));
  EXPECT_TRUE(check_split(load_fixture("exterior").algebra));
  Session rot = load_fixture("nonsplit_rotation");
  EXPECT_FALSE(check_split(rot.algebra));
  EXPECT_EQ(endomorphism_dimension(rot.module("rot")), 2u);
  EXPECT_EQ(error_of([&] { compute_simples(rot.algebra); }), ErrorKind::NotSplit);
}

TEST(GradeSimple, TrivialModule) {
  Session s = load_fixture("exterior");
  GradedModuleRep g = grade_simple(forget_grading(s.module("triv")));
  EXPECT_EQ(g.degrees, (std::vector<int>{0}));
}

TEST(GradeSimple, RecoversFermionGradingFromScrambledBasis) {
  AlgebraPtr alg = fermion_algebra(rationals(), "1");
  GradedModuleRep v = fermion_module(alg, rationals(), "1");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    ModuleRep scrambled = change_basis(forget_grading(v), random_invertible(rationals(), 2, rng));
    GradedModuleRep g = grade_simple(scrambled);
    EXPECT_EQ(g.degrees, (std::vector<int>{0, 1}));
    EXPECT_TRUE(validate_module(g).ok());
    EXPECT_EQ(grade_simple(forget_grading(g)).degrees, g.degrees);
    GradedCharacter chi = graded_character(g);
    auto plain = ungraded_character(scrambled);
    for (std::size_t b = 0; b < plain.size(); ++b) EXPECT_EQ(chi.values[b].at_one(), plain[b]);
  }
}

TEST(GradedMultiplicities, Examples) {
  Session f = load_fixture("fermion");
  AlgebraPtr lh = f.specialized_algebra("a0");
  SimpleSet set = compute_simples(lh);
  GradedModuleRep red = modular_reduce(f.module("V"), f.specialization("a0"), lh);
  EXPECT_EQ(graded_multiplicities(red, set), (GradedClass{qpoly({{0, 1}, {1, 1}})}));
  const GradedModuleRep& t = set.simples[0];
  for (int j : {-2, 0, 3}) EXPECT_EQ(graded_multiplicities(shift(t, j), set), (GradedClass{qpoly({{j, 1}})}));
  EXPECT_EQ(graded_multiplicities(direct_sum(t, shift(t, 2)), set), (GradedClass{qpoly({{0, 1}, {2, 1}})}));
}

TEST(GradedMultiplicities, AgreeWithCompositionFactorsAtOne) {
  for (const auto& name : fixture_names()) {
    Session s = load_fixture(name);
    for (const auto& theta : s.specializations) {
      AlgebraPtr lh = s.specialized_algebra(theta.name);
      SimpleSet set = compute_simples(lh);
      for (const auto& m : s.generic_modules()) {
        GradedModuleRep red = modular_reduce(clear_denominators(m, theta).first, theta, lh);
        GradedClass c = graded_multiplicities(red, set);
        auto counts = composition_factors(red, set);
        for (std::size_t i = 0; i < set.size(); ++i)
          EXPECT_EQ(c[i].at_one(), Scalar::from_int(integers(), static_cast<long>(counts[i])))
              << name << " " << theta.name << " " << m.name;
      }
    }
  }
}
