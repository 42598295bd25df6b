#include <gtest/gtest.h>

#include <random>

#include "gradec/cyclotomic.hpp"
#include "gradec/hom.hpp"
#include "support.hpp"

using namespace gradec;
using namespace gradec::testing;

namespace {

Scalar random_element(const Ring& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  switch (r->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals: {
      if (r->kind() == RingKind::Integers) return Scalar::from_int(r, coeff(rng));
      int den = 0;
      while (den == 0) den = coeff(rng);
      return Scalar::from_rational(r, mpq_class(coeff(rng), den));
    }
    case RingKind::PrimeField:
      return Scalar::residue(r, std::uniform_int_distribution<int>(0, static_cast<int>(r->prime()) - 1)(rng));
    case RingKind::Cyclotomic: {
      std::vector<mpq_class> c;
      for (unsigned i = 0; i < r->degree(); ++i) c.emplace_back(coeff(rng), 1 + std::abs(coeff(rng)));
      return Scalar::cyclotomic(r, c);
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      Scalar acc = Scalar::zero(r);
      int low = r->kind() == RingKind::Laurent ? -2 : 0;
      for (int k = 0; k < 3; ++k) {
        Scalar term = random_element(r->base(), rng);
        Scalar t = coerce(term, r);
        for (const auto& v : r->vars()) t *= pow(Scalar::variable(r, v), std::uniform_int_distribution<int>(low, 2)(rng));
        acc += t;
      }
      return acc;
    }
    case RingKind::Fraction: {
      const Ring& nr = r->numerator_ring();
      Scalar den = Scalar::zero(nr);
      while (den.is_zero()) den = random_element(nr, rng);
      return divide(coerce(random_element(nr, rng), r), coerce(den, r));
    }
  }
  return Scalar();
}

std::vector<Ring> sample_rings() {
  return {integers(),
          rationals(),
          prime_field(7),
          cyclotomic_field(3),
          cyclotomic_field(12),
          parse_ring("ZZ[a]"),
          parse_ring("QQ[v^+-1]"),
          parse_ring("ZZ[a,b]"),
          parse_ring("Frac(QQ[v])")};
}

// x^e - 1, constant term first.
UPoly x_power_minus_one(unsigned e) {
  std::vector<Scalar> c(e + 1, Scalar::zero(rationals()));
  c[0] = Scalar::from_int(rationals(), -1);
  c[e] = Scalar::one(rationals());
  return UPoly(rationals(), c);
}

UPoly as_upoly(const std::vector<mpz_class>& c) {
  std::vector<Scalar> s;
  for (const auto& x : c) s.push_back(Scalar::from_integer(rationals(), x));
  return UPoly(rationals(), s);
}

// Leibniz expansion, independent of the elimination routines.
Scalar leibniz_det(const Matrix& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Scalar total = Scalar::zero(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar prod = Scalar::one(m.ring());
    for (std::size_t i = 0; i < n; ++i) prod *= m(i, perm[i]);
    total += inversions % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(ParseScalar, LaurentCoefficients) {
  Ring r = parse_ring("QQ[v^+-1]");
  Scalar x = sc(r, "v^2 - 1");
  ASSERT_EQ(x.terms().size(), 2u);
  EXPECT_EQ(x.terms()[0].mono, Monomial{0});
  EXPECT_EQ(x.terms()[0].coeff, Scalar::from_int(rationals(), -1));
  EXPECT_EQ(x.terms()[1].mono, Monomial{2});
  EXPECT_EQ(x.terms()[1].coeff, Scalar::one(rationals()));
}

TEST(ParseScalar, ZeroIsCanonical) {
  for (const auto& r : sample_rings()) {
    EXPECT_TRUE(sc(r, "0").is_zero()) << r->to_string();
    EXPECT_EQ(sc(r, "0"), Scalar::zero(r));
    EXPECT_EQ(sc(r, "3 - 3"), Scalar::zero(r));
  }
}

TEST(ParseScalar, ReducedFractionMultipliesBack) {
  Ring k = parse_ring("Frac(QQ[v])");
  Scalar x = sc(k, "(v-1)/(v+1)");
  Scalar back = x * sc(k, "v+1");
  EXPECT_EQ(back, sc(k, "v-1"));
  Ring num = k->numerator_ring();
  EXPECT_EQ(x.numerator(), sc(num, "v-1"));
  EXPECT_EQ(x.denominator(), sc(num, "v+1"));
  // common factors cancel
  EXPECT_EQ(sc(k, "(v^2-1)/(2v+2)"), sc(k, "(v-1)/2"));
}

TEST(ParseScalar, Errors) {
  EXPECT_EQ(error_of([] { sc(rationals(), "1 +"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(error_of([] { sc(rationals(), "(1"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(error_of([] { sc(parse_ring("ZZ[a]"), "b"); }), ErrorKind::UndeclaredVariable);
  EXPECT_EQ(error_of([] { sc(integers(), "1/2"); }), ErrorKind::InexactDivision);
  EXPECT_EQ(error_of([] { sc(parse_ring("ZZ[a]"), "a/(a+1)"); }), ErrorKind::InexactDivision);
  EXPECT_EQ(error_of([] { sc(rationals(), "1/0"); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(error_of([] { parse_scalar("a/2", parse_ring("QQ[a]"), ParseOptions{false}); }), ErrorKind::SyntaxError);
}

TEST(ParseScalar, ExactDivisionInPolynomialRing) {
  Ring r = parse_ring("ZZ[a]");
  EXPECT_EQ(sc(r, "(a^2-1)/(a-1)"), sc(r, "a+1"));
  EXPECT_EQ(sc(r, "2a(a+1)"), sc(r, "2a^2 + 2a"));
  EXPECT_EQ(sc(parse_ring("QQ[v^+-1]"), "v^-2 * v^3"), sc(parse_ring("QQ[v^+-1]"), "v"));
}

TEST(ParseScalar, RoundTripOverSampleRings) {
  std::mt19937_64 rng(11);
  for (const auto& r : sample_rings()) {
    for (int i = 0; i < 40; ++i) {
      Scalar x = random_element(r, rng);
      EXPECT_EQ(sc(r, to_string(x)), x) << r->to_string() << ": " << to_string(x);
    }
  }
}

TEST(ParseRing, RoundTrip) {
  for (const auto& r : sample_rings()) EXPECT_TRUE(same_ring(parse_ring(r->to_string()), r)) << r->to_string();
  EXPECT_EQ(parse_ring("QQ(zeta_3:w)")->generator(), "w");
  EXPECT_EQ(error_of([] { parse_ring("GF(4)"); }), ErrorKind::UnsupportedRing);
  EXPECT_EQ(error_of([] { parse_ring("RR"); }), ErrorKind::SyntaxError);
}

TEST(Cyclotomic, DefinitionalCases) {
  EXPECT_EQ(cyclotomic_poly(1), (std::vector<mpz_class>{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(4), (std::vector<mpz_class>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(6), (std::vector<mpz_class>{1, -1, 1}));
}

TEST(Cyclotomic, QuotientOracle) {
  // Phi_4 = (x^4 - 1) / (Phi_1 Phi_2), Phi_6 = (x^6 - 1) / (Phi_1 Phi_2 Phi_3)
  UPoly phi1 = upoly(rationals(), {"-1", "1"});
  UPoly phi2 = upoly(rationals(), {"1", "1"});
  UPoly phi3 = upoly(rationals(), {"1", "1", "1"});
  auto [q4, r4] = divmod(x_power_minus_one(4), phi1 * phi2);
  EXPECT_TRUE(r4.is_zero());
  EXPECT_EQ(as_upoly(cyclotomic_poly(4)), q4);
  auto [q6, r6] = divmod(x_power_minus_one(6), phi1 * phi2 * phi3);
  EXPECT_TRUE(r6.is_zero());
  EXPECT_EQ(as_upoly(cyclotomic_poly(6)), q6);
}

TEST(Cyclotomic, ProductOverDivisors) {
  for (unsigned e = 1; e <= 36; ++e) {
    UPoly prod = upoly(rationals(), {"1"});
    for (unsigned d = 1; d <= e; ++d)
      if (e % d == 0) prod = prod * as_upoly(cyclotomic_poly(d));
    EXPECT_EQ(prod, x_power_minus_one(e)) << e;
    auto [quo, rem] = divmod(x_power_minus_one(e), as_upoly(cyclotomic_poly(e)));
    EXPECT_TRUE(rem.is_zero());
    EXPECT_EQ(as_upoly(cyclotomic_poly(e)).degree(), static_cast<int>(euler_phi(e)));
  }
}

TEST(Cyclotomic, FieldArithmetic) {
  Ring f = cyclotomic_field(3);
  Scalar z = Scalar::variable(f, "z");
  EXPECT_EQ(pow(z, 3), Scalar::one(f));
  EXPECT_TRUE((z * z + z + Scalar::one(f)).is_zero());
  EXPECT_EQ(inverse(z), z * z);
  Scalar w = sc(f, "2 - 3z");
  EXPECT_EQ(w * inverse(w), Scalar::one(f));
  Ring f12 = cyclotomic_field(12);
  EXPECT_EQ(pow(Scalar::variable(f12, "z"), 12), Scalar::one(f12));
  EXPECT_NE(pow(Scalar::variable(f12, "z"), 6), Scalar::one(f12));
}

TEST(PrimeField, Arithmetic) {
  Ring f = prime_field(7);
  EXPECT_EQ(inverse(Scalar::residue(f, 3)), Scalar::residue(f, 5));
  EXPECT_EQ(sc(f, "1/2"), Scalar::residue(f, 4));
  EXPECT_EQ(sc(f, "-1"), Scalar::residue(f, 6));
  EXPECT_EQ(error_of([&] { inverse(Scalar::zero(f)); }), ErrorKind::DivisionByZero);
}

TEST(HomApply, Examples) {
  Ring lv = parse_ring("ZZ[v^+-1]");
  RingHom v1{lv, rationals(), {{"v", Scalar::one(rationals())}}};
  EXPECT_TRUE(hom_apply(v1, sc(lv, "v^2 - 1")).is_zero());
  Ring za = parse_ring("ZZ[a]");
  RingHom a0{za, rationals(), {{"a", Scalar::zero(rationals())}}};
  EXPECT_EQ(hom_apply(a0, sc(za, "3a + 2")), Scalar::from_int(rationals(), 2));
  Scalar bad = sc(fraction_field(lv), "1/(v-1)");
  EXPECT_EQ(error_of([&] { hom_apply(v1, bad); }), ErrorKind::NonInvertibleDenominator);
  EXPECT_FALSE(in_localization(v1, bad));
  EXPECT_TRUE(in_localization(v1, sc(fraction_field(lv), "(v^2-1)/(v-1)")));
}

TEST(HomApply, IsARingMorphism) {
  std::mt19937_64 rng(5);
  Ring lv = parse_ring("QQ[v^+-1]");
  Ring za = parse_ring("ZZ[a,b]");
  Ring f3 = cyclotomic_field(3);
  std::vector<RingHom> homs = {
      {lv, rationals(), {{"v", Scalar::from_int(rationals(), -2)}}},
      {lv, f3, {{"v", Scalar::variable(f3, "z")}}},
      {za, prime_field(5), {{"a", Scalar::residue(prime_field(5), 2)}, {"b", Scalar::residue(prime_field(5), 4)}}},
      {za, rationals(), {{"a", Scalar::from_int(rationals(), 3)}, {"b", Scalar::zero(rationals())}}},
  };
  for (const auto& h : homs) {
    EXPECT_EQ(hom_apply(h, Scalar::one(h.source)), Scalar::one(h.target));
    for (int i = 0; i < 30; ++i) {
      Scalar x = random_element(h.source, rng), y = random_element(h.source, rng);
      EXPECT_EQ(hom_apply(h, x + y), hom_apply(h, x) + hom_apply(h, y));
      EXPECT_EQ(hom_apply(h, x * y), hom_apply(h, x) * hom_apply(h, y));
    }
  }
}

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly(Matrix(rationals(), 2, 2)), upoly(rationals(), {"0", "0", "1"}));
  // (X - 1)^3
  EXPECT_EQ(charpoly(Matrix::identity(rationals(), 3)), upoly(rationals(), {"-1", "3", "-3", "1"}));
  Ring k = parse_ring("Frac(QQ[a])");
  EXPECT_EQ(charpoly(mat(k, {{"0", "a"}, {"0", "0"}})), upoly(k, {"0", "0", "1"}));
  EXPECT_EQ(error_of([] { charpoly(Matrix(rationals(), 2, 3)); }), ErrorKind::NonSquare);
}

TEST(Charpoly, ConstantAndTraceCoefficients) {
  std::mt19937_64 rng(17);
  for (const Ring& r : {rationals(), prime_field(11), cyclotomic_field(5)}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      Matrix m = random_matrix(r, n, rng);
      UPoly c = charpoly(m);
      ASSERT_EQ(c.degree(), static_cast<int>(n));
      EXPECT_TRUE(c.leading().is_one());
      Scalar det = leibniz_det(m);
      EXPECT_EQ(c.coeff(0), n % 2 ? -det : det);
      EXPECT_EQ(c.coeff(static_cast<int>(n) - 1), -m.trace());
      EXPECT_TRUE(eval_poly(c, m).is_zero());  // Cayley-Hamilton
    }
  }
}
