#include <gtest/gtest.h>

#include "gradec/session.hpp"
#include "gradec/specialize.hpp"
#include "support.hpp"

using namespace gradec;
using namespace gradec::testing;

namespace {

Fingerprint push_forward(const Fingerprint& f, const Specialization& theta) {
  Fingerprint out{theta.target(), f.labels, {}};
  for (const auto& per : f.polys) {
    std::map<int, UPoly> m;
    for (const auto& [d, p] : per) m.emplace(d, p.map([&](const Scalar& c) { return theta.apply(c); }, theta.target()));
    out.polys.push_back(std::move(m));
  }
  return out;
}

GradedModuleRep one_dim(const Session& s, const std::string& t_entry) {
  GradedModuleRep m = s.modules[0];
  m.action[1] = mat(s.generic_field(), {{t_entry}});
  return m;
}

}  // namespace

TEST(MakeSpecialization, ValidTargets) {
  Ring zv = parse_ring("ZZ[v^+-1]");
  EXPECT_NO_THROW(make_specialization("s", zv, rationals(), {{"v", sc(rationals(), "1")}}));
  EXPECT_NO_THROW(make_specialization("s", zv, prime_field(2), {{"v", sc(prime_field(2), "1")}}));
  Ring f3 = cyclotomic_field(3);
  // z has minimal polynomial of degree 2 = [Q(zeta_3) : Q]
  EXPECT_NO_THROW(make_specialization("s", parse_ring("QQ[v^+-1]"), f3, {{"v", Scalar::variable(f3, "z")}}));
}

TEST(MakeSpecialization, Errors) {
  Ring zv = parse_ring("ZZ[v^+-1]");
  Ring f3 = cyclotomic_field(3);
  EXPECT_EQ(error_of([&] { make_specialization("s", zv, rationals(), {{"v", sc(rationals(), "0")}}); }),
            ErrorKind::NonUnitAssignment);
  EXPECT_EQ(error_of([&] { make_specialization("s", zv, f3, {{"v", sc(f3, "1")}}); }), ErrorKind::FractionFieldMismatch);
  EXPECT_EQ(error_of([&] { make_specialization("s", zv, rationals(), {}); }), ErrorKind::MissingAssignment);
  EXPECT_EQ(error_of([&] { make_specialization("s", zv, parse_ring("QQ[u]"), {{"v", sc(parse_ring("QQ[u]"), "u")}}); }),
            ErrorKind::FractionFieldMismatch);
}

TEST(ClearDenominators, IntegralModuleIsUnchanged) {
  Session s = load_fixture("fermion");
  const auto& theta = s.specialization("a0");
  auto [lattice, record] = clear_denominators(s.module("V"), theta);
  EXPECT_EQ(lattice.action, s.module("V").action);
  for (const auto& c : record.scale) EXPECT_TRUE(c.is_one());
}

TEST(ClearDenominators, PrescaledModuleRecoversLattice) {
  Session s = load_fixture("fermion");
  const auto& theta = s.specialization("a0");
  const auto& pre = s.module("V_prescaled");
  auto [lattice, record] = clear_denominators(pre, theta);
  Ring k = s.generic_field();
  EXPECT_EQ(record.scale, (std::vector<Scalar>{sc(k, "a"), sc(k, "1")}));
  // conjugation by diag(a, 1) computed by hand gives back V
  EXPECT_EQ(rescale_basis(pre, {sc(k, "a"), sc(k, "1")}).action, s.module("V").action);
  EXPECT_EQ(lattice.action, s.module("V").action);
  EXPECT_FALSE(record.steps.empty());
}

TEST(ClearDenominators, PolynomialEntriesOverRationalFunctions) {
  Session s = load_fixture("hecke_s2");
  const auto& theta = s.specialization("v1q");
  GradedModuleRep m = one_dim(s, "v^2");
  auto [lattice, record] = clear_denominators(m, theta);
  EXPECT_EQ(lattice.action, m.action);
}

TEST(ClearDenominators, FailsHonestlyWhenNoDiagonalScalingHelps) {
  Session s = load_fixture("hecke_s2");
  GradedModuleRep m = one_dim(s, "1/(v-1)");
  EXPECT_EQ(error_of([&] { clear_denominators(m, s.specialization("v1q")); }), ErrorKind::LatticeNotFound);
}

TEST(ModularReduce, Examples) {
  Session f = load_fixture("fermion");
  const auto& a0 = f.specialization("a0");
  GradedModuleRep r = modular_reduce(f.module("V"), a0, f.specialized_algebra("a0"));
  EXPECT_EQ(r.action[1], mat(rationals(), {{"0", "0"}, {"1", "0"}}));
  EXPECT_TRUE(r.action[2].is_zero());
  EXPECT_TRUE(validate_module(r).ok());

  Session h = load_fixture("hecke_s2");
  GradedModuleRep t = modular_reduce(h.module("triv"), h.specialization("v1q"), h.specialized_algebra("v1q"));
  EXPECT_EQ(t.action[1], mat(rationals(), {{"1"}}));
  Ring f2 = prime_field(2);
  for (const auto& name : {"triv", "sign"}) {
    GradedModuleRep m = modular_reduce(h.module(name), h.specialization("v1f2"), h.specialized_algebra("v1f2"));
    EXPECT_EQ(m.action[1], mat(f2, {{"1"}})) << name;
  }
  Session h2 = load_fixture("hecke_s2");
  EXPECT_EQ(error_of([&] {
              modular_reduce(one_dim(h2, "1/(v-1)"), h2.specialization("v1q"), h2.specialized_algebra("v1q"));
            }),
            ErrorKind::NonInvertibleDenominator);
}

TEST(CheckIntegrality, Examples) {
  Session f = load_fixture("fermion");
  EXPECT_TRUE(check_integrality(fingerprint(f.module("V")), f.ring).ok());
  Session h = load_fixture("hecke_s2");
  EXPECT_TRUE(check_integrality(fingerprint(h.module("triv")), h.ring).ok());
  Fingerprint bad = fingerprint(h.module("triv"));
  Ring k = h.generic_field();
  bad.polys[0].begin()->second = upoly(k, {"1/(v-1)", "1"});
  EXPECT_FALSE(check_integrality(bad, h.ring).ok());
  // the prescaled module has a denominator in its matrices but not in its fingerprint
  EXPECT_TRUE(check_integrality(fingerprint(f.module("V_prescaled")), f.ring).ok());
}

TEST(MakeTower, Examples) {
  Session h = load_fixture("hecke_s2_tower");
  const auto& q = h.specialization("v1q");
  const auto& f2 = h.specialization("v1f2");
  SpecializationTower t = make_tower("t", q, f2, integers(), h.algebra.get());
  EXPECT_EQ(t.phi.apply(sc(integers(), "3")), sc(prime_field(2), "1"));
  EXPECT_NO_THROW(make_tower("id", q, q, q.target(), h.algebra.get()));

  Ring zv = h.ring;
  Specialization minus = make_specialization("vm1", zv, rationals(), {{"v", sc(rationals(), "-1")}});
  EXPECT_EQ(error_of([&] { make_tower("bad", q, minus, q.target(), h.algebra.get()); }), ErrorKind::KernelNotNested);
  EXPECT_EQ(error_of([&] { make_tower("bad", q, minus, integers(), h.algebra.get()); }), ErrorKind::KernelNotNested);
  // GF(2) is not a subring of anything that maps to Q
  EXPECT_EQ(error_of([&] { make_tower("bad", f2, q, f2.target(), h.algebra.get()); }), ErrorKind::PhiNotDefinedOnB);
}

TEST(SpecializeProperties, ReductionCompatibilities) {
  for (const auto& name : fixture_names()) {
    Session s = load_fixture(name);
    for (const auto& theta : s.specializations) {
      AlgebraPtr lh = s.specialized_algebra(theta.name);
      for (const auto& m : s.generic_modules()) {
        auto [lattice, record] = clear_denominators(m, theta);
        GradedModuleRep red = modular_reduce(lattice, theta, lh);
        EXPECT_TRUE(validate_module(red).ok()) << name << " " << theta.name << " " << m.name;
        GradedCharacter generic = graded_character(lattice);
        GradedCharacter special = graded_character(red);
        for (std::size_t b = 0; b < generic.values.size(); ++b)
          EXPECT_EQ(special.values[b], generic.values[b].map([&](const Scalar& c) { return theta.apply(c); }, theta.target()));
        auto evals = default_evaluation_set(*s.algebra);
        EXPECT_TRUE(fingerprint_equal(push_forward(fingerprint(lattice, evals), theta), fingerprint(red, evals)));
      }
    }
  }
}

TEST(SpecializeProperties, LatticeIndependence) {
  Session s = load_fixture("fermion");
  for (const auto& theta : s.specializations) {
    AlgebraPtr lh = s.specialized_algebra(theta.name);
    GradedModuleRep a = modular_reduce(clear_denominators(s.module("V"), theta).first, theta, lh);
    GradedModuleRep b = modular_reduce(clear_denominators(s.module("V_prescaled"), theta).first, theta, lh);
    // a third lattice: V scaled by (a+2, a+2) is also integral at a = 0
    Ring k = s.generic_field();
    GradedModuleRep c = modular_reduce(rescale_basis(s.module("V"), {sc(k, "a+2"), sc(k, "a+2")}), theta, lh);
    EXPECT_EQ(graded_character(a), graded_character(b)) << theta.name;
    EXPECT_EQ(graded_character(a), graded_character(c)) << theta.name;
  }
}

TEST(SpecializeProperties, FixtureFingerprintsAreIntegral) {
  for (const auto& name : fixture_names()) {
    Session s = load_fixture(name);
    for (const auto& m : s.generic_modules())
      EXPECT_TRUE(check_integrality(fingerprint(m), s.ring).ok()) << name << " " << m.name;
  }
}
