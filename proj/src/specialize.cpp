#include "gradec/specialize.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "gradec/error.hpp"

namespace gradec {

namespace {

// Q-coordinates of an element of Q or Q(zeta_e).
std::vector<mpq_class> q_coords(const Scalar& x) {
  if (x.kind() == RingKind::Cyclotomic) return x.coords();
  return {x.rational()};
}

// Dimension over Q of the smallest subring of the target containing the
// given elements (equal to the generated subfield for algebraic elements).
std::size_t generated_dimension(const Ring& target, const std::vector<Scalar>& gens) {
  const Ring q = rationals();
  const std::size_t n = target->kind() == RingKind::Cyclotomic ? target->degree() : 1;
  std::vector<Scalar> basis{Scalar::one(target)};
  auto rank_of = [&](const std::vector<Scalar>& elems) {
    Matrix m(q, elems.size(), n);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      auto c = q_coords(elems[i]);
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar::from_rational(q, c[j]);
    }
    return rank(m);
  };
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t current = basis.size();
    for (std::size_t i = 0; i < current && basis.size() < n; ++i)
      for (const auto& g : gens) {
        auto trial = basis;
        trial.push_back(basis[i] * g);
        if (rank_of(trial) > basis.size()) {
          basis = std::move(trial);
          grew = true;
        }
      }
  }
  return basis.size();
}

// Minimal polynomial over Q of an element of Q or Q(zeta_e).
UPoly minimal_polynomial_over_q(const Scalar& a) {
  const Ring q = rationals();
  const Ring& field = a.ring();
  const std::size_t n = field->kind() == RingKind::Cyclotomic ? field->degree() : 1;
  std::vector<std::vector<Scalar>> cols;
  Scalar power = Scalar::one(field);
  for (std::size_t k = 0; k <= n; ++k) {
    auto c = q_coords(power);
    std::vector<Scalar> col;
    for (auto& x : c) col.push_back(Scalar::from_rational(q, x));
    if (!cols.empty()) {
      Matrix m = Matrix::from_columns(q, n, cols);
      auto sol = solve(m, Matrix::column(q, col));
      if (sol) {
        std::vector<Scalar> coeffs;
        for (std::size_t i = 0; i < cols.size(); ++i) coeffs.push_back(-(*sol)(i, 0));
        coeffs.push_back(Scalar::one(q));
        return UPoly(q, coeffs);
      }
    }
    cols.push_back(col);
    power = power * a;
  }
  throw Error(ErrorKind::NoSolution, "no minimal polynomial found");
}

long padic_val(const mpz_class& n, const mpz_class& p) {
  if (n == 0) return std::numeric_limits<long>::max();
  long k = 0;
  mpz_class m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

// A discrete valuation on K together with an element of K of valuation one.
struct Valuation {
  std::string label;
  Scalar uniformizer;
  std::function<std::optional<long>(const Scalar&)> value;  // nothing for zero
};

long content_valuation(const Scalar& x, const mpz_class& p) {
  switch (x.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return padic_val(x.rational().get_num(), p) - padic_val(x.rational().get_den(), p);
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      long best = std::numeric_limits<long>::max();
      for (const auto& t : x.terms()) best = std::min(best, content_valuation(t.coeff, p));
      return best;
    }
    case RingKind::Fraction:
      return content_valuation(x.numerator(), p) - content_valuation(x.denominator(), p);
    default:
      throw Error(ErrorKind::UnsupportedRing, "p-adic valuation on " + x.ring()->to_string());
  }
}

Valuation integer_prime_valuation(const Ring& field, unsigned long p) {
  const mpz_class pz(p);
  return {std::to_string(p), Scalar::from_integer(field, pz), [pz](const Scalar& x) -> std::optional<long> {
            if (x.is_zero()) return std::nullopt;
            return content_valuation(x, pz);
          }};
}

// Valuation of K = Frac(F[v]) at an irreducible (or at least squarefree)
// polynomial pi in the numerator ring.
Valuation polynomial_valuation(const Ring& field, const Scalar& pi_num) {
  const Ring& nr = field->numerator_ring();
  UPoly pi(nr->base());
  {
    std::vector<Scalar> c;
    for (const auto& t : pi_num.terms()) {
      if (static_cast<int>(c.size()) <= t.mono[0]) c.resize(t.mono[0] + 1, Scalar::zero(nr->base()));
      c[t.mono[0]] = t.coeff;
    }
    pi = UPoly(nr->base(), c);
  }
  auto to_u = [nr](const Scalar& p) {
    std::vector<Scalar> c;
    for (const auto& t : p.terms()) {
      if (static_cast<int>(c.size()) <= t.mono[0]) c.resize(t.mono[0] + 1, Scalar::zero(nr->base()));
      c[t.mono[0]] = t.coeff;
    }
    return UPoly(nr->base(), c);
  };
  Scalar uniformizer = Scalar::fraction(field, pi_num, Scalar::one(nr));
  return {to_string(pi_num), uniformizer, [field, pi, to_u](const Scalar& x0) -> std::optional<long> {
            if (x0.is_zero()) return std::nullopt;
            Scalar x = coerce(x0, field);
            return multiplicity(to_u(x.numerator()), pi) - multiplicity(to_u(x.denominator()), pi);
          }};
}

Scalar upoly_to_numerator(const UPoly& u, const Ring& nr) {
  std::vector<Term> terms;
  for (int i = 0; i <= u.degree(); ++i) terms.push_back({Monomial{i}, coerce(u.coeffs()[i], nr->base())});
  return Scalar::polynomial(nr, std::move(terms));
}

std::vector<Valuation> candidate_valuations(const Ring& field, const Specialization& spec) {
  std::vector<Valuation> out;
  const Ring& target = spec.target();
  const std::uint64_t p = target->characteristic();
  if (field->kind() == RingKind::Rationals) {
    if (p != 0) out.push_back(integer_prime_valuation(field, p));
    return out;
  }
  if (field->kind() != RingKind::Fraction) return out;
  const Ring& nr = field->numerator_ring();
  const std::string& var = field->vars()[0];
  auto it = spec.hom.images.find(var);
  if (p != 0 && nr->base()->kind() == RingKind::Rationals) out.push_back(integer_prime_valuation(field, p));
  if (it == spec.hom.images.end()) return out;
  const Scalar& image = it->second;
  if (same_ring(nr->base(), target)) {
    out.push_back(polynomial_valuation(field, Scalar::variable(nr, var) - coerce(image, nr)));
  } else if (p != 0 && nr->base()->kind() == RingKind::Rationals) {
    out.push_back(polynomial_valuation(
        field, Scalar::variable(nr, var) - Scalar::from_int(nr, static_cast<long>(image.residue()))));
  } else if (p == 0 && nr->base()->kind() == RingKind::Rationals) {
    out.push_back(polynomial_valuation(field, upoly_to_numerator(minimal_polynomial_over_q(image), nr)));
  }
  return out;
}

// Valuations at the squarefree parts of offending denominators; a fallback
// when the kernel has primes the standard candidates miss.
std::vector<Valuation> denominator_valuations(const Ring& field, const std::vector<Scalar>& offenders) {
  std::vector<Valuation> out;
  if (field->kind() != RingKind::Fraction) return out;
  const Ring& nr = field->numerator_ring();
  std::set<std::string> seen;
  for (const auto& x : offenders) {
    std::vector<Scalar> c;
    for (const auto& t : x.denominator().terms()) {
      if (static_cast<int>(c.size()) <= t.mono[0]) c.resize(t.mono[0] + 1, Scalar::zero(nr->base()));
      c[t.mono[0]] = t.coeff;
    }
    UPoly d = UPoly(nr->base(), c);
    if (field->characteristic() == 0) d = squarefree_part(d);
    if (d.degree() <= 0) continue;
    Scalar pi = upoly_to_numerator(d, nr);
    if (seen.insert(to_string(pi)).second) out.push_back(polynomial_valuation(field, pi));
  }
  return out;
}

std::vector<Scalar> offending_entries(const GradedModuleRep& mod, const Specialization& spec) {
  std::vector<Scalar> out;
  for (const auto& a : mod.action)
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!a(r, c).is_zero() && !in_localization(spec.hom, a(r, c))) out.push_back(a(r, c));
  return out;
}

// Shortest-path potentials for k_r - k_s <= val(M_rs). Returns nothing on a
// negative cycle.
std::optional<std::vector<long>> potentials(const GradedModuleRep& mod, const Valuation& v) {
  const std::size_t d = mod.dim();
  struct Edge {
    std::size_t from, to;
    long w;
  };
  std::vector<Edge> edges;
  for (const auto& a : mod.action)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) {
        auto val = v.value(a(r, s));
        if (!val) continue;
        if (r == s) {
          if (*val < 0) return std::nullopt;  // diagonal entries do not move
          continue;
        }
        edges.push_back({s, r, *val});
      }
  std::vector<long> k(d, 0);
  for (std::size_t round = 0; round <= d; ++round) {
    bool changed = false;
    for (const auto& e : edges)
      if (k[e.from] + e.w < k[e.to]) {
        k[e.to] = k[e.from] + e.w;
        changed = true;
      }
    if (!changed) {
      long lo = *std::min_element(k.begin(), k.end());
      for (auto& x : k) x -= lo;
      return k;
    }
  }
  return std::nullopt;
}

}  // namespace

Specialization make_specialization(const std::string& name, const Ring& source, const Ring& target,
                                   const std::map<std::string, Scalar>& assignments) {
  const RingKind sk = source->kind();
  if (sk != RingKind::Polynomial && sk != RingKind::Laurent && sk != RingKind::Integers)
    throw Error(ErrorKind::UnsupportedRing, "specialization " + name + ": source must be a polynomial or Laurent ring, got " +
                                                source->to_string());
  const RingKind tk = target->kind();
  if (tk != RingKind::Rationals && tk != RingKind::PrimeField && tk != RingKind::Cyclotomic)
    throw Error(ErrorKind::FractionFieldMismatch, "specialization " + name + ": target must be QQ, GF(p) or QQ(zeta_e), got " +
                                                      target->to_string());
  std::vector<std::string> vars = sk == RingKind::Integers ? std::vector<std::string>{} : source->vars();
  const Ring coeffs = sk == RingKind::Integers ? source : source->base();
  if (coeffs->kind() == RingKind::Polynomial || coeffs->kind() == RingKind::Laurent || coeffs->kind() == RingKind::Fraction)
    throw Error(ErrorKind::UnsupportedRing, "specialization " + name + ": iterated polynomial rings are not supported");
  if (target->characteristic() != coeffs->characteristic() &&
      !(coeffs->kind() == RingKind::Integers && target->characteristic() != 0))
    throw Error(ErrorKind::NotAHomomorphism, "specialization " + name + ": no ring map from " + coeffs->to_string() +
                                                 " to " + target->to_string());
  if (coeffs->kind() != RingKind::Integers && !coerces_to(coeffs, target))
    throw Error(ErrorKind::NotAHomomorphism, "specialization " + name + ": " + coeffs->to_string() + " does not embed in " +
                                                 target->to_string());
  RingHom hom{source, target, {}};
  for (const auto& [var, value] : assignments) {
    if (std::find(vars.begin(), vars.end(), var) == vars.end())
      throw Error(ErrorKind::UnknownName, "specialization " + name + ": '" + var + "' is not a variable of " +
                                              source->to_string());
    Scalar v = same_ring(value.ring(), target) ? value : coerce(value, target);
    if (sk == RingKind::Laurent && v.is_zero())
      throw Error(ErrorKind::NonUnitAssignment, "specialization " + name + ": Laurent variable '" + var + "' sent to 0");
    hom.images.emplace(var, v);
  }
  for (const auto& var : vars)
    if (!hom.images.count(var))
      throw Error(ErrorKind::MissingAssignment, "specialization " + name + ": no value for '" + var + "'");
  if (tk == RingKind::Cyclotomic) {
    std::vector<Scalar> gens;
    for (const auto& [var, value] : hom.images) gens.push_back(value);
    if (coeffs->kind() == RingKind::Cyclotomic) gens.push_back(coerce(Scalar::variable(coeffs, coeffs->generator()), target));
    const std::size_t dim = generated_dimension(target, gens);
    if (dim != target->degree())
      throw Error(ErrorKind::FractionFieldMismatch, "specialization " + name + ": the image of " + source->to_string() +
                                                        " generates a subfield of degree " + std::to_string(dim) +
                                                        ", not " + target->to_string());
  }
  return Specialization{name, std::move(hom)};
}

GradedAlgebra specialize_algebra(const GradedAlgebra& alg, const Specialization& spec) {
  return map_algebra(alg, [&](const Scalar& c) { return spec.apply(c); }, spec.target(), alg.name + "@" + spec.name);
}

std::pair<GradedModuleRep, RescalingRecord> clear_denominators(const GradedModuleRep& mod, const Specialization& spec) {
  const Ring& field = mod.field;
  RescalingRecord record;
  record.scale.assign(mod.dim(), Scalar::one(field));
  GradedModuleRep current = mod;
  std::vector<Scalar> offenders = offending_entries(current, spec);
  const std::vector<Valuation> primary = candidate_valuations(field, spec);
  int rounds = 0;
  while (!offenders.empty()) {
    if (++rounds > 64) break;
    std::vector<Valuation> candidates = primary;
    for (auto& v : denominator_valuations(field, offenders)) candidates.push_back(std::move(v));
    bool progressed = false;
    for (const auto& v : candidates) {
      auto k = potentials(current, v);
      if (!k || std::all_of(k->begin(), k->end(), [](long x) { return x == 0; })) continue;
      std::vector<Scalar> step;
      std::string line = "pi = " + v.label + ", exponents (";
      for (std::size_t r = 0; r < k->size(); ++r) {
        step.push_back(pow(v.uniformizer, (*k)[r]));
        line += (r ? ", " : "") + std::to_string((*k)[r]);
      }
      record.steps.push_back(line + ")");
      current = rescale_basis(current, step);
      for (std::size_t r = 0; r < step.size(); ++r) record.scale[r] = record.scale[r] * step[r];
      progressed = true;
      break;
    }
    if (!progressed) break;
    offenders = offending_entries(current, spec);
  }
  if (!offenders.empty())
    throw Error(ErrorKind::LatticeNotFound, "module " + mod.name + " has entry " + to_string(offenders.front()) +
                                                " outside the localisation at the kernel of " + spec.name +
                                                " and no diagonal rescaling removes it");
  return {std::move(current), std::move(record)};
}

GradedModuleRep modular_reduce(const GradedModuleRep& lattice, const Specialization& spec, const AlgebraPtr& target_algebra) {
  GradedModuleRep out;
  out.name = lattice.name + "@" + spec.name;
  out.algebra = target_algebra;
  out.field = spec.target();
  out.degrees = lattice.degrees;
  for (const auto& a : lattice.action) out.action.push_back(a.map([&](const Scalar& x) { return spec.apply(x); }, spec.target()));
  return out;
}

bool in_base_ring(const Scalar& x, const Ring& base) {
  if (x.kind() == RingKind::Fraction) {
    if (base->kind() != RingKind::Polynomial && base->kind() != RingKind::Laurent) return false;
    // The denominator must be 1, or a power of the variable over a Laurent base.
    const Scalar& den = x.denominator();
    if (den.terms().size() != 1) return false;
    if (den.terms()[0].mono[0] != 0 && base->kind() != RingKind::Laurent) return false;
    if (base->base()->kind() == RingKind::Integers)
      for (const auto& t : x.numerator().terms())
        if (t.coeff.rational().get_den() != 1) return false;
    return true;
  }
  if (x.kind() == RingKind::Rationals && base->kind() == RingKind::Integers) return x.rational().get_den() == 1;
  try {
    coerce(x, base);
    return true;
  } catch (const Error&) {
    return false;
  }
}

ValidationReport check_integrality(const Fingerprint& fp, const Ring& base) {
  ValidationReport report;
  for (std::size_t h = 0; h < fp.labels.size(); ++h)
    for (const auto& [d, p] : fp.polys[h])
      for (int i = 0; i <= p.degree(); ++i)
        if (!in_base_ring(p.coeffs()[i], base))
          report.add("element " + fp.labels[h] + ", degree " + std::to_string(d) + ": coefficient " +
                     to_string(p.coeffs()[i]) + " of X^" + std::to_string(i) + " is not in " + base->to_string());
  return report;
}

SpecializationTower make_tower(const std::string& name, const Specialization& theta, const Specialization& theta_prime,
                               const Ring& intermediate, const GradedAlgebra* alg) {
  if (!same_ring(theta.source(), theta_prime.source()))
    throw Error(ErrorKind::KernelNotNested, "tower " + name + ": " + theta.name + " and " + theta_prime.name +
                                                " start from different rings");
  const Ring& l = theta.target();
  const Ring& lp = theta_prime.target();
  RingHom phi{intermediate, lp, {}};
  auto undefined = [&](const std::string& why) -> Error {
    return Error(ErrorKind::PhiNotDefinedOnB, "tower " + name + ": " + why);
  };
  if (intermediate->kind() == RingKind::Integers) {
    if (l->kind() != RingKind::Rationals) throw undefined("B = ZZ needs " + theta.name + " to land in QQ");
    // theta(A) must lie in Z.
    const Ring& a = theta.source();
    if (a->kind() != RingKind::Integers) {
      if (a->base()->kind() != RingKind::Integers)
        throw undefined("coefficients " + a->base()->to_string() + " do not map into ZZ");
      for (const auto& [var, value] : theta.hom.images) {
        if (value.rational().get_den() != 1) throw undefined(var + " is sent to " + to_string(value) + ", not in ZZ");
        if (a->kind() == RingKind::Laurent && abs(value.rational()) != 1)
          throw undefined("Laurent variable " + var + " is sent to " + to_string(value) + ", not a unit of ZZ");
      }
    }
  } else if (same_ring(intermediate, l)) {
    if (l->kind() == RingKind::Rationals) {
      if (lp->characteristic() != 0) throw undefined("there is no ring map QQ -> " + lp->to_string());
    } else if (l->kind() == RingKind::PrimeField) {
      if (!same_ring(l, lp)) throw undefined("there is no ring map " + l->to_string() + " -> " + lp->to_string());
    } else if (l->kind() == RingKind::Cyclotomic) {
      if (lp->characteristic() != 0) throw undefined("there is no ring map " + l->to_string() + " -> " + lp->to_string());
      // phi(zeta) from a variable with theta(v) = zeta^k, k a unit mod e.
      const unsigned e = l->order();
      const Scalar z = Scalar::variable(l, l->generator());
      std::optional<Scalar> zeta_image;
      for (const auto& [var, value] : theta.hom.images) {
        Scalar power = Scalar::one(l);
        for (unsigned k = 0; k < e && !zeta_image; ++k, power = power * z) {
          if (power != value || std::gcd(k, e) != 1) continue;
          unsigned kinv = 1;
          while ((kinv * k) % e != 1 % e) ++kinv;
          zeta_image = pow(theta_prime.hom.images.at(var), static_cast<long>(kinv));
        }
      }
      if (!zeta_image) throw undefined("no variable is sent to a generator of " + l->to_string());
      phi.images.emplace(l->generator(), *zeta_image);
      UPoly cyclo(rationals());
      {
        std::vector<Scalar> c;
        for (const auto& m : l->modulus()) c.push_back(Scalar::from_integer(rationals(), m));
        cyclo = UPoly(rationals(), c);
      }
      if (!cyclo.eval(coerce(*zeta_image, lp)).is_zero())
        throw undefined("image " + to_string(*zeta_image) + " of the generator is not a primitive root of unity of order " +
                        std::to_string(e));
    } else {
      throw undefined("unsupported intermediate ring " + intermediate->to_string());
    }
  } else {
    throw undefined("intermediate ring " + intermediate->to_string() + " must be ZZ or " + l->to_string());
  }
  Specialization phi_spec{name + ".phi", std::move(phi)};

  auto check = [&](const Scalar& x, const std::string& what) {
    Scalar via = phi_spec.apply(theta.apply(x));
    Scalar direct = theta_prime.apply(x);
    if (via != direct)
      throw Error(ErrorKind::KernelNotNested, "tower " + name + ": phi(" + theta.name + "(" + what + ")) = " + to_string(via) +
                                                  " but " + theta_prime.name + "(" + what + ") = " + to_string(direct));
  };
  const Ring& a = theta.source();
  if (a->kind() != RingKind::Integers) {
    for (const auto& var : a->vars()) {
      Scalar v = Scalar::variable(a, var);
      check(v, var);
      if (a->kind() == RingKind::Laurent) check(inverse(v), var + "^-1");
    }
  }
  if (alg) {
    for (std::size_t i = 0; i < alg->dim(); ++i)
      for (std::size_t j = 0; j < alg->dim(); ++j)
        for (std::size_t k = 0; k < alg->dim(); ++k)
          if (!alg->products[i][j][k].is_zero())
            check(alg->products[i][j][k], "structure constant " + alg->basis[i] + "*" + alg->basis[j] + " on " + alg->basis[k]);
  }
  return SpecializationTower{name, theta, theta_prime, intermediate, std::move(phi_spec)};
}

}  // namespace gradec
