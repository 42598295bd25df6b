#include "gradec/hom.hpp"

#include "gradec/error.hpp"

namespace gradec {

namespace {

Scalar generator_image(const RingHom& hom, const std::string& name) {
  auto it = hom.images.find(name);
  if (it != hom.images.end()) return it->second;
  try {
    return Scalar::variable(hom.target, name);
  } catch (const Error&) {
    throw Error(ErrorKind::MissingAssignment, "no image given for '" + name + "'");
  }
}

Scalar apply_rational(const RingHom& hom, const mpq_class& q) {
  const Ring& t = hom.target;
  if (t->characteristic() == 0) return coerce(Scalar::from_rational(rationals(), q), t);
  Scalar den = Scalar::from_integer(t, q.get_den());
  if (den.is_zero())
    throw Error(ErrorKind::NonInvertibleDenominator,
                q.get_str() + " has a denominator divisible by " + std::to_string(t->characteristic()));
  return Scalar::from_integer(t, q.get_num()) * inverse(den);
}

// Scales num/den (polynomials over Q) to coprime integer polynomials.
std::pair<Scalar, Scalar> integral_lowest_terms(const Scalar& num, const Scalar& den) {
  mpz_class l = 1, g = 0;
  for (const Scalar* p : {&num, &den})
    for (const auto& t : p->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
  for (const Scalar* p : {&num, &den})
    for (const auto& t : p->terms()) {
      mpz_class c = t.coeff.rational().get_num() * (l / t.coeff.rational().get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
  const Ring& nr = num.ring();
  Scalar scale = Scalar::from_rational(nr, mpq_class(l, g));
  return {num * scale, den * scale};
}

}  // namespace

Scalar hom_apply(const RingHom& hom, const Scalar& x) {
  const Ring& t = hom.target;
  switch (x.kind()) {
    case RingKind::Integers:
      return Scalar::from_integer(t, x.rational().get_num());
    case RingKind::Rationals:
      return apply_rational(hom, x.rational());
    case RingKind::PrimeField:
      return coerce(x, t);
    case RingKind::Cyclotomic: {
      auto it = hom.images.find(x.ring()->generator());
      if (it == hom.images.end()) return coerce(x, t);
      Scalar out = Scalar::zero(t), power = Scalar::one(t);
      for (const auto& c : x.coords()) {
        if (c != 0) out = out + apply_rational(hom, c) * power;
        power = power * it->second;
      }
      return out;
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      const auto& vars = x.ring()->vars();
      std::vector<Scalar> gens, inv_gens(vars.size());
      std::vector<bool> have_inv(vars.size(), false);
      for (const auto& v : vars) gens.push_back(generator_image(hom, v));
      Scalar out = Scalar::zero(t);
      for (const auto& term : x.terms()) {
        Scalar value = hom_apply(hom, term.coeff);
        for (std::size_t k = 0; k < vars.size(); ++k) {
          int e = term.mono[k];
          if (e >= 0) {
            value = value * pow(gens[k], e);
          } else {
            if (!have_inv[k]) {
              if (gens[k].is_zero())
                throw Error(ErrorKind::NonInvertibleDenominator, "'" + vars[k] + "' is sent to zero");
              inv_gens[k] = inverse(gens[k]);
              have_inv[k] = true;
            }
            value = value * pow(inv_gens[k], -e);
          }
        }
        out = out + value;
      }
      return out;
    }
    case RingKind::Fraction: {
      Scalar num = x.numerator(), den = x.denominator();
      if (t->characteristic() != 0 && num.ring()->base()->kind() == RingKind::Rationals)
        std::tie(num, den) = integral_lowest_terms(num, den);
      Scalar n = hom_apply(hom, num), d = hom_apply(hom, den);
      if (d.is_zero())
        throw Error(ErrorKind::NonInvertibleDenominator, "denominator of " + to_string(x) + " is sent to zero");
      return n * inverse(d);
    }
  }
  throw Error(ErrorKind::RingMismatch, "cannot apply homomorphism to " + x.ring()->to_string());
}

bool in_localization(const RingHom& hom, const Scalar& x) {
  try {
    hom_apply(hom, x);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonInvertibleDenominator) return false;
    throw;
  }
}

}  // namespace gradec
