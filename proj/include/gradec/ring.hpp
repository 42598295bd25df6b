#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gradec {

enum class RingKind { Integers, Rationals, Polynomial, Laurent, Fraction, Cyclotomic, PrimeField };

class RingDescriptor;
using Ring = std::shared_ptr<const RingDescriptor>;

/// Immutable description of a coefficient ring. Rings are compared
/// structurally, so two separately built descriptors for Z[v] are the same ring.
class RingDescriptor {
 public:
  RingKind kind() const { return kind_; }
  // Polynomial/Laurent: coefficient ring. Fraction: the ring whose field of
  // fractions this is.
  const Ring& base() const { return base_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  unsigned order() const { return order_; }              // e for the cyclotomic field Q(zeta_e)
  unsigned degree() const { return degree_; }            // phi(e)
  std::uint64_t prime() const { return prime_; }
  const std::string& generator() const { return generator_; }
  // Coefficients of the e-th cyclotomic polynomial, constant term first.
  const std::vector<mpz_class>& modulus() const { return modulus_; }
  // Fraction fields: the univariate polynomial ring (over a field) holding
  // numerators and denominators.
  const Ring& numerator_ring() const { return numerator_ring_; }

  bool is_field() const;
  std::uint64_t characteristic() const;
  std::string to_string() const;

  friend Ring integers();
  friend Ring rationals();
  friend Ring prime_field(std::uint64_t);
  friend Ring cyclotomic_field(unsigned, const std::string&);
  friend Ring polynomial_ring(const Ring&, std::vector<std::string>);
  friend Ring laurent_ring(const Ring&, std::vector<std::string>);
  friend Ring fraction_field(const Ring&);

 private:
  RingKind kind_ = RingKind::Integers;
  Ring base_;
  std::vector<std::string> vars_;
  unsigned order_ = 0;
  unsigned degree_ = 0;
  std::uint64_t prime_ = 0;
  std::string generator_;
  std::vector<mpz_class> modulus_;
  Ring numerator_ring_;
};

Ring integers();
Ring rationals();
Ring prime_field(std::uint64_t p);
Ring cyclotomic_field(unsigned e, const std::string& generator = "z");
Ring polynomial_ring(const Ring& base, std::vector<std::string> vars);
Ring laurent_ring(const Ring& base, std::vector<std::string> vars);
// Frac(Z) and Frac(Q) collapse to Q; fields are their own fraction field.
Ring fraction_field(const Ring& base);

/// Inverse of RingDescriptor::to_string: "ZZ", "QQ", "GF(7)", "QQ(zeta_3)",
/// "QQ(zeta_3:w)", "ZZ[a,b]", "QQ[v^+-1]", "Frac(ZZ[a])". SyntaxError on
/// anything else.
Ring parse_ring(const std::string& text);

bool same_ring(const Ring& a, const Ring& b);

// The smallest field containing the ring: Q for Z, Frac(R) for polynomial rings.
Ring field_of(const Ring& r);

// All variable names reachable from this ring (polynomial variables and the
// cyclotomic generator), outermost first.
std::vector<std::string> ring_variables(const Ring& r);

bool is_prime(std::uint64_t n);

}  // namespace gradec
