#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "gradec/ring.hpp"

namespace gradec {

using Monomial = std::vector<int>;

struct PolyRep;
struct FracRep;
struct Term;

/// An exact element of a ring described by a RingDescriptor.
///
/// Values are immutable and kept in canonical form, so equality is a
/// structural comparison. Arithmetic between values of different rings throws
/// RingMismatch; use coerce() to move a value along a canonical embedding.
class Scalar {
 public:
  Scalar();  // the integer 0

  static Scalar zero(const Ring& r);
  static Scalar one(const Ring& r);
  static Scalar from_int(const Ring& r, long n);
  static Scalar from_integer(const Ring& r, const mpz_class& n);
  // Fails with InexactDivision when r is Z (or a polynomial ring over Z) and
  // q is not integral, and with RingMismatch when r has positive characteristic.
  static Scalar from_rational(const Ring& r, const mpq_class& q);
  // The named generator: a polynomial variable or the cyclotomic generator,
  // at any level of the ring tower.
  static Scalar variable(const Ring& r, const std::string& name);

  // Raw constructors; inputs are normalised.
  static Scalar residue(const Ring& r, std::int64_t value);
  static Scalar cyclotomic(const Ring& r, std::vector<mpq_class> coords);
  static Scalar polynomial(const Ring& r, std::vector<Term> terms);
  static Scalar fraction(const Ring& r, const Scalar& num, const Scalar& den);

  const Ring& ring() const { return ring_; }
  RingKind kind() const { return ring_->kind(); }

  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;                 // Integers, Rationals
  std::uint64_t residue() const;                     // PrimeField
  const std::vector<mpq_class>& coords() const;      // Cyclotomic, length phi(e)
  const std::vector<Term>& terms() const;            // Polynomial, Laurent; ascending monomials
  const Scalar& numerator() const;                   // Fraction, in numerator_ring()
  const Scalar& denominator() const;                 // Fraction, monic

  // Constant term of a polynomial, the value itself otherwise.
  Scalar constant_term() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

 private:
  using Data = std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>, std::shared_ptr<const PolyRep>,
                            std::shared_ptr<const FracRep>>;
  Scalar(Ring r, Data d) : ring_(std::move(r)), data_(std::move(d)) {}

  Ring ring_;
  Data data_;

  friend struct ScalarAccess;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

struct PolyRep {
  std::vector<Term> terms;
};

struct FracRep {
  Scalar num;
  Scalar den;
};

inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

/// Multiplicative inverse; throws DivisionByZero or InexactDivision (non-unit).
Scalar inverse(const Scalar& a);
/// a / b, exact. Throws InexactDivision when b does not divide a in the ring.
Scalar divide(const Scalar& a, const Scalar& b);
Scalar pow(const Scalar& a, long n);

/// Canonical total order. In characteristic 0 this is the sign of the leading
/// coefficient of b - a (monomials compared by degree, then lexicographically).
int compare(const Scalar& a, const Scalar& b);
inline bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }

std::string to_string(const Scalar& a);

/// Canonical embedding into a larger ring (Z into anything, Q into
/// characteristic 0, Q(zeta_e) into Q(zeta_f) for e | f, R into R[x], R into
/// Frac(R), ...). Throws RingMismatch if there is none.
Scalar coerce(const Scalar& a, const Ring& target);
bool coerces_to(const Ring& from, const Ring& to);

// Degree of a univariate polynomial or Laurent value in its only variable
// (highest exponent); -1 for zero.
int univariate_degree(const Scalar& a);

}  // namespace gradec
