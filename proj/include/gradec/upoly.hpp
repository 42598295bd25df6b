#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gradec/scalar.hpp"

namespace gradec {

/// Dense univariate polynomial with coefficients in a single ring, constant
/// term first. Used for characteristic and minimal polynomials (variable X)
/// and internally for gcd computations. Division assumes a field or a monic
/// divisor.
class UPoly {
 public:
  explicit UPoly(Ring coeff_ring);
  UPoly(Ring coeff_ring, std::vector<Scalar> coeffs);

  static UPoly constant(const Scalar& c);
  static UPoly x(const Ring& r);
  static UPoly monomial(const Scalar& c, int degree);

  const Ring& ring() const { return ring_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int i) const;
  const Scalar& leading() const;

  Scalar eval(const Scalar& x) const;
  UPoly monic() const;
  UPoly derivative() const;
  UPoly map(const std::function<Scalar(const Scalar&)>& f, const Ring& target) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Scalar& c);
  friend bool operator==(const UPoly& a, const UPoly& b);

 private:
  void trim();
  Ring ring_;
  std::vector<Scalar> coeffs_;
};

inline bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd over a field; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// g = s*a + t*b with g monic.
struct ExtendedGcd {
  UPoly g, s, t;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);
UPoly lcm(const UPoly& a, const UPoly& b);
UPoly pow(const UPoly& a, unsigned n);
UPoly powmod(const UPoly& base, const mpz_class& n, const UPoly& modulus);
/// Product of the distinct monic irreducible factors (characteristic 0, or
/// characteristic p polynomials of degree below p).
UPoly squarefree_part(const UPoly& a);
/// Number of times d divides a (d non-constant).
int multiplicity(const UPoly& a, const UPoly& d);

int compare(const UPoly& a, const UPoly& b);
std::string to_string(const UPoly& p, const std::string& var = "X");

}  // namespace gradec
