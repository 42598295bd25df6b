#pragma once

#include <functional>
#include <map>
#include <string>

#include "gradec/scalar.hpp"

namespace gradec {

/// Sparse Laurent polynomial in one formal variable (t for characters, q for
/// graded multiplicities). Zero coefficients are never stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(Ring coeff_ring, char var = 't');

  static LaurentPoly monomial(const Scalar& c, int exponent, char var = 't');

  const Ring& ring() const { return ring_; }
  char var() const { return var_; }
  const std::map<int, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int e) const;
  int min_exponent() const;  // requires non-zero
  int max_exponent() const;

  void add_term(int e, const Scalar& c);
  LaurentPoly shifted(int by) const;  // multiply by var^by
  Scalar at_one() const;
  LaurentPoly map(const std::function<Scalar(const Scalar&)>& f, const Ring& target) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const Scalar& c);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  Ring ring_;
  char var_;
  std::map<int, Scalar> terms_;
};

inline bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

/// e.g. "1 + q", "2*q^-1 + (v + 1)*q^3". Ascending exponents.
std::string to_string(const LaurentPoly& p);

}  // namespace gradec
