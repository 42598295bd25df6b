#pragma once

#include <vector>

#include <gmpxx.h>

namespace gradec {

/// Integer coefficients of the e-th cyclotomic polynomial, constant term first.
/// Computed by dividing x^e - 1 by the cyclotomic polynomials of the proper
/// divisors of e.
std::vector<mpz_class> cyclotomic_poly(unsigned e);

unsigned euler_phi(unsigned e);

}  // namespace gradec
