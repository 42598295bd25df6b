#pragma once

#include <vector>

#include "gradec/upoly.hpp"

namespace gradec {

/// Distinct roots of p lying in its coefficient field, in canonical order.
///
/// Supported fields: GF(p), Q and Q(zeta_e). Over the cyclotomic fields the
/// roots are found p-adically: reduce at a prime that splits completely, lift
/// the roots modulo each prime above it, and recombine candidate tuples by
/// inverting the Vandermonde matrix of the conjugate roots of unity. Every
/// candidate is checked exactly, so no root is reported that is not one.
/// Fraction fields only handle degree <= 1 (UnsupportedField otherwise).
std::vector<Scalar> roots_in_field(const UPoly& p);

}  // namespace gradec
