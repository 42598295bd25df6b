#pragma once

#include <map>
#include <string>

#include "gradec/scalar.hpp"

namespace gradec {

/// A ring homomorphism out of a polynomial-type ring, fixed by the images of
/// its generators. Integer and rational constants go along the canonical maps
/// (Q -> GF(p) is the reduction map on the localisation at p).
struct RingHom {
  Ring source;
  Ring target;
  std::map<std::string, Scalar> images;  // generator name -> element of target
};

/// Applies the homomorphism to an element of the source ring or of its field
/// of fractions. Fractions are first written in lowest terms over the source;
/// a denominator sent to zero raises NonInvertibleDenominator.
Scalar hom_apply(const RingHom& hom, const Scalar& x);

/// True when hom_apply succeeds, i.e. x lies in the localisation of the
/// source at the kernel.
bool in_localization(const RingHom& hom, const Scalar& x);

}  // namespace gradec
