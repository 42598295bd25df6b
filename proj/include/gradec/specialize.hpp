#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradec/character.hpp"
#include "gradec/hom.hpp"
#include "gradec/module.hpp"

namespace gradec {

/// A ring map from the base ring A onto a field L, fixed by the images of the
/// variables of A.
struct Specialization {
  std::string name;
  RingHom hom;  // hom.source = A, hom.target = L

  const Ring& source() const { return hom.source; }
  const Ring& target() const { return hom.target; }
  Scalar apply(const Scalar& x) const { return hom_apply(hom, x); }
};

/// Validates and builds a specialization. The target must be Q, GF(p) or
/// Q(zeta_e), generated as a field by the image of A (FractionFieldMismatch
/// otherwise). Laurent variables must go to units (NonUnitAssignment); every
/// variable needs an image (MissingAssignment).
Specialization make_specialization(const std::string& name, const Ring& source, const Ring& target,
                                   const std::map<std::string, Scalar>& assignments);

/// L H: structure constants pushed through the specialization.
GradedAlgebra specialize_algebra(const GradedAlgebra& alg, const Specialization& spec);

/// Basis scaling found by clear_denominators: the new basis is
/// scale[r] * (old basis vector r).
struct RescalingRecord {
  std::vector<Scalar> scale;
  std::vector<std::string> steps;  // one line per scaling step, for reports
};

/// Rescales each basis vector of a module over K = Frac(A) so that every
/// action entry lies in the localisation of A at the kernel of the
/// specialization, giving a graded A_p-lattice. For each relevant prime
/// element pi the exponents k_r of pi^k_r on basis vector r solve the
/// difference constraints k_r - k_s <= val_pi(M_rs) (shortest paths); an
/// infeasible system or leftover bad denominators raise LatticeNotFound.
std::pair<GradedModuleRep, RescalingRecord> clear_denominators(const GradedModuleRep& mod, const Specialization& spec);

/// Applies the specialization entrywise. `target_algebra` is the specialized
/// algebra the result is a module over. Raises NonInvertibleDenominator if an
/// entry is outside the localisation.
GradedModuleRep modular_reduce(const GradedModuleRep& lattice, const Specialization& spec, const AlgebraPtr& target_algebra);

/// True if x (in Frac(A)) lies in A itself.
bool in_base_ring(const Scalar& x, const Ring& base);

/// Every fingerprint coefficient must lie in A; reports offenders.
ValidationReport check_integrality(const Fingerprint& fp, const Ring& base);

/// theta: A -> L, theta': A -> L' and an intermediate ring B (Z, or L itself)
/// with theta(A) inside B, plus the induced phi: B -> L'.
struct SpecializationTower {
  std::string name;
  Specialization theta;
  Specialization theta_prime;
  Ring intermediate;  // B
  Specialization phi;  // B -> L'
};

/// Builds phi and checks phi o theta = theta' on the generators of A (and on
/// the structure constants of `alg` when given). KernelNotNested when the
/// composite disagrees, PhiNotDefinedOnB when phi cannot be defined on B.
SpecializationTower make_tower(const std::string& name, const Specialization& theta, const Specialization& theta_prime,
                               const Ring& intermediate, const GradedAlgebra* alg = nullptr);

}  // namespace gradec
