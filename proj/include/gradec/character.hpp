#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradec/laurent.hpp"
#include "gradec/module.hpp"

namespace gradec {

/// chi(b) = sum_i trace(b on M_i) t^i for each algebra basis element b.
struct GradedCharacter {
  Ring ring;
  std::vector<std::string> basis;
  std::vector<LaurentPoly> values;

  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
    return same_ring(a.ring, b.ring) && a.basis == b.basis && a.values == b.values;
  }
};

GradedCharacter graded_character(const GradedModuleRep& mod);
/// Traces of every basis element.
std::vector<Scalar> ungraded_character(const ModuleRep& mod);

/// A degree-zero element used to probe modules: a product of basis elements.
struct EvalElement {
  std::string label;
  std::vector<std::size_t> word;
};

/// Degree-zero basis elements, then products of `depth` or fewer basis
/// elements whose degrees sum to zero (depth >= 2 includes all pairs such as
/// x*y with deg x = -deg y).
std::vector<EvalElement> default_evaluation_set(const GradedAlgebra& alg, int depth = 2);

/// For each evaluation element h and each degree i with M_i != 0, the
/// characteristic polynomial of h on M_i. Degrees where M_i = 0 carry the
/// constant 1 and are left out.
struct Fingerprint {
  Ring ring;
  std::vector<std::string> labels;
  std::vector<std::map<int, UPoly>> polys;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return same_ring(a.ring, b.ring) && a.labels == b.labels && a.polys == b.polys;
  }
};

Fingerprint fingerprint(const GradedModuleRep& mod, const std::vector<EvalElement>& elements);
Fingerprint fingerprint(const GradedModuleRep& mod);
/// Located description of the first difference, or nothing if equal.
std::optional<std::string> fingerprint_difference(const Fingerprint& a, const Fingerprint& b);
bool fingerprint_equal(const Fingerprint& a, const Fingerprint& b);
/// Pointwise product (the fingerprint of a direct sum).
Fingerprint fingerprint_product(const Fingerprint& a, const Fingerprint& b);
Fingerprint fingerprint_shift(const Fingerprint& a, int j);

/// Graded multiplicities as Laurent polynomials in q with integer
/// coefficients, one per simple.
using GradedClass = std::vector<LaurentPoly>;

/// Solves target = sum_{s,j} c_{s,j} t^j chi_s on the degree-zero basis by
/// exact elimination. Characteristic 0: every c must be a non-negative integer
/// (NegativeMultiplicity otherwise). Characteristic p: characters only see
/// multiplicities mod p; the residues in [0, p) are returned.
GradedClass solve_multiplicities(const GradedCharacter& target, const std::vector<GradedCharacter>& simples,
                                 const std::vector<std::size_t>& degree_zero);

/// Same problem from fingerprints, valid in every characteristic: the
/// fingerprint polynomials are factored over a common coprime base and the
/// exponent vectors give an integer linear system.
GradedClass solve_multiplicities_by_fingerprint(const Fingerprint& target, const std::vector<Fingerprint>& simples);

}  // namespace gradec
