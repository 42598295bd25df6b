#pragma once

#include <cstdint>
#include <vector>

#include "gradec/character.hpp"
#include "gradec/module.hpp"

namespace gradec {

struct SimplesOptions {
  std::uint64_t seed = 0;    // for the random elements tried while splitting
  std::size_t max_dim = 64;  // DimensionBound above this
  int depth = 2;             // evaluation words for the fingerprint route
};

/// Simple modules of an algebra over a field, graded with minimal degree 0,
/// sorted by dimension and then by ungraded character.
struct SimpleSet {
  AlgebraPtr algebra;
  std::vector<GradedModuleRep> simples;
  std::vector<std::vector<Scalar>> characters;  // ungraded, per simple

  std::size_t size() const { return simples.size(); }
  /// Index of the simple with this ungraded character, or size().
  std::size_t find(const std::vector<Scalar>& character) const;
};

/// Basis (as coordinate vectors) of the Jacobson radical. Characteristic 0:
/// radical of the trace form of the regular representation. Characteristic p:
/// the chain of p-power trace maps on integer lifts. Needs Q, Q(zeta_e) or
/// GF(p) (UnsupportedField otherwise).
std::vector<std::vector<Scalar>> radical(const GradedAlgebra& alg);

/// Radical of the matrix algebra spanned by `basis` (closed under products).
std::vector<Matrix> matrix_algebra_radical(const std::vector<Matrix>& basis);

/// Dimension of the commutant {X : X a = a X for every action matrix a}.
std::size_t endomorphism_dimension(const ModuleRep& mod);

/// Absolutely irreducible composition factors, in the order met while
/// splitting. NotSplit when a factor is irreducible but not absolutely so;
/// SplittingFailed when no splitting element is found within budget.
std::vector<ModuleRep> simple_factors(const ModuleRep& mod, const SimplesOptions& opts = {});

/// Multiplicity of each simple of `set` in `mod`.
std::vector<std::size_t> composition_factors(const ModuleRep& mod, const SimpleSet& set, const SimplesOptions& opts = {});

/// True iff every simple has a one-dimensional endomorphism algebra.
bool check_split(const AlgebraPtr& alg, const SimplesOptions& opts = {});

/// Finds a homogeneous basis of a simple module over a graded algebra and
/// returns the module in that basis, minimal degree 0. The grading operator D
/// (with D a - a D = deg(b) a for the matrix a of each basis element b) is
/// solved for, its eigenspaces give the homogeneous blocks and the degrees
/// are propagated block to block. NotGradable on a contradiction.
GradedModuleRep grade_simple(const ModuleRep& simple);

SimpleSet compute_simples(const AlgebraPtr& alg, const SimplesOptions& opts = {});

/// [mod : S<j>] for each simple S as a Laurent polynomial in q. Graded
/// characters in characteristic 0, fingerprints in characteristic p. Checked
/// at q = 1 against composition_factors (OracleMismatch).
GradedClass graded_multiplicities(const GradedModuleRep& mod, const SimpleSet& set, const SimplesOptions& opts = {});

}  // namespace gradec
