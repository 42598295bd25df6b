#pragma once

#include <string>
#include <vector>

#include "gradec/algebra.hpp"

namespace gradec {

/// Finite-dimensional module over field ⊗ algebra, one matrix per algebra
/// basis element. Matrices act on column vectors: action[m] * e_s is the image
/// of the s-th basis vector under basis element m.
struct ModuleRep {
  std::string name;
  AlgebraPtr algebra;
  Ring field;
  std::vector<Matrix> action;

  std::size_t dim() const { return action.empty() ? 0 : action[0].rows(); }
  /// Action of an algebra element given by coordinates (in any ring that
  /// coerces into the field).
  Matrix act(const std::vector<Scalar>& element) const;
  /// Action of a product of basis elements, computed as a matrix product.
  Matrix act_word(const std::vector<std::size_t>& word) const;
};

/// A module with a homogeneous basis; degrees[r] is the degree of basis
/// vector r.
struct GradedModuleRep : ModuleRep {
  std::vector<int> degrees;
};

ValidationReport validate_module(const ModuleRep& mod);
/// Also checks that every action matrix is homogeneous of its basis degree.
ValidationReport validate_module(const GradedModuleRep& mod);

/// M<j>: all degrees raised by j.
GradedModuleRep shift(const GradedModuleRep& mod, int j);
GradedModuleRep direct_sum(const GradedModuleRep& a, const GradedModuleRep& b);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
ModuleRep forget_grading(const GradedModuleRep& mod);
/// Coefficients moved into a larger field along the canonical embedding.
GradedModuleRep extend_scalars(const GradedModuleRep& mod, const Ring& field);

/// New basis e'_r = scale[r] * e_r; keeps the module graded.
GradedModuleRep rescale_basis(const GradedModuleRep& mod, const std::vector<Scalar>& scale);
/// Action in the basis given by the columns of `basis` (invertible).
ModuleRep change_basis(const ModuleRep& mod, const Matrix& basis);

/// Restriction to an invariant subspace spanned by the columns of `sub`.
ModuleRep submodule(const ModuleRep& mod, const Matrix& sub);
/// Action on the quotient by an invariant subspace.
ModuleRep quotient(const ModuleRep& mod, const Matrix& sub);

/// The left regular module, graded by the basis degrees. The algebra must be
/// over a field.
GradedModuleRep regular_module(const AlgebraPtr& alg);

}  // namespace gradec
