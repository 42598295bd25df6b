#pragma once

#include <string>
#include <vector>

#include "gradec/simples.hpp"
#include "gradec/specialize.hpp"

namespace gradec {

/// A module over KH pushed down to LH: the lattice found by
/// clear_denominators and its entrywise image under theta.
struct ModuleReduction {
  GradedModuleRep lattice;
  RescalingRecord rescaling;
  GradedModuleRep reduced;
};

ModuleReduction reduce_module(const GradedModuleRep& mod, const Specialization& theta, const AlgebraPtr& target_algebra);

/// Class of the reduction of `mod` in the basis of `set`, coefficients in
/// N[q, q^-1].
GradedClass decompose_module(const GradedModuleRep& mod, const Specialization& theta, const SimpleSet& set,
                             const SimplesOptions& opts = {});

/// Rows: KH simples sorted like simple sets (dimension, then ungraded
/// character). Columns: the simples of LH.
struct GradedDecompMatrix {
  std::string theta;
  std::vector<std::string> rows, cols;
  std::vector<std::size_t> row_dims, col_dims;
  std::vector<std::vector<LaurentPoly>> entries;
  std::string normalization = "every simple module of LH is graded with minimal degree 0";
  std::uint64_t seed = 0;
  std::vector<RescalingRecord> rescalings;            // per row
  std::vector<std::vector<std::size_t>> ungraded;     // composition-series counts per row
};

GradedDecompMatrix decomposition_matrix(const Specialization& theta, const std::vector<GradedModuleRep>& kh_simples,
                                        const SimpleSet& set, const SimplesOptions& opts = {});

/// Entries at q = 1, checked against the composition-series counts
/// (OracleMismatch).
std::vector<std::vector<long>> evaluate_q1(const GradedDecompMatrix& d);

/// Product over N[q, q^-1] of an (m x n) and an (n x k) matrix.
std::vector<std::vector<LaurentPoly>> multiply(const std::vector<std::vector<LaurentPoly>>& a,
                                               const std::vector<std::vector<LaurentPoly>>& b);

struct DiagramReport {
  std::vector<std::string> lines;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Fingerprint of `mod` pushed through theta, against the fingerprint of
/// `reduced`.
DiagramReport verify_reduction(const GradedModuleRep& mod, const Specialization& theta, const GradedModuleRep& reduced,
                               int depth = 2);

/// For each module: theta applied to the K-side fingerprint against the
/// fingerprint of the reduction and against the fingerprint of the class of
/// the reduction in terms of simples.
DiagramReport verify_diagram(const Specialization& theta, const std::vector<GradedModuleRep>& mods, const SimpleSet& set,
                             const SimplesOptions& opts = {});

struct FactorizationReport {
  GradedDecompMatrix d_theta;        // KH -> LH
  GradedDecompMatrix d_theta_prime;  // KH -> L'H
  GradedDecompMatrix d_phi;          // LH -> L'H
  std::vector<std::vector<LaurentPoly>> product;  // d_theta * d_phi
};

/// Rows are indexed by source simples, so the identity checked is
/// D_theta' = D_theta * D_phi. FactorizationFailure names the first differing
/// entry.
FactorizationReport factorization_check(const SpecializationTower& tower, const AlgebraPtr& algebra,
                                        const std::vector<GradedModuleRep>& kh_simples, const SimplesOptions& opts = {});

}  // namespace gradec
