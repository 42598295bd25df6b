#include "gradec/module.hpp"

#include <algorithm>

#include "gradec/error.hpp"

namespace gradec {

Matrix ModuleRep::act(const std::vector<Scalar>& element) const {
  Matrix m(field, dim(), dim());
  for (std::size_t k = 0; k < element.size(); ++k) {
    if (element[k].is_zero()) continue;
    m = m + action[k] * coerce(element[k], field);
  }
  return m;
}

Matrix ModuleRep::act_word(const std::vector<std::size_t>& word) const {
  Matrix m = Matrix::identity(field, dim());
  for (std::size_t k : word) m = m * action.at(k);
  return m;
}

ValidationReport validate_module(const ModuleRep& mod) {
  ValidationReport report;
  const GradedAlgebra& alg = *mod.algebra;
  const std::size_t n = alg.dim();
  if (mod.action.size() != n) {
    report.add("module " + mod.name + " gives " + std::to_string(mod.action.size()) + " action matrices for " +
               std::to_string(n) + " basis elements");
    return report;
  }
  const std::size_t d = mod.dim();
  for (std::size_t m = 0; m < n; ++m)
    if (mod.action[m].rows() != d || mod.action[m].cols() != d) {
      report.add("action of " + alg.basis[m] + " is not " + std::to_string(d) + "x" + std::to_string(d));
      return report;
    }
  if (!coerces_to(alg.ring, mod.field)) {
    report.add("coefficients of " + alg.name + " (" + alg.ring->to_string() + ") do not embed in " +
               mod.field->to_string());
    return report;
  }
  if (mod.action[alg.unit] != Matrix::identity(mod.field, d)) report.add("unit " + alg.basis[alg.unit] + " does not act as the identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = mod.action[i] * mod.action[j];
      Matrix rhs = mod.act(alg.products[i][j]);
      if (lhs != rhs) {
        // Locate the first differing entry.
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t s = 0; s < d; ++s)
            if (lhs(r, s) != rhs(r, s)) {
              report.add("representation law fails at (" + alg.basis[i] + ", " + alg.basis[j] + ") entry (" +
                         std::to_string(r) + "," + std::to_string(s) + "): " + to_string(lhs(r, s)) +
                         " != " + to_string(rhs(r, s)));
              r = d;
              break;
            }
      }
    }
  return report;
}

ValidationReport validate_module(const GradedModuleRep& mod) {
  ValidationReport report;
  if (mod.degrees.size() != mod.dim()) {
    report.add("module " + mod.name + " has " + std::to_string(mod.degrees.size()) + " degrees for dimension " +
               std::to_string(mod.dim()));
    return report;
  }
  report = validate_module(static_cast<const ModuleRep&>(mod));
  const GradedAlgebra& alg = *mod.algebra;
  for (std::size_t m = 0; m < mod.action.size() && m < alg.dim(); ++m) {
    const Matrix& a = mod.action[m];
    if (a.rows() != mod.dim()) continue;
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t s = 0; s < a.cols(); ++s)
        if (!a(r, s).is_zero() && mod.degrees[r] != mod.degrees[s] + alg.degrees[m])
          report.add("action of " + alg.basis[m] + " (degree " + std::to_string(alg.degrees[m]) +
                     ") is not homogeneous: entry (" + std::to_string(r) + "," + std::to_string(s) + ") maps degree " +
                     std::to_string(mod.degrees[s]) + " to degree " + std::to_string(mod.degrees[r]));
  }
  return report;
}

GradedModuleRep shift(const GradedModuleRep& mod, int j) {
  GradedModuleRep out = mod;
  for (auto& d : out.degrees) d += j;
  return out;
}

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

}  // namespace

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  if (!same_structure(*a.algebra, *b.algebra)) throw Error(ErrorKind::AlgebraMismatch, "direct sum over different algebras");
  if (!same_ring(a.field, b.field)) throw Error(ErrorKind::FieldMismatch, "direct sum over different fields");
  ModuleRep out;
  out.name = a.name + "+" + b.name;
  out.algebra = a.algebra;
  out.field = a.field;
  for (std::size_t m = 0; m < a.action.size(); ++m) out.action.push_back(block_diag(a.action[m], b.action[m]));
  return out;
}

GradedModuleRep direct_sum(const GradedModuleRep& a, const GradedModuleRep& b) {
  GradedModuleRep out;
  static_cast<ModuleRep&>(out) = direct_sum(static_cast<const ModuleRep&>(a), static_cast<const ModuleRep&>(b));
  out.degrees = a.degrees;
  out.degrees.insert(out.degrees.end(), b.degrees.begin(), b.degrees.end());
  return out;
}

ModuleRep forget_grading(const GradedModuleRep& mod) { return static_cast<const ModuleRep&>(mod); }

GradedModuleRep extend_scalars(const GradedModuleRep& mod, const Ring& field) {
  GradedModuleRep out = mod;
  out.field = field;
  for (auto& a : out.action) a = a.map([&](const Scalar& s) { return coerce(s, field); }, field);
  return out;
}

GradedModuleRep rescale_basis(const GradedModuleRep& mod, const std::vector<Scalar>& scale) {
  if (scale.size() != mod.dim()) throw Error(ErrorKind::NonSquare, "rescaling vector has the wrong length");
  std::vector<Scalar> s, inv;
  for (const auto& x : scale) {
    s.push_back(coerce(x, mod.field));
    inv.push_back(inverse(s.back()));
  }
  GradedModuleRep out = mod;
  for (auto& a : out.action)
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!a(r, c).is_zero()) a(r, c) = a(r, c) * s[c] * inv[r];
  return out;
}

ModuleRep change_basis(const ModuleRep& mod, const Matrix& basis) {
  const Matrix inv = inverse(basis);
  ModuleRep out = mod;
  for (auto& a : out.action) a = inv * a * basis;
  return out;
}

ModuleRep submodule(const ModuleRep& mod, const Matrix& sub) {
  ModuleRep out;
  out.name = mod.name + "/sub";
  out.algebra = mod.algebra;
  out.field = mod.field;
  for (const auto& a : mod.action) {
    auto coords = solve(sub, a * sub);
    if (!coords) throw Error(ErrorKind::NoSolution, "subspace is not invariant");
    out.action.push_back(*coords);
  }
  return out;
}

ModuleRep quotient(const ModuleRep& mod, const Matrix& sub) {
  const std::size_t k = sub.cols(), d = mod.dim();
  const Matrix basis = extend_to_basis(sub);
  const Matrix inv = inverse(basis);
  ModuleRep out;
  out.name = mod.name + "/quot";
  out.algebra = mod.algebra;
  out.field = mod.field;
  for (const auto& a : mod.action) {
    Matrix conj = inv * a * basis;
    for (std::size_t r = k; r < d; ++r)
      for (std::size_t c = 0; c < k; ++c)
        if (!conj(r, c).is_zero()) throw Error(ErrorKind::NoSolution, "subspace is not invariant");
    out.action.push_back(conj.block(k, k, d - k, d - k));
  }
  return out;
}

GradedModuleRep regular_module(const AlgebraPtr& alg) {
  if (!alg->ring->is_field())
    throw Error(ErrorKind::UnsupportedField, "regular module needs an algebra over a field, got " + alg->ring->to_string());
  GradedModuleRep out;
  out.name = alg->name + ".regular";
  out.algebra = alg;
  out.field = alg->ring;
  out.degrees = alg->degrees;
  for (std::size_t i = 0; i < alg->dim(); ++i) out.action.push_back(left_multiplication(*alg, i));
  return out;
}

}  // namespace gradec
