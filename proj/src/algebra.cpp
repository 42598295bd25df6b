#include "gradec/algebra.hpp"

#include <algorithm>

#include "gradec/error.hpp"

namespace gradec {

std::size_t GradedAlgebra::index_of(const std::string& label) const {
  auto it = std::find(basis.begin(), basis.end(), label);
  if (it == basis.end()) throw Error(ErrorKind::UnknownName, "no basis element '" + label + "' in " + name);
  return static_cast<std::size_t>(it - basis.begin());
}

std::vector<Scalar> GradedAlgebra::multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  const std::size_t n = dim();
  std::vector<Scalar> out(n, Scalar::zero(x.empty() ? ring : x[0].ring()));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = products[i][j][k];
        if (!c.is_zero()) out[k] = out[k] + xy * coerce(c, xy.ring());
      }
    }
  }
  return out;
}

std::vector<std::size_t> GradedAlgebra::degree_zero_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degrees[i] == 0) out.push_back(i);
  return out;
}

GradedAlgebra make_algebra(std::string name, Ring ring, std::vector<std::string> basis, std::vector<int> degrees,
                           const std::string& unit,
                           const std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>>& products) {
  GradedAlgebra alg;
  alg.name = std::move(name);
  alg.ring = std::move(ring);
  alg.basis = std::move(basis);
  alg.degrees = std::move(degrees);
  const std::size_t n = alg.basis.size();
  if (alg.degrees.size() != n)
    throw Error(ErrorKind::SchemaError, "algebra " + alg.name + ": " + std::to_string(alg.degrees.size()) +
                                            " degrees for " + std::to_string(n) + " basis elements");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (alg.basis[i] == alg.basis[j]) throw Error(ErrorKind::SchemaError, "duplicate basis label " + alg.basis[i]);
  alg.unit = alg.index_of(unit);
  const Scalar zero = Scalar::zero(alg.ring), one = Scalar::one(alg.ring);
  alg.products.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, zero)));
  for (std::size_t i = 0; i < n; ++i) {
    alg.products[alg.unit][i][i] = one;
    alg.products[i][alg.unit][i] = one;
  }
  for (const auto& [ij, row] : products) {
    auto [i, j] = ij;
    if (i == alg.unit || j == alg.unit) {
      // An explicit product with the unit must agree with the unit law; the
      // validator reports it otherwise.
      alg.products[i][j].assign(n, zero);
    }
    for (const auto& [k, c] : row) alg.products[i][j][k] = coerce(c, alg.ring);
  }
  return alg;
}

ValidationReport validate_algebra(const GradedAlgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.dim();
  const auto& b = alg.basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!alg.products[i][j][k].is_zero() && alg.degrees[k] != alg.degrees[i] + alg.degrees[j])
          report.add("product " + b[i] + "*" + b[j] + " has a component on " + b[k] + " of degree " +
                     std::to_string(alg.degrees[k]) + ", expected degree " +
                     std::to_string(alg.degrees[i] + alg.degrees[j]));
  if (alg.degrees[alg.unit] != 0) report.add("unit " + b[alg.unit] + " is not in degree 0");
  const Scalar zero = Scalar::zero(alg.ring);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> e(n, zero);
    e[i] = Scalar::one(alg.ring);
    if (alg.products[alg.unit][i] != e) report.add("unit law fails for " + b[alg.unit] + "*" + b[i]);
    if (alg.products[i][alg.unit] != e) report.add("unit law fails for " + b[i] + "*" + b[alg.unit]);
  }
  // (b_i b_j) b_k = sum_l c_ij^l b_l b_k and b_i (b_j b_k) = sum_l c_jk^l b_i b_l.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> left(n, zero), right(n, zero);
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& a = alg.products[i][j][l];
          if (!a.is_zero())
            for (std::size_t m = 0; m < n; ++m) left[m] = left[m] + a * alg.products[l][k][m];
          const Scalar& c = alg.products[j][k][l];
          if (!c.is_zero())
            for (std::size_t m = 0; m < n; ++m) right[m] = right[m] + c * alg.products[i][l][m];
        }
        if (left != right) report.add("associativity fails at (" + b[i] + ", " + b[j] + ", " + b[k] + ")");
      }
  return report;
}

Matrix left_multiplication(const GradedAlgebra& alg, std::size_t i) {
  const std::size_t n = alg.dim();
  Matrix m(alg.ring, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = alg.products[i][j][k];
  return m;
}

GradedAlgebra map_algebra(const GradedAlgebra& alg, const std::function<Scalar(const Scalar&)>& f, const Ring& target,
                          const std::string& name) {
  GradedAlgebra out = alg;
  out.name = name;
  out.ring = target;
  for (auto& plane : out.products)
    for (auto& row : plane)
      for (auto& c : row) c = f(c);
  return out;
}

bool same_structure(const GradedAlgebra& a, const GradedAlgebra& b) {
  return same_ring(a.ring, b.ring) && a.basis == b.basis && a.degrees == b.degrees && a.unit == b.unit &&
         a.products == b.products;
}

}  // namespace gradec
