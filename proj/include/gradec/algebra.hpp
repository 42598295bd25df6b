#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gradec/matrix.hpp"

namespace gradec {

/// List of located violations; empty means valid.
struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
};

/// Finite-rank Z-graded algebra over `ring`, given by structure constants on a
/// homogeneous basis.
struct GradedAlgebra {
  std::string name;
  Ring ring;
  std::vector<std::string> basis;
  std::vector<int> degrees;
  std::size_t unit = 0;
  // products[i][j][k]: coefficient of basis[k] in basis[i] * basis[j].
  std::vector<std::vector<std::vector<Scalar>>> products;

  std::size_t dim() const { return basis.size(); }
  std::size_t index_of(const std::string& label) const;  // throws UnknownName
  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  std::vector<std::size_t> degree_zero_basis() const;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Builds an algebra from sparse products: products[{i, j}] = {k: c}. Products
/// with the unit are filled in; any other missing product is zero.
GradedAlgebra make_algebra(std::string name, Ring ring, std::vector<std::string> basis, std::vector<int> degrees,
                           const std::string& unit,
                           const std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>>& products);

/// Checks associativity on basis triples, the unit law and homogeneity of
/// every structure constant.
ValidationReport validate_algebra(const GradedAlgebra& alg);

/// Matrix of left multiplication by basis[i] on the algebra itself.
Matrix left_multiplication(const GradedAlgebra& alg, std::size_t i);

/// The same algebra with every structure constant mapped into `target`.
GradedAlgebra map_algebra(const GradedAlgebra& alg, const std::function<Scalar(const Scalar&)>& f, const Ring& target,
                          const std::string& name);

bool same_structure(const GradedAlgebra& a, const GradedAlgebra& b);

}  // namespace gradec
