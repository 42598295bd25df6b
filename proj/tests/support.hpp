#pragma once
// Shorthands shared by the unit tests.
#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "gradec/algebra.hpp"
#include "gradec/character.hpp"
#include "gradec/error.hpp"
#include "gradec/matrix.hpp"
#include "gradec/module.hpp"
#include "gradec/parse.hpp"
#include "gradec/ring.hpp"
#include "gradec/scalar.hpp"

namespace gradec::testing {

inline Scalar sc(const Ring& r, const std::string& text) { return parse_scalar(text, r); }

inline Matrix mat(const Ring& r, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : rows) {
    std::vector<Scalar> v;
    for (const auto& e : row) v.push_back(sc(r, e));
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(r, out);
}

// Upoly from coefficient strings, constant term first.
inline UPoly upoly(const Ring& r, const std::vector<std::string>& coeffs) {
  std::vector<Scalar> c;
  for (const auto& s : coeffs) c.push_back(sc(r, s));
  return UPoly(r, c);
}

inline LaurentPoly qpoly(const std::vector<std::pair<int, long>>& terms, char var = 'q') {
  LaurentPoly p(integers(), var);
  for (auto [e, c] : terms) p.add_term(e, Scalar::from_int(integers(), c));
  return p;
}

// Random matrix with small integer entries.
inline Matrix random_matrix(const Ring& r, std::size_t n, std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Matrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar::from_int(r, d(rng));
  return m;
}

inline Matrix random_invertible(const Ring& r, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(r, n, rng);
    if (!determinant(m).is_zero()) return m;
  }
}

// Fermion algebra written out by hand: x^2 = y^2 = 0, yx = a - xy.
inline AlgebraPtr fermion_algebra(const Ring& base, const std::string& a = "a") {
  auto c = [&](const std::string& t) { return sc(base, t); };
  // basis 1, x, y, xy
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> p;
  p[{1, 2}] = {{3, c("1")}};
  p[{2, 1}] = {{0, c(a)}, {3, c("-1")}};
  p[{2, 3}] = {{2, c(a)}};
  p[{3, 1}] = {{1, c(a)}};
  p[{3, 3}] = {{3, c(a)}};
  return std::make_shared<GradedAlgebra>(make_algebra("F", base, {"1", "x", "y", "xy"}, {0, 1, -1, 0}, "1", p));
}

// The two-dimensional module: x e0 = e1, y e1 = a e0.
inline GradedModuleRep fermion_module(const AlgebraPtr& alg, const Ring& field, const std::string& a = "a") {
  GradedModuleRep m;
  m.name = "V";
  m.algebra = alg;
  m.field = field;
  m.degrees = {0, 1};
  m.action = {Matrix::identity(field, 2), mat(field, {{"0", "0"}, {"1", "0"}}), mat(field, {{"0", a}, {"0", "0"}}),
              mat(field, {{"0", "0"}, {"0", a}})};
  return m;
}

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::SyntaxError;
}

}  // namespace gradec::testing
