#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gradec/scalar.hpp"
#include "gradec/upoly.hpp"

namespace gradec {

/// Dense row-major matrix over a single ring. Elimination routines require a
/// field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring r, std::size_t rows, std::size_t cols);

  static Matrix identity(const Ring& r, std::size_t n);
  static Matrix from_rows(const Ring& r, const std::vector<std::vector<Scalar>>& rows);
  static Matrix column(const Ring& r, const std::vector<Scalar>& v);
  static Matrix from_columns(const Ring& r, std::size_t rows, const std::vector<std::vector<Scalar>>& cols);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Scalar> row(std::size_t i) const;
  std::vector<Scalar> col(std::size_t j) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix transpose() const;
  Matrix map(const std::function<Scalar(const Scalar&)>& f, const Ring& target) const;
  bool is_zero() const;
  bool is_scalar() const;  // c * identity
  Scalar trace() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Scalar& c);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

inline bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

RowEchelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Columns form a basis of {x : a x = 0}.
Matrix kernel(const Matrix& a);
/// Some x with a x = b (b may have several columns), or nothing.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a);
Scalar determinant(const Matrix& a);
/// det(X*I - a), via reduction to Hessenberg form.
UPoly charpoly(const Matrix& a);
UPoly minpoly(const Matrix& a);
Matrix eval_poly(const UPoly& p, const Matrix& a);
Matrix matrix_pow(const Matrix& a, unsigned n);
/// A basis of the column space, as columns.
Matrix column_basis(const Matrix& a);
/// Invertible square matrix whose leading columns are the given independent
/// columns, completed with standard basis vectors.
Matrix extend_to_basis(const Matrix& cols);
/// Flattens a list of equally sized matrices into the rows of one matrix.
Matrix stack_flat(const std::vector<Matrix>& mats);
Matrix unflatten(const std::vector<Scalar>& v, std::size_t rows, std::size_t cols);

}  // namespace gradec
