#include "gradec/matrix.hpp"

#include <algorithm>

#include "gradec/error.hpp"

namespace gradec {

Matrix::Matrix(Ring r, std::size_t rows, std::size_t cols)
    : ring_(std::move(r)), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ring_)) {}

Matrix Matrix::identity(const Ring& r, std::size_t n) {
  Matrix m(r, n, n);
  const Scalar one = Scalar::one(r);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

Matrix Matrix::from_rows(const Ring& r, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(r, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw Error(ErrorKind::NonSquare, "ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = same_ring(rows[i][j].ring(), r) ? rows[i][j] : coerce(rows[i][j], r);
  }
  return m;
}

Matrix Matrix::column(const Ring& r, const std::vector<Scalar>& v) {
  Matrix m(r, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::from_columns(const Ring& r, std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(r, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return std::vector<Scalar>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix m(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::map(const std::function<Scalar(const Scalar&)>& f, const Ring& target) const {
  Matrix m(target, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = f(data_[k]);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_scalar() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j) {
        if ((*this)(i, j) != (*this)(0, 0)) return false;
      } else if (!(*this)(i, j).is_zero()) {
        return false;
      }
    }
  return true;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(ring_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = t + (*this)(i, i);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::NonSquare, "matrix shapes differ in addition");
  Matrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::NonSquare, "matrix shapes differ in subtraction");
  Matrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::NonSquare, "matrix shapes differ in product");
  Matrix m(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) = m(i, j) + x * y;
      }
    }
  return m;
}

Matrix operator*(const Matrix& a, const Scalar& c) {
  Matrix m = a;
  for (auto& x : m.data_) x = x * c;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon rref(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix kernel(const Matrix& a) {
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(a.cols(), Scalar::zero(a.ring()));
    v[f] = Scalar::one(a.ring());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(a.ring(), a.cols(), basis);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::NonSquare, "solve: row counts differ");
  Matrix aug(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  RowEchelon e = rref(aug);
  for (auto p : e.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.ring(), a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, a.cols() + j);
  return x;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
  auto x = solve(a, Matrix::identity(a.ring(), a.rows()));
  if (!x || rank(a) != a.rows()) throw Error(ErrorKind::DivisionByZero, "matrix is singular");
  return *x;
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
  Matrix m = a;
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(a.ring());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar::zero(a.ring());
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    const Scalar inv = inverse(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

UPoly charpoly(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NonSquare, "characteristic polynomial of a non-square matrix");
  const Ring& r = a.ring();
  const std::size_t n = a.rows();
  Matrix h = a;
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const Scalar inv = inverse(h(m, m - 1));
    for (std::size_t k = m + 1; k < n; ++k) {
      if (h(k, m - 1).is_zero()) continue;
      const Scalar u = h(k, m - 1) * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (!h(m, j).is_zero()) h(k, j) = h(k, j) - u * h(m, j);
      for (std::size_t j = 0; j < n; ++j)
        if (!h(j, k).is_zero()) h(j, m) = h(j, m) + u * h(j, k);
    }
  }
  // p[m] is the characteristic polynomial of the leading m x m block.
  std::vector<UPoly> p;
  p.push_back(UPoly::constant(Scalar::one(r)));
  const UPoly x = UPoly::x(r);
  for (std::size_t m = 1; m <= n; ++m) {
    UPoly next = (x - UPoly::constant(h(m - 1, m - 1))) * p[m - 1];
    Scalar t = Scalar::one(r);
    for (std::size_t i = 1; i < m; ++i) {
      t = t * h(m - i, m - i - 1);
      if (t.is_zero()) break;
      next = next - p[m - i - 1] * (t * h(m - i - 1, m - 1));
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

UPoly minpoly(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NonSquare, "minimal polynomial of a non-square matrix");
  const Ring& r = a.ring();
  const std::size_t n = a.rows();
  UPoly result = UPoly::constant(Scalar::one(r));
  for (std::size_t s = 0; s < n; ++s) {
    // Skip vectors already annihilated by the current candidate.
    Matrix e(r, n, 1);
    e(s, 0) = Scalar::one(r);
    if (s > 0 && (eval_poly(result, a) * e).is_zero()) continue;
    std::vector<std::vector<Scalar>> krylov{e.col(0)};
    Matrix v = e;
    while (true) {
      v = a * v;
      Matrix k = Matrix::from_columns(r, n, krylov);
      auto coeffs = solve(k, v);
      if (coeffs) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < krylov.size(); ++i) c.push_back(-(*coeffs)(i, 0));
        c.push_back(Scalar::one(r));
        result = lcm(result, UPoly(r, c));
        break;
      }
      krylov.push_back(v.col(0));
    }
  }
  return result;
}

Matrix eval_poly(const UPoly& p, const Matrix& a) {
  const Ring& r = a.ring();
  Matrix acc(r, a.rows(), a.cols());
  const Matrix id = Matrix::identity(r, a.rows());
  for (int i = p.degree(); i >= 0; --i) acc = acc * a + id * coerce(p.coeffs()[i], r);
  return acc;
}

Matrix matrix_pow(const Matrix& a, unsigned n) {
  Matrix result = Matrix::identity(a.ring(), a.rows());
  Matrix base = a;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Matrix column_basis(const Matrix& a) {
  RowEchelon e = rref(a);
  std::vector<std::vector<Scalar>> cols;
  for (auto p : e.pivots) cols.push_back(a.col(p));
  return Matrix::from_columns(a.ring(), a.rows(), cols);
}

Matrix extend_to_basis(const Matrix& cols) {
  const std::size_t n = cols.rows();
  Matrix all(cols.ring(), n, cols.cols() + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols.cols(); ++j) all(i, j) = cols(i, j);
    all(i, cols.cols() + i) = Scalar::one(cols.ring());
  }
  Matrix basis = column_basis(all);
  if (basis.cols() != n) throw Error(ErrorKind::NoSolution, "columns do not span");
  for (std::size_t j = 0; j < cols.cols(); ++j)
    if (basis.col(j) != cols.col(j)) throw Error(ErrorKind::NoSolution, "columns are not independent");
  return basis;
}

Matrix stack_flat(const std::vector<Matrix>& mats) {
  if (mats.empty()) return Matrix();
  const std::size_t len = mats[0].rows() * mats[0].cols();
  Matrix m(mats[0].ring(), mats.size(), len);
  for (std::size_t k = 0; k < mats.size(); ++k)
    for (std::size_t i = 0; i < mats[k].rows(); ++i)
      for (std::size_t j = 0; j < mats[k].cols(); ++j) m(k, i * mats[k].cols() + j) = mats[k](i, j);
  return m;
}

Matrix unflatten(const std::vector<Scalar>& v, std::size_t rows, std::size_t cols) {
  Matrix m(v.at(0).ring(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

}  // namespace gradec
