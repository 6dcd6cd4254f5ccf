#pragma once

#include "ghecke/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghecke {

/// Dense row-major matrix over an exact field (Rational or GaussianRational).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors; `rows` fixes the shape when `cols` is empty.
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  const std::vector<T>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!ghecke::is_zero(x)) return false;
    return true;
  }
  bool is_identity() const { return square() && *this == identity(rows_); }
  /// True when the matrix is c * I for some c.
  bool is_scalar() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j) {
          if ((*this)(i, i) != (*this)(0, 0)) return false;
        } else if (!ghecke::is_zero((*this)(i, j))) {
          return false;
        }
      }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (ghecke::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Canonical text key; equal matrices give equal keys.
  std::string key() const {
    std::string s = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
    for (const auto& x : data_) {
      s += to_string(x);
      s += ',';
    }
    return s;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RMatrix = Matrix<Rational>;
using CMatrix = Matrix<GaussianRational>;

CMatrix complexify(const RMatrix& m);

template <class T>
Matrix<T> power(const Matrix<T>& m, std::size_t e) {
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> base = m;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    T inv = T(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      T f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> a) {
  return rref(a).size();
}

/// Basis of {x : a x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> a) {
  auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(a.cols(), T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Columns spanning {x : a x = 0}, as an (a.cols() x nullity) matrix.
template <class T>
Matrix<T> kernel_matrix(const Matrix<T>& a) {
  return Matrix<T>::from_columns(nullspace(a), a.cols());
}

/// Some solution of a x = b, or nullopt when inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols(), T(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

/// Some X with a X = b, or nullopt.
template <class T>
std::optional<Matrix<T>> solve_columns(const Matrix<T>& a, const Matrix<T>& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve_columns: shape mismatch");
  Matrix<T> aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() >= a.cols()) return std::nullopt;
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_columns(a, Matrix<T>::identity(a.rows()));
}

template <class T>
T determinant(Matrix<T> a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  T det(1);
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    T inv = T(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      T f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Coefficients c_0..c_n (low degree first) of det(t I - a), via Faddeev-LeVerrier.
template <class T>
std::vector<T> characteristic_polynomial(const Matrix<T>& a) {
  if (!a.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    T tr = (a * m).trace();
    c[n - k] = -tr / T(static_cast<long>(k));
  }
  return c;
}

/// Matrix r with basis * r = op * basis, for a subspace (columns of basis) stable under op.
template <class T>
Matrix<T> restrict_operator(const Matrix<T>& op, const Matrix<T>& basis) {
  auto r = solve_columns(basis, op * basis);
  if (!r) throw std::logic_error("restrict_operator: subspace is not invariant");
  return *r;
}

/// Rows spanning the annihilator {y : y^T u = 0 for every column u}.
template <class T>
Matrix<T> left_annihilator(const Matrix<T>& u) {
  auto ann = nullspace(u.transpose());
  Matrix<T> out(ann.size(), u.rows());
  for (std::size_t i = 0; i < ann.size(); ++i)
    for (std::size_t j = 0; j < u.rows(); ++j) out(i, j) = ann[i][j];
  return out;
}

/// Column-space basis extracted from the pivot columns.
template <class T>
Matrix<T> column_basis(const Matrix<T>& a) {
  Matrix<T> r = a;
  auto pivots = rref(r);
  Matrix<T> out(a.rows(), pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, pivots[j]);
  return out;
}

/// Horizontal concatenation [a | b].
template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  Matrix<T> out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

/// Flattened entries as one long vector (row-major).
template <class T>
std::vector<T> flatten(const Matrix<T>& m) {
  return m.data();
}

template <class T>
Matrix<T> unflatten(const std::vector<T>& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

/// Rank of the span of a family of equally-shaped matrices.
template <class T>
std::size_t span_rank(const std::vector<Matrix<T>>& family) {
  if (family.empty()) return 0;
  const std::size_t len = family.front().rows() * family.front().cols();
  Matrix<T> stacked(family.size(), len);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < len; ++j) stacked(i, j) = family[i].data()[j];
  return rank(std::move(stacked));
}

/// Rank of a rational matrix by fraction-free (Bareiss) elimination over the integers.
std::size_t rank_fraction_free(const RMatrix& a);

std::string to_string(const RMatrix& m);
std::string to_string(const CMatrix& m);

}  // namespace ghecke
