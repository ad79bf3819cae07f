// Copyright 2026 The imw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "imw/radical.hpp"
#include "imw/rational.hpp"

namespace imw {

/// Dense row-major matrix over an exact (or floating) scalar type.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T> &d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T> &data() const { return data_; }
  std::vector<T> &data() { return data_; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    require_square("trace");
    T t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto &x : data_)
      if (!imw::is_zero(x)) return false;
    return true;
  }

  Matrix &operator+=(const Matrix &o) {
    same_shape(o, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix &operator-=(const Matrix &o) {
    same_shape(o, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  template <class S>
  Matrix &scale(const S &s) {
    for (auto &x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void require_square(const char *what) const {
    if (!square()) throw DimensionMismatch(std::string(what) + " needs a square matrix");
  }
  void same_shape(const Matrix &o, const char *what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch(std::string("shape mismatch in ") + what);
    }
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class A, class B>
using product_t = decltype(std::declval<A>() * std::declval<B>());

template <class A, class B>
Matrix<product_t<A, B>> operator*(const Matrix<A> &a, const Matrix<B> &b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shapes");
  Matrix<product_t<A, B>> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (is_zero(b(k, j))) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  return c;
}

template <class U, class T, class F>
Matrix<U> map_matrix(const Matrix<T> &m, F &&f) {
  Matrix<U> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  return out;
}

inline Matrix<Radical> to_radical(const Matrix<Rational> &m) {
  return map_matrix<Radical>(m, [](const Rational &x) { return Radical(x); });
}
/// Throws NonRationalResult if any entry carries an irrational part.
inline Matrix<Rational> to_rational(const Matrix<Radical> &m) {
  return map_matrix<Rational>(m, [](const Radical &x) { return x.to_rational(); });
}
template <class T>
Matrix<double> to_double(const Matrix<T> &m) {
  return map_matrix<double>(m, [](const T &x) { return imw::to_double(x); });
}

/// Tr(x^T y) for real matrices, i.e. the Hilbert-Schmidt inner product.
template <class A, class B>
product_t<A, B> hs_inner(const Matrix<A> &x, const Matrix<B> &y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionMismatch("hs_inner shapes");
  product_t<A, B> s{};
  for (std::size_t i = 0; i < x.data().size(); ++i) {
    if (is_zero(x.data()[i]) || is_zero(y.data()[i])) continue;
    s += x.data()[i] * y.data()[i];
  }
  return s;
}

/// In-place reduced row echelon form. Returns pivot columns.
inline std::vector<std::size_t> rref_in_place(Matrix<Rational> &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix<Rational> m) { return rref_in_place(m).size(); }

/// Basis of the null space; empty iff m is injective.
inline std::vector<std::vector<Rational>> rref_kernel(Matrix<Rational> m) {
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Matrix<Rational> invert(const Matrix<Rational> &m) {
  m.require_square("invert");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix<Rational> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Determinant by Gaussian elimination over the field.
template <class T>
T determinant(Matrix<T> m);

template <>
inline Rational determinant(Matrix<Rational> m) {
  m.require_square("determinant");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Cofactor expansion; only used for radical blocks of size <= 3.
template <>
inline Radical determinant(Matrix<Radical> m) {
  m.require_square("determinant");
  const std::size_t n = m.rows();
  if (n == 0) return Radical(1);
  if (n == 1) return m(0, 0);
  Radical det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix<Radical> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    Radical term = m(0, c) * determinant(minor);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

/// Exact positive semidefiniteness of a symmetric matrix: every principal
/// minor is nonnegative. Leading minors alone do not suffice for singular blocks.
template <class T>
bool is_psd_exact(const Matrix<T> &m) {
  m.require_square("is_psd_exact");
  const std::size_t n = m.rows();
  if (n > 16) throw TooLarge("principal-minor PSD test limited to 16x16");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(m(i, j) == m(j, i))) return false;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    Matrix<T> sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = m(idx[a], idx[b]);
    if (determinant(sub).sign() < 0) return false;
  }
  return true;
}

}  // namespace imw
