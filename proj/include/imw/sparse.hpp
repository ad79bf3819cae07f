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

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "imw/matrix.hpp"

namespace imw {

/// Compressed-row matrix. Operators on L(V) are mostly sparse in the weight
/// basis, which keeps sector generation and trace sums cheap.
template <class T>
class SparseMatrix {
 public:
  using Triplet = std::tuple<std::size_t, std::size_t, T>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), start_(rows + 1, 0) {}

  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> t) {
    std::sort(t.begin(), t.end(), [](const Triplet &a, const Triplet &b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    SparseMatrix m(rows, cols);
    std::size_t k = 0;
    while (k < t.size()) {
      auto [i, j, v] = t[k];
      if (i >= rows || j >= cols) throw DimensionMismatch("triplet out of range");
      ++k;
      while (k < t.size() && std::get<0>(t[k]) == i && std::get<1>(t[k]) == j) v += std::get<2>(t[k++]);
      if (!imw::is_zero(v)) {
        m.col_.push_back(static_cast<std::uint32_t>(j));
        m.val_.push_back(std::move(v));
        ++m.start_[i + 1];
      }
    }
    for (std::size_t i = 0; i < rows; ++i) m.start_[i + 1] += m.start_[i];
    return m;
  }

  static SparseMatrix from_dense(const Matrix<T> &d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (imw::is_zero(d(i, j))) continue;
        m.col_.push_back(static_cast<std::uint32_t>(j));
        m.val_.push_back(d(i, j));
      }
      m.start_[i + 1] = m.col_.size();
    }
    return m;
  }

  static SparseMatrix unit(std::size_t n, std::size_t i, std::size_t j, const T &v = T(1)) {
    return from_triplets(n, n, {Triplet{i, j, v}});
  }

  Matrix<T> to_dense() const {
    Matrix<T> d(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = start_[i]; k < start_[i + 1]; ++k) d(i, col_[k]) = val_[k];
    return d;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return val_.size(); }
  bool is_zero() const { return val_.empty(); }

  std::size_t row_begin(std::size_t i) const { return start_[i]; }
  std::size_t row_end(std::size_t i) const { return start_[i + 1]; }
  std::size_t col(std::size_t k) const { return col_[k]; }
  const T &val(std::size_t k) const { return val_[k]; }

  /// Entry lookup by binary search within the row; returns nullptr for structural zeros.
  const T *find(std::size_t i, std::size_t j) const {
    auto b = col_.begin() + start_[i], e = col_.begin() + start_[i + 1];
    auto it = std::lower_bound(b, e, static_cast<std::uint32_t>(j));
    if (it == e || *it != j) return nullptr;
    return &val_[it - col_.begin()];
  }
  T at(std::size_t i, std::size_t j) const {
    const T *p = find(i, j);
    return p ? *p : T{};
  }

  template <class F>
  void for_each(F &&f) const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = start_[i]; k < start_[i + 1]; ++k) f(i, std::size_t{col_[k]}, val_[k]);
  }

  SparseMatrix transpose() const {
    std::vector<Triplet> t;
    t.reserve(nnz());
    for_each([&](std::size_t i, std::size_t j, const T &v) { t.emplace_back(j, i, v); });
    return from_triplets(cols_, rows_, std::move(t));
  }

  template <class S>
  SparseMatrix scaled(const S &s) const {
    if (imw::is_zero(s)) return SparseMatrix(rows_, cols_);
    SparseMatrix m = *this;
    for (auto &v : m.val_) v *= s;
    return m;
  }

  friend bool operator==(const SparseMatrix &a, const SparseMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.start_ == b.start_ && a.col_ == b.col_ &&
           a.val_ == b.val_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::size_t> start_{0};
  std::vector<std::uint32_t> col_;
  std::vector<T> val_;
};

/// a*X + b*Y.
template <class T>
SparseMatrix<T> lincomb(const T &a, const SparseMatrix<T> &x, const T &b, const SparseMatrix<T> &y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionMismatch("lincomb shapes");
  std::vector<typename SparseMatrix<T>::Triplet> t;
  t.reserve(x.nnz() + y.nnz());
  if (!is_zero(a)) x.for_each([&](std::size_t i, std::size_t j, const T &v) { t.emplace_back(i, j, a * v); });
  if (!is_zero(b)) y.for_each([&](std::size_t i, std::size_t j, const T &v) { t.emplace_back(i, j, b * v); });
  return SparseMatrix<T>::from_triplets(x.rows(), x.cols(), std::move(t));
}

template <class T>
SparseMatrix<T> operator+(const SparseMatrix<T> &x, const SparseMatrix<T> &y) {
  return lincomb(T(1), x, T(1), y);
}
template <class T>
SparseMatrix<T> operator-(const SparseMatrix<T> &x, const SparseMatrix<T> &y) {
  return lincomb(T(1), x, T(-1), y);
}

template <class T>
SparseMatrix<T> operator*(const SparseMatrix<T> &a, const SparseMatrix<T> &b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("sparse product shapes");
  std::vector<typename SparseMatrix<T>::Triplet> t;
  std::vector<T> acc(b.cols());
  std::vector<char> used(b.cols(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    touched.clear();
    for (std::size_t ka = a.row_begin(i); ka < a.row_end(i); ++ka) {
      std::size_t k = a.col(ka);
      for (std::size_t kb = b.row_begin(k); kb < b.row_end(k); ++kb) {
        std::size_t j = b.col(kb);
        if (!used[j]) {
          used[j] = 1;
          acc[j] = a.val(ka) * b.val(kb);
          touched.push_back(j);
        } else {
          acc[j] += a.val(ka) * b.val(kb);
        }
      }
    }
    for (std::size_t j : touched) {
      used[j] = 0;
      if (!is_zero(acc[j])) t.emplace_back(i, j, std::move(acc[j]));
    }
  }
  return SparseMatrix<T>::from_triplets(a.rows(), b.cols(), std::move(t));
}

template <class T>
SparseMatrix<T> commutator(const SparseMatrix<T> &a, const SparseMatrix<T> &b) {
  return a * b - b * a;
}

/// Tr(A B) without forming the product.
template <class T>
T trace_product(const SparseMatrix<T> &a, const SparseMatrix<T> &b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionMismatch("trace_product shapes");
  T s{};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = a.row_begin(i); k < a.row_end(i); ++k) {
      const T *v = b.find(a.col(k), i);
      if (v) s += a.val(k) * *v;
    }
  return s;
}

/// Adjoint with respect to the diagonal metric h: (X^dagger)_{ij} = X_{ji} h_j / h_i.
inline SparseMatrix<Rational> adjoint(const SparseMatrix<Rational> &x, const std::vector<Rational> &h) {
  std::vector<SparseMatrix<Rational>::Triplet> t;
  t.reserve(x.nnz());
  x.for_each([&](std::size_t i, std::size_t j, const Rational &v) { t.emplace_back(j, i, v * h[i] / h[j]); });
  return SparseMatrix<Rational>::from_triplets(x.cols(), x.rows(), std::move(t));
}

/// Hilbert-Schmidt inner product Tr(X^dagger Y) under the diagonal metric h.
inline Rational hs_inner(const SparseMatrix<Rational> &x, const SparseMatrix<Rational> &y,
                         const std::vector<Rational> &h) {
  Rational s;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = x.row_begin(i); k < x.row_end(i); ++k) {
      const Rational *v = y.find(i, x.col(k));
      if (v) s += x.val(k) * *v * h[i] / h[x.col(k)];
    }
  return s;
}

/// Dense-times-sparse, result dense.
template <class A, class B>
Matrix<product_t<A, B>> operator*(const Matrix<A> &d, const SparseMatrix<B> &s) {
  if (d.cols() != s.rows()) throw DimensionMismatch("dense*sparse shapes");
  Matrix<product_t<A, B>> out(d.rows(), s.cols());
  for (std::size_t k = 0; k < s.rows(); ++k)
    for (std::size_t p = s.row_begin(k); p < s.row_end(k); ++p) {
      std::size_t j = s.col(p);
      for (std::size_t i = 0; i < d.rows(); ++i)
        if (!is_zero(d(i, k))) out(i, j) += d(i, k) * s.val(p);
    }
  return out;
}

/// Sparse-times-dense, result dense.
template <class A, class B>
Matrix<product_t<A, B>> operator*(const SparseMatrix<A> &s, const Matrix<B> &d) {
  if (s.cols() != d.rows()) throw DimensionMismatch("sparse*dense shapes");
  Matrix<product_t<A, B>> out(s.rows(), d.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t p = s.row_begin(i); p < s.row_end(i); ++p) {
      std::size_t k = s.col(p);
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (!is_zero(d(k, j))) out(i, j) += s.val(p) * d(k, j);
    }
  return out;
}

}  // namespace imw
