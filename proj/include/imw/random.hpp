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

#include <random>

#include "imw/enumerators.hpp"
#include "imw/rep.hpp"

namespace imw {

/// Small random rationals p/q with |p| <= num_bound and 1 <= q <= den_bound.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, int num_bound = 3, int den_bound = 3)
      : gen_(seed), num_(-num_bound, num_bound), den_(1, den_bound) {}

  Rational next() { return Rational(num_(gen_), den_(gen_)); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Matrix<Rational> matrix(std::size_t rows, std::size_t cols) {
    Matrix<Rational> m(rows, cols);
    for (auto &v : m.data()) v = next();
    return m;
  }

  /// Random matrix of full column rank.
  Matrix<Rational> full_rank(std::size_t rows, std::size_t cols) {
    while (true) {
      auto m = matrix(rows, cols);
      if (rank(m) == cols) return m;
    }
  }

 private:
  std::mt19937_64 gen_;
  std::uniform_int_distribution<int> num_, den_;
};

/// Rank-K orthogonal projector P = V (V^T H V)^{-1} V^T H onto the column span
/// of a random V, self-adjoint under the metric H of the rep.
inline CodeProjector random_projector(const Rep &rep, int K, RationalSampler &rng) {
  if (K < 1 || static_cast<std::size_t>(K) > rep.dim) throw Error("rank out of range");
  const auto V = rng.full_rank(rep.dim, K);
  const auto H = Matrix<Rational>::diagonal(rep.metric);
  const auto VtH = V.transpose() * H;
  const auto P = V * invert(VtH * V) * VtH;
  return make_code_projector(rep, P, "random-rank-" + std::to_string(K));
}

inline Matrix<Rational> random_operator(const Rep &rep, RationalSampler &rng) { return rng.matrix(rep.dim, rep.dim); }

/// The sector re-expressed in another basis of each copy: F'_i = sum_j R_ij F_j
/// applied identically to every copy, with the Gram matrices transformed to match.
inline Sector recombine_basis(const Sector &s, const Matrix<Rational> &R, const std::vector<Rational> &metric) {
  if (R.rows() != s.dim || R.cols() != s.dim) throw DimensionMismatch("recombination size");
  Sector out = s;
  for (auto &copy : out.copies) {
    std::vector<Operator> fresh;
    for (std::size_t i = 0; i < s.dim; ++i) {
      Operator acc(copy[0].rows(), copy[0].cols());
      for (std::size_t j = 0; j < s.dim; ++j)
        if (!R(i, j).is_zero()) acc = lincomb(Rational(1), acc, R(i, j), copy[j]);
      fresh.push_back(std::move(acc));
    }
    copy = std::move(fresh);
  }
  out.gram = Matrix<Rational>(s.dim, s.dim);
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) out.gram(i, j) = hs_inner(out.copies[0][i], out.copies[0][j], metric);
  return out;
}

}  // namespace imw
