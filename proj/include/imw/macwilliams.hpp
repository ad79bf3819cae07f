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
#include <optional>
#include <string>
#include <vector>

#include "imw/enumerators.hpp"
#include "imw/matrix.hpp"
#include "imw/sectors.hpp"

namespace imw {

/// Scalar transform B = M A for multiplicity-free decompositions. Rows are
/// indexed by the twirl sector, columns by the projector sector.
struct MacWilliamsMatrix {
  std::string rep_key;
  std::size_t N = 0;
  std::vector<IrrepLabel> labels;
  std::vector<std::size_t> dims;
  std::vector<int> depths;
  Matrix<Rational> M;
  int basis_convention_version = kBasisConventionVersion;

  std::size_t size() const { return labels.size(); }
};

/// M_{xi,rho} = (1/d_rho) sum Tr(E^dag F^dag E F) over E in sector rho and F in
/// sector xi, with Gram-inverse weights in place of orthonormal bases.
inline MacWilliamsMatrix macwilliams_from_sectors(const SectorSet &set) {
  if (!set.multiplicity_free()) throw MultiplicityPresent("scalar transform needs m = 1; use block_macwilliams");
  const std::size_t n = set.sectors.size();
  MacWilliamsMatrix out;
  out.rep_key = set.rep_key;
  out.N = set.N;
  out.basis_convention_version = set.basis_convention_version;
  out.M = Matrix<Rational>(n, n);
  std::vector<std::vector<Operator>> adj(n), dual(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto &sec = set.sectors[s];
    out.labels.push_back(sec.label);
    out.dims.push_back(sec.dim);
    out.depths.push_back(sec.depth);
    for (const auto &F : sec.copies[0]) adj[s].push_back(adjoint(F, set.metric));
    dual[s] = detail::dual_basis(sec, 0);
  }
  for (std::size_t xi = 0; xi < n; ++xi)
    for (std::size_t rho = 0; rho < n; ++rho) {
      Rational acc;
      for (std::size_t a = 0; a < set.sectors[rho].dim; ++a)
        for (std::size_t c = 0; c < set.sectors[xi].dim; ++c)
          acc += trace_product(adj[rho][a] * adj[xi][c], dual[rho][a] * dual[xi][c]);
      out.M(xi, rho) = acc / Rational(static_cast<long>(set.sectors[rho].dim));
    }
  return out;
}

/// Wigner 6j symbol {j j k1; j j k2} by the Racah single sum. Rational for this pattern.
inline Rational su2_sixj_symmetric(int two_j, int k1, int k2) {
  if (two_j < 0 || k1 < 0 || k2 < 0 || k1 > two_j || k2 > two_j) {
    throw TriangleViolation("{j j k1; j j k2} needs 0 <= k1, k2 <= 2j");
  }
  auto fact = [](long n) { return Rational(factorial(static_cast<unsigned long>(n))); };
  auto delta_sq = [&](int k) { return fact(two_j - k) * fact(k) * fact(k) / fact(two_j + k + 1); };
  const long a1 = two_j + k1, a2 = two_j + k2;
  const long b1 = 2L * two_j, b2 = two_j + k1 + k2;
  Rational sum;
  for (long z = std::max(a1, a2); z <= std::min(b1, b2); ++z) {
    Rational den = fact(z - a1) * fact(z - a1) * fact(z - a2) * fact(z - a2) * fact(b1 - z) * fact(b2 - z) *
                   fact(b2 - z);
    Rational term = fact(z + 1) / den;
    sum += z % 2 ? -term : term;
  }
  return delta_sq(k1) * delta_sq(k2) * sum;
}

/// Scalar by which the twirl of sector k2 acts on sector k1:
/// (-1)^{2j+k1+k2} (2 k2 + 1) {j j k1; j j k2}.
inline Rational su2_twirl_scalar_closed(int two_j, int k1, int k2) {
  Rational v = Rational(2 * k2 + 1) * su2_sixj_symmetric(two_j, k1, k2);
  return (two_j + k1 + k2) % 2 ? -v : v;
}

/// M_{k1 k2} = (-1)^{2j+k1+k2} (2 k1 + 1) {j j k1; j j k2}.
inline MacWilliamsMatrix su2_macwilliams_closed(int two_j) {
  MacWilliamsMatrix out;
  out.rep_key = "su2:" + std::to_string(two_j);
  out.N = two_j + 1;
  const int n = two_j + 1;
  out.M = Matrix<Rational>(n, n);
  for (int k = 0; k < n; ++k) {
    out.labels.push_back(IrrepLabel::su2(2 * k));
    out.dims.push_back(2 * k + 1);
    out.depths.push_back(k);
  }
  for (int k1 = 0; k1 < n; ++k1)
    for (int k2 = 0; k2 < n; ++k2) {
      Rational v = Rational(2 * k1 + 1) * su2_sixj_symmetric(two_j, k1, k2);
      out.M(k1, k2) = (two_j + k1 + k2) % 2 ? -v : v;
    }
  return out;
}

inline Matrix<Rational> dims_diagonal(const MacWilliamsMatrix &m) {
  std::vector<Rational> d;
  for (auto x : m.dims) d.emplace_back(static_cast<long>(x));
  return Matrix<Rational>::diagonal(d);
}

/// M D M^T == D, exact.
inline bool verify_weighted_orthogonality(const MacWilliamsMatrix &m) {
  auto D = dims_diagonal(m);
  return m.M * D * m.M.transpose() == D;
}

/// Every entry of row 0 equals 1/N.
inline bool verify_first_row(const MacWilliamsMatrix &m) {
  for (std::size_t c = 0; c < m.M.cols(); ++c)
    if (!(m.M(0, c) == Rational(1, static_cast<long>(m.N)))) return false;
  return true;
}

/// Scalar by which the Gram-weighted twirl of sector `twirl` acts on every basis
/// operator of sector `target`, or nullopt if the action is not scalar.
inline std::optional<Rational> twirl_scalar_action(const SectorSet &set, std::size_t twirl, std::size_t target) {
  const auto &tw = set.sectors[twirl];
  std::vector<Operator> adj, dual = detail::dual_basis(tw, 0);
  for (const auto &F : tw.copies[0]) adj.push_back(adjoint(F, set.metric));
  std::optional<Rational> scalar;
  for (const auto &X : set.sectors[target].copies[0]) {
    Operator y(set.N, set.N);
    for (std::size_t a = 0; a < tw.dim; ++a) y = y + adj[a] * X * dual[a];
    // Read off the coefficient on the largest-support entry, then compare.
    std::size_t i0 = 0, j0 = 0;
    X.for_each([&](std::size_t i, std::size_t j, const Rational &) {
      i0 = i;
      j0 = j;
    });
    Rational c = y.at(i0, j0) / X.at(i0, j0);
    if (!(y == X.scaled(c))) return std::nullopt;
    if (scalar && !(*scalar == c)) return std::nullopt;
    scalar = c;
  }
  return scalar;
}

/// Position (sector, copy a, copy b) in the vectorized block enumerators.
struct BlockIndex {
  std::size_t sector = 0;
  int a = 0, b = 0;
  friend bool operator==(const BlockIndex &, const BlockIndex &) = default;
};

/// Block transform vec(B) = M vec(A) with blocks expressed in the copy bases
/// of the sectors (copy a carries norm copy_norms[a]).
///
/// M couples all sectors: the twirl of sector rho does not preserve sector rho,
/// so the matrix is dense across sectors just like the scalar transform.
struct BlockMacWilliams {
  std::string rep_key;
  std::size_t N = 0;
  std::vector<IrrepLabel> labels;
  std::vector<int> multiplicities;
  std::vector<std::size_t> dims;
  std::vector<int> depths;
  std::vector<std::vector<Rational>> copy_norms;
  std::vector<BlockIndex> index;
  Matrix<Rational> M;
  int basis_convention_version = kBasisConventionVersion;

  std::size_t offset(std::size_t sector) const {
    for (std::size_t k = 0; k < index.size(); ++k)
      if (index[k].sector == sector) return k;
    throw Error("sector index out of range");
  }
  /// D_(xi,a,b) = d_xi n_a n_b.
  std::vector<Rational> weights() const {
    std::vector<Rational> w;
    for (const auto &ix : index)
      w.push_back(Rational(static_cast<long>(dims[ix.sector])) * copy_norms[ix.sector][ix.a] *
                  copy_norms[ix.sector][ix.b]);
    return w;
  }
};

inline std::vector<BlockIndex> block_index(const SectorSet &set) {
  std::vector<BlockIndex> idx;
  for (std::size_t s = 0; s < set.sectors.size(); ++s)
    for (int a = 0; a < set.sectors[s].multiplicity; ++a)
      for (int b = 0; b < set.sectors[s].multiplicity; ++b) idx.push_back({s, a, b});
  return idx;
}

/// Entry ((rho,mu,nu),(xi,a,b)) = <T^b_xi, Twirl_{rho,mu,nu}(T^a_xi)> / (n_a n_b G^xi_00),
/// where T^a_xi is the highest-weight operator of copy a and
/// Twirl_{rho,mu,nu}(X) = sum_i F^mu_i^dag X Ftilde^nu_i. Schur's lemma makes the
/// highest-weight pairing sufficient.
inline BlockMacWilliams block_macwilliams(const SectorSet &set) {
  BlockMacWilliams out;
  out.rep_key = set.rep_key;
  out.N = set.N;
  out.basis_convention_version = set.basis_convention_version;
  for (const auto &s : set.sectors) {
    out.labels.push_back(s.label);
    out.multiplicities.push_back(s.multiplicity);
    out.dims.push_back(s.dim);
    out.depths.push_back(s.depth);
    out.copy_norms.push_back(s.copy_norms);
  }
  out.index = block_index(set);
  const std::size_t n = out.index.size();
  out.M = Matrix<Rational>(n, n);

  struct Top {
    std::size_t col_base;
    int m;
    std::vector<Operator> T, Tadj;
  };
  std::vector<Top> tops;
  for (std::size_t s = 0; s < set.sectors.size(); ++s) {
    Top t;
    t.col_base = out.offset(s);
    t.m = set.sectors[s].multiplicity;
    for (const auto &copy : set.sectors[s].copies) {
      t.T.push_back(copy[0]);
      t.Tadj.push_back(adjoint(copy[0], set.metric));
    }
    tops.push_back(std::move(t));
  }

  for (std::size_t rho = 0; rho < set.sectors.size(); ++rho) {
    const auto &sr = set.sectors[rho];
    const std::size_t row_base = out.offset(rho);
    const int m = sr.multiplicity;
    std::vector<std::vector<Operator>> duals;
    for (int nu = 0; nu < m; ++nu) duals.push_back(detail::dual_basis(sr, nu));
    for (std::size_t i = 0; i < sr.dim; ++i) {
      std::vector<Operator> left, right;
      for (int mu = 0; mu < m; ++mu) left.push_back(adjoint(sr.copies[mu][i], set.metric));
      for (int nu = 0; nu < m; ++nu) right.push_back(duals[nu][i]);
      for (const auto &t : tops) {
        std::vector<Operator> Y, Z;  // Y[mu*tm + a], Z[nu*tm + b]
        for (int mu = 0; mu < m; ++mu)
          for (int a = 0; a < t.m; ++a) Y.push_back(left[mu] * t.T[a]);
        for (int nu = 0; nu < m; ++nu)
          for (int b = 0; b < t.m; ++b) Z.push_back(right[nu] * t.Tadj[b]);
        for (int mu = 0; mu < m; ++mu)
          for (int nu = 0; nu < m; ++nu)
            for (int a = 0; a < t.m; ++a)
              for (int b = 0; b < t.m; ++b) {
                const Operator &y = Y[mu * t.m + a];
                const Operator &z = Z[nu * t.m + b];
                if (y.is_zero() || z.is_zero()) continue;
                out.M(row_base + mu * m + nu, t.col_base + a * t.m + b) += trace_product(y, z);
              }
      }
    }
  }
  for (std::size_t s = 0; s < set.sectors.size(); ++s) {
    const auto &sec = set.sectors[s];
    const std::size_t base = out.offset(s);
    for (int a = 0; a < sec.multiplicity; ++a)
      for (int b = 0; b < sec.multiplicity; ++b) {
        Rational scale = sec.copy_norms[a] * sec.copy_norms[b] * sec.gram(0, 0);
        for (std::size_t r = 0; r < n; ++r) out.M(r, base + a * sec.multiplicity + b) /= scale;
      }
  }
  return out;
}

/// Block M collapsed to a scalar transform; requires every multiplicity to be 1.
inline MacWilliamsMatrix scalar_from_block(const BlockMacWilliams &b) {
  if (std::any_of(b.multiplicities.begin(), b.multiplicities.end(), [](int m) { return m != 1; })) {
    throw MultiplicityPresent("block transform has multiplicities");
  }
  MacWilliamsMatrix m;
  m.rep_key = b.rep_key;
  m.N = b.N;
  m.labels = b.labels;
  m.dims = b.dims;
  m.depths = b.depths;
  m.M = b.M;
  m.basis_convention_version = b.basis_convention_version;
  return m;
}

/// M D M^T == D with D_(xi,a,b) = d_xi n_a n_b.
inline bool verify_weighted_orthogonality(const BlockMacWilliams &b) {
  auto D = Matrix<Rational>::diagonal(b.weights());
  return b.M * D * b.M.transpose() == D;
}

/// Flattens per-sector blocks in BlockMacWilliams index order.
inline std::vector<Rational> vectorize_blocks(const std::vector<Matrix<Rational>> &blocks) {
  std::vector<Rational> v;
  for (const auto &blk : blocks) v.insert(v.end(), blk.data().begin(), blk.data().end());
  return v;
}

inline std::vector<Rational> apply_transform(const Matrix<Rational> &M, const std::vector<Rational> &v) {
  if (M.cols() != v.size()) throw DimensionMismatch("apply_transform shapes");
  std::vector<Rational> out(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!M(i, j).is_zero() && !v[j].is_zero()) out[i].add_product(M(i, j), v[j]);
  return out;
}

}  // namespace imw
