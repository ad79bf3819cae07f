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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "imw/lie.hpp"
#include "imw/rep.hpp"
#include "imw/sparse.hpp"

namespace imw {

using Operator = SparseMatrix<Rational>;

/// One isotypic component of the conjugation action on L(V).
///
/// copies[a][i] is the i-th basis operator of copy a. Every copy is produced
/// from its highest-weight operator by the same lowering words, so
/// copies[a][i] -> copies[b][i] is an intertwiner. The basis of copy 0 has Gram
/// matrix `gram`; copy a has Gram matrix copy_norms[a] * gram, and distinct
/// copies are orthogonal.
struct Sector {
  IrrepLabel label;
  int multiplicity = 0;
  std::size_t dim = 0;
  int depth = 0;
  std::vector<std::vector<Operator>> copies;
  Matrix<Rational> gram;
  std::vector<Rational> copy_norms;
  std::vector<std::pair<int, int>> words;  // (parent index, lowering generator); words[0] = (-1,-1)
  std::vector<std::vector<int>> weights;

  /// Gram inverse, with a fast path for the diagonal Gram produced here.
  Matrix<Rational> gram_inverse() const {
    bool diag = true;
    for (std::size_t i = 0; i < gram.rows() && diag; ++i)
      for (std::size_t j = 0; j < gram.cols(); ++j)
        if (i != j && !gram(i, j).is_zero()) {
          diag = false;
          break;
        }
    if (!diag) return invert(gram);
    Matrix<Rational> inv(gram.rows(), gram.cols());
    for (std::size_t i = 0; i < gram.rows(); ++i) inv(i, i) = Rational(1) / gram(i, i);
    return inv;
  }
  bool gram_is_diagonal() const {
    for (std::size_t i = 0; i < gram.rows(); ++i)
      for (std::size_t j = 0; j < gram.cols(); ++j)
        if (i != j && !gram(i, j).is_zero()) return false;
    return true;
  }
};

/// Full decomposition of L(V) for one representation.
struct SectorSet {
  std::string rep_key;
  IrrepLabel rep_label;
  std::size_t N = 0;
  std::vector<Rational> metric;
  std::vector<Sector> sectors;
  int basis_convention_version = kBasisConventionVersion;

  bool multiplicity_free() const {
    return std::all_of(sectors.begin(), sectors.end(), [](const Sector &s) { return s.multiplicity == 1; });
  }
  std::size_t index_of(const IrrepLabel &l) const {
    for (std::size_t i = 0; i < sectors.size(); ++i)
      if (sectors[i].label == l) return i;
    throw Error("no sector with label " + l.str());
  }
  std::vector<int> depths() const {
    std::vector<int> d;
    for (const auto &s : sectors) d.push_back(s.depth);
    return d;
  }
  std::vector<IrrepLabel> labels() const {
    std::vector<IrrepLabel> l;
    for (const auto &s : sectors) l.push_back(s.label);
    return l;
  }
};

namespace detail {

inline std::vector<int> diff(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

inline std::map<std::uint64_t, Rational> flatten(const Operator &x) {
  std::map<std::uint64_t, Rational> v;
  x.for_each([&](std::size_t i, std::size_t j, const Rational &c) { v[i * x.cols() + j] = c; });
  return v;
}

}  // namespace detail

/// Decomposes the conjugation action of `rep` on L(V) into isotypic sectors.
inline SectorSet conjugation_sectors(const Rep &rep) {
  const std::size_t N = rep.dim;
  const int r = rep.rank();
  std::vector<Operator> e, f;
  for (int k = 0; k < r; ++k) {
    e.push_back(Operator::from_dense(rep.raising[k]));
    f.push_back(Operator::from_dense(rep.lowering[k]));
  }

  std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> units;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) units[detail::diff(rep.weights[i], rep.weights[j])].emplace_back(i, j);

  SectorSet out;
  out.rep_key = rep.key;
  out.rep_label = rep.label;
  out.N = N;
  out.metric = rep.metric;

  for (const auto &[omega, cells] : units) {
    if (std::any_of(omega.begin(), omega.end(), [](int a) { return a < 0; })) continue;
    // Columns: matrix units of weight omega. Rows: entries of [e_k, X] for every k.
    std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> row_of;
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
    auto add = [&](int k, std::size_t a, std::size_t b, std::size_t col, const Rational &v) {
      auto key = std::make_tuple(k, a, b);
      auto it = row_of.find(key);
      std::size_t row = it != row_of.end() ? it->second : (row_of[key] = row_of.size());
      entries.emplace_back(row, col, v);
    };
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto [i, j] = cells[c];
      for (int k = 0; k < r; ++k) {
        for (std::size_t l = 0; l < N; ++l) {
          if (const Rational *v = e[k].find(l, i)) add(k, l, j, c, *v);
          if (const Rational *v = e[k].find(j, l)) add(k, i, l, c, -*v);
        }
      }
    }
    Matrix<Rational> A(std::max<std::size_t>(row_of.size(), 1), cells.size());
    for (auto &[row, col, v] : entries) A(row, col) += v;
    auto kernel = rref_kernel(std::move(A));
    if (kernel.empty()) continue;

    std::vector<Operator> tops;
    for (const auto &vec : kernel) {
      std::vector<Operator::Triplet> t;
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (!vec[c].is_zero()) t.emplace_back(cells[c].first, cells[c].second, vec[c]);
      tops.push_back(Operator::from_triplets(N, N, std::move(t)));
    }
    for (std::size_t a = 0; a < tops.size(); ++a)
      for (std::size_t b = 0; b < a; ++b) {
        Rational c = hs_inner(tops[b], tops[a], rep.metric) / hs_inner(tops[b], tops[b], rep.metric);
        if (!c.is_zero()) tops[a] = lincomb(Rational(1), tops[a], -c, tops[b]);
      }

    Sector s;
    s.label = IrrepLabel{rep.label.q, omega};
    s.multiplicity = static_cast<int>(tops.size());
    const std::size_t expected = weyl_dimension(s.label);

    // Copy 0: breadth-first lowering words with per-weight independence tests.
    std::vector<Operator> basis{tops[0]};
    s.words.emplace_back(-1, -1);
    s.weights.push_back(omega);
    std::map<std::vector<int>, detail::Echelon<std::uint64_t>> spaces;
    spaces[omega].insert(detail::flatten(tops[0]));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (int k = 0; k < r; ++k) {
        Operator y = commutator(f[k], basis[i]);
        if (y.is_zero()) continue;
        auto wt = s.weights[i];
        wt[k] -= 2;
        if (k > 0) wt[k - 1] += 1;
        if (k + 1 < r) wt[k + 1] += 1;
        if (!spaces[wt].insert(detail::flatten(y))) continue;
        basis.push_back(std::move(y));
        s.words.emplace_back(static_cast<int>(i), k);
        s.weights.push_back(wt);
      }
      if (basis.size() > expected) throw InternalInconsistency("sector " + s.label.str() + " too large");
    }
    if (basis.size() != expected) throw InternalInconsistency("sector " + s.label.str() + " has wrong dimension");
    s.dim = expected;

    s.copies.push_back(std::move(basis));
    for (std::size_t a = 1; a < tops.size(); ++a) {
      std::vector<Operator> copy{tops[a]};
      for (std::size_t i = 1; i < s.dim; ++i) {
        auto [parent, k] = s.words[i];
        copy.push_back(commutator(f[k], copy[parent]));
      }
      s.copies.push_back(std::move(copy));
    }

    // Orthogonalize inside weight spaces with copy-0 coefficients, applied to all copies.
    auto &c0 = s.copies[0];
    for (std::size_t i = 0; i < s.dim; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        if (s.weights[j] != s.weights[i]) continue;
        Rational c = hs_inner(c0[j], c0[i], rep.metric) / hs_inner(c0[j], c0[j], rep.metric);
        if (c.is_zero()) continue;
        for (auto &copy : s.copies) copy[i] = lincomb(Rational(1), copy[i], -c, copy[j]);
      }
    s.gram = Matrix<Rational>(s.dim, s.dim);
    for (std::size_t i = 0; i < s.dim; ++i) s.gram(i, i) = hs_inner(c0[i], c0[i], rep.metric);
    for (const auto &copy : s.copies) s.copy_norms.push_back(hs_inner(copy[0], copy[0], rep.metric) / s.gram(0, 0));
    s.depth = adjoint_depth(s.label);
    out.sectors.push_back(std::move(s));
  }

  std::stable_sort(out.sectors.begin(), out.sectors.end(),
                   [](const Sector &a, const Sector &b) { return sector_order_less(a.label, b.label); });
  std::size_t total = 0;
  for (const auto &s : out.sectors) total += s.multiplicity * s.dim;
  if (total != N * N) {
    throw InternalInconsistency("sector dimensions sum to " + std::to_string(total) + ", expected " +
                                std::to_string(N * N));
  }
  return out;
}

/// Exact structural checks on a sector set; returns an empty string on success
/// or a description of the first failure.
inline std::string check_sector_invariants(const SectorSet &set, const Rep &rep) {
  std::vector<Operator> e, f;
  for (int k = 0; k < rep.rank(); ++k) {
    e.push_back(Operator::from_dense(rep.raising[k]));
    f.push_back(Operator::from_dense(rep.lowering[k]));
  }
  for (const auto &s : set.sectors) {
    const std::string tag = "sector " + s.label.str() + ": ";
    for (std::size_t a = 0; a < s.copies.size(); ++a) {
      for (const auto &ek : e)
        if (!commutator(ek, s.copies[a][0]).is_zero()) return tag + "highest-weight operator not annihilated";
      for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j) {
          Rational g = hs_inner(s.copies[a][i], s.copies[a][j], set.metric);
          if (!(g == s.copy_norms[a] * s.gram(i, j))) return tag + "copy Gram not proportional";
        }
      for (std::size_t b = 0; b < a; ++b)
        for (std::size_t i = 0; i < s.dim; ++i)
          if (!hs_inner(s.copies[a][i], s.copies[b][i], set.metric).is_zero()) return tag + "copies not orthogonal";
    }
  }
  for (std::size_t x = 0; x < set.sectors.size(); ++x)
    for (std::size_t y = 0; y < x; ++y)
      for (const auto &cx : set.sectors[x].copies)
        for (const auto &cy : set.sectors[y].copies)
          if (!hs_inner(cx.front(), cy.front(), set.metric).is_zero() ||
              !hs_inner(cx.back(), cy.back(), set.metric).is_zero())
            return "sectors " + set.sectors[x].label.str() + " and " + set.sectors[y].label.str() + " not orthogonal";
  return {};
}

/// Checks that F^a_i -> F^b_i commutes with every generator of the conjugation action.
inline bool check_copy_alignment(const Sector &s, const SectorSet &set, const Rep &rep) {
  if (s.multiplicity < 2) return true;
  std::vector<Operator> gens;
  for (int k = 0; k < rep.rank(); ++k) {
    gens.push_back(Operator::from_dense(rep.raising[k]));
    gens.push_back(Operator::from_dense(rep.lowering[k]));
    gens.push_back(Operator::from_dense(rep.cartan[k]));
  }
  const auto ginv = s.gram_inverse();
  // Coordinates of g.F^a_i in copy a; must match those of copy 0 up to the copy norm.
  for (const auto &g : gens)
    for (std::size_t i = 0; i < s.dim; ++i)
      for (std::size_t a = 1; a < s.copies.size(); ++a) {
        Operator y0 = commutator(g, s.copies[0][i]);
        Operator ya = commutator(g, s.copies[a][i]);
        Operator rebuilt(set.N, set.N);
        for (std::size_t j = 0; j < s.dim; ++j) {
          Rational c = hs_inner(s.copies[0][j], y0, set.metric) * ginv(j, j);
          if (!c.is_zero()) rebuilt = lincomb(Rational(1), rebuilt, c, s.copies[a][j]);
        }
        if (!(rebuilt == ya)) return false;
      }
  return true;
}

}  // namespace imw
