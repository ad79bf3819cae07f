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

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "imw/lie.hpp"
#include "imw/matrix.hpp"
#include "imw/sparse.hpp"

namespace imw {

/// Bumped whenever basis or ordering conventions change; stored with cached data.
inline constexpr int kBasisConventionVersion = 1;

/// Representation of su(q) on a weight basis v_0..v_{N-1}.
///
/// Basis vectors are mutually orthogonal but not normalized: metric[i] is
/// <v_i, v_i>. In this rescaled basis every generator has rational entries, and
/// the adjoint of an operator is H^{-1} X^T H with H = diag(metric). The
/// orthonormal basis is e_i = v_i / sqrt(metric[i]).
struct Rep {
  IrrepLabel label;
  std::string key;  // stable identifier used for caches and provenance
  std::size_t dim = 0;
  std::vector<Matrix<Rational>> raising, lowering, cartan;
  std::vector<std::vector<int>> weights;  // Dynkin weight of each basis vector
  std::vector<Rational> metric;
  std::vector<std::vector<int>> occupations;  // symmetric powers only

  int rank() const { return label.q - 1; }

  /// Operator matrix in the orthonormal basis: X_ij * sqrt(h_i / h_j).
  Matrix<Radical> to_orthonormal(const Matrix<Rational> &x) const {
    Matrix<Radical> out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (!x(i, j).is_zero()) out(i, j) = Radical::sqrt(metric[i] / metric[j]) * x(i, j);
    return out;
  }
  /// Inverse of to_orthonormal: X_ij * sqrt(h_j / h_i).
  Matrix<Radical> from_orthonormal(const Matrix<Radical> &x) const {
    Matrix<Radical> out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (!x(i, j).is_zero()) out(i, j) = x(i, j) * Radical::sqrt(metric[j] / metric[i]);
    return out;
  }
  /// Coordinates in the rescaled basis of a vector given in the orthonormal basis.
  std::vector<Radical> vector_from_orthonormal(const std::vector<Radical> &c) const {
    std::vector<Radical> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] * Radical::sqrt(Rational(1) / metric[i]);
    return out;
  }

  /// H^{-1} X^T H.
  Matrix<Rational> adjoint(const Matrix<Rational> &x) const {
    Matrix<Rational> out(x.cols(), x.rows());
    for (std::size_t i = 0; i < x.cols(); ++i)
      for (std::size_t j = 0; j < x.rows(); ++j)
        if (!x(j, i).is_zero()) out(i, j) = x(j, i) * metric[j] / metric[i];
    return out;
  }

  /// Basis index of an occupation vector (symmetric powers only).
  std::size_t index_of_occupation(const std::vector<int> &a) const {
    for (std::size_t i = 0; i < occupations.size(); ++i)
      if (occupations[i] == a) return i;
    throw InvalidSpec("occupation vector not in basis");
  }
};

namespace detail {

inline void occupation_vectors(int n, int q, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
  if (static_cast<int>(cur.size()) == q - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = n; v >= 0; --v) {
    cur.push_back(v);
    occupation_vectors(n - v, q, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Sym^n(C^q). Basis S_a is the unnormalized sum over all arrangements with
/// occupation a, so <S_a, S_a> = n!/prod(a_i!) and
///   e_i S_a = (a_i + 1) S_{a + eps_i - eps_{i+1}},
///   f_i S_a = (a_{i+1} + 1) S_{a - eps_i + eps_{i+1}}.
/// The order is descending lexicographic, so index 0 is the highest weight.
inline Rep sym_power_rep(int q, int n) {
  if (q < 2 || n < 0) throw Error("sym_power_rep needs q >= 2, n >= 0");
  Rep r;
  std::vector<int> top(q - 1, 0);
  top[0] = n;
  r.label = IrrepLabel::su(q, top);
  r.key = "sym:" + std::to_string(q) + ":" + std::to_string(n);
  std::vector<int> cur;
  detail::occupation_vectors(n, q, cur, r.occupations);
  r.dim = r.occupations.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < r.dim; ++i) index[r.occupations[i]] = i;
  const mpz_class nfact = factorial(n);
  for (const auto &a : r.occupations) {
    mpz_class den = 1;
    for (int x : a) den *= factorial(x);
    r.metric.push_back(Rational(nfact, den));
    std::vector<int> w(q - 1);
    for (int i = 0; i + 1 < q; ++i) w[i] = a[i] - a[i + 1];
    r.weights.push_back(w);
  }
  for (int k = 0; k + 1 < q; ++k) {
    Matrix<Rational> e(r.dim, r.dim), f(r.dim, r.dim), h(r.dim, r.dim);
    for (std::size_t c = 0; c < r.dim; ++c) {
      const auto &a = r.occupations[c];
      h(c, c) = a[k] - a[k + 1];
      if (a[k + 1] > 0) {
        auto b = a;
        ++b[k];
        --b[k + 1];
        e(index[b], c) = a[k] + 1;
      }
      if (a[k] > 0) {
        auto b = a;
        --b[k];
        ++b[k + 1];
        f(index[b], c) = a[k + 1] + 1;
      }
    }
    r.raising.push_back(std::move(e));
    r.lowering.push_back(std::move(f));
    r.cartan.push_back(std::move(h));
  }
  return r;
}

/// Spin-j irrep, basis |m>, m = j..-j, realized as Sym^{2j}(C^2).
inline Rep su2_irrep(int two_j) {
  if (two_j < 0) throw Error("two_j must be nonnegative");
  Rep r = sym_power_rep(2, two_j);
  r.label = IrrepLabel::su2(two_j);
  r.key = "su2:" + std::to_string(two_j);
  return r;
}

namespace detail {

using SparseVec = std::map<std::uint64_t, Rational>;

/// Tensor product of exterior powers Lambda^{i}(C^q); each factor has the
/// orthonormal basis of sorted i-subsets.
struct WedgeAmbient {
  int q = 0;
  std::vector<std::vector<std::vector<int>>> factor_basis;  // per factor, list of subsets
  std::vector<std::map<std::vector<int>, std::size_t>> factor_index;
  std::vector<std::uint64_t> stride;

  WedgeAmbient(int q_, const std::vector<int> &wedge_degrees) : q(q_) {
    for (int deg : wedge_degrees) {
      std::vector<std::vector<int>> subsets;
      for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
        if (__builtin_popcount(mask) != deg) continue;
        std::vector<int> s;
        for (int i = 0; i < q; ++i)
          if (mask >> i & 1) s.push_back(i);
        subsets.push_back(s);
      }
      std::sort(subsets.begin(), subsets.end());
      std::map<std::vector<int>, std::size_t> idx;
      for (std::size_t i = 0; i < subsets.size(); ++i) idx[subsets[i]] = i;
      factor_basis.push_back(std::move(subsets));
      factor_index.push_back(std::move(idx));
    }
    stride.assign(factor_basis.size(), 1);
    for (int f = static_cast<int>(factor_basis.size()) - 2; f >= 0; --f)
      stride[f] = stride[f + 1] * factor_basis[f + 1].size();
  }

  std::vector<std::size_t> digits(std::uint64_t index) const {
    std::vector<std::size_t> d(factor_basis.size());
    for (std::size_t f = 0; f < d.size(); ++f) {
      d[f] = index / stride[f];
      index %= stride[f];
    }
    return d;
  }

  /// Applies E_{k,k+1} (raise) or E_{k+1,k} (lower) as a derivation.
  SparseVec apply(const SparseVec &v, int k, bool raise) const {
    SparseVec out;
    const int from = raise ? k + 1 : k, to = raise ? k : k + 1;
    for (const auto &[index, c] : v) {
      auto d = digits(index);
      for (std::size_t f = 0; f < d.size(); ++f) {
        const auto &s = factor_basis[f][d[f]];
        bool has_from = std::find(s.begin(), s.end(), from) != s.end();
        bool has_to = std::find(s.begin(), s.end(), to) != s.end();
        if (!has_from || has_to) continue;
        auto t = s;
        // Adjacent indices keep the sorted order, so no sign appears.
        std::replace(t.begin(), t.end(), from, to);
        std::sort(t.begin(), t.end());
        std::uint64_t j = index + (factor_index[f].at(t) - d[f]) * stride[f];
        Rational &slot = out[j];
        slot += c;
        if (slot.is_zero()) out.erase(j);
      }
    }
    return out;
  }

  std::vector<int> weight(std::uint64_t index) const {
    std::vector<int> w(q - 1, 0);
    auto d = digits(index);
    for (std::size_t f = 0; f < d.size(); ++f)
      for (int x : factor_basis[f][d[f]]) {
        if (x < q - 1) ++w[x];
        if (x > 0) --w[x - 1];
      }
    return w;
  }
};

inline Rational dot(const SparseVec &a, const SparseVec &b) {
  Rational s;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) ++i;
    else if (j->first < i->first) ++j;
    else {
      s.add_product(i->second, j->second);
      ++i;
      ++j;
    }
  }
  return s;
}

inline void axpy(SparseVec &y, const Rational &a, const SparseVec &x) {
  for (const auto &[k, v] : x) {
    Rational &slot = y[k];
    slot.add_product(a, v);
    if (slot.is_zero()) y.erase(k);
  }
}

/// Incremental echelon form used for independence tests of sparse vectors.
template <class Key>
class Echelon {
 public:
  using Vec = std::map<Key, Rational>;
  /// Reduces v against the stored rows; stores it and returns true if independent.
  bool insert(Vec v) {
    for (const auto &[pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      Rational f = -it->second;
      for (const auto &[k, x] : row) {
        Rational &slot = v[k];
        slot.add_product(f, x);
        if (slot.is_zero()) v.erase(k);
      }
    }
    if (v.empty()) return false;
    Key pivot = v.begin()->first;
    Rational inv = Rational(1) / v.begin()->second;
    for (auto &[k, x] : v) x *= inv;
    // Keep rows fully reduced on the new pivot.
    for (auto &[p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      Rational f = -it->second;
      for (const auto &[k, x] : v) {
        Rational &slot = row[k];
        slot.add_product(f, x);
        if (slot.is_zero()) row.erase(k);
      }
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::pair<Key, Vec>> rows_;
};

}  // namespace detail

/// Irrep of SU(q) spanned by lowering words applied to the highest-weight
/// vector of (Lambda^1)^{a_1} (x) (Lambda^2)^{a_2} (x) ... .
inline Rep build_irrep_by_highest_weight(const IrrepLabel &target, int degree_bound = 8) {
  const int q = target.q;
  std::vector<int> degrees;
  for (int i = 0; i < q - 1; ++i)
    for (int c = 0; c < target.dynkin[i]; ++c) degrees.push_back(i + 1);
  if (static_cast<int>(degrees.size()) > degree_bound) {
    throw NotReachable("label " + target.str() + " needs " + std::to_string(degrees.size()) +
                       " tensor factors, bound is " + std::to_string(degree_bound));
  }
  detail::WedgeAmbient amb(q, degrees);
  const std::uint64_t expected = weyl_dimension(target);

  detail::SparseVec top;
  {
    std::uint64_t idx = 0;
    for (std::size_t f = 0; f < degrees.size(); ++f) {
      std::vector<int> s(degrees[f]);
      for (int i = 0; i < degrees[f]; ++i) s[i] = i;
      idx += amb.factor_index[f].at(s) * amb.stride[f];
    }
    top[idx] = 1;
  }

  std::vector<detail::SparseVec> vecs{top};
  std::vector<std::vector<int>> wts{target.dynkin};
  std::map<std::vector<int>, detail::Echelon<std::uint64_t>> spaces;
  spaces[target.dynkin].insert(top);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (int k = 0; k < q - 1; ++k) {
      auto w = amb.apply(vecs[i], k, false);
      if (w.empty()) continue;
      auto wt = wts[i];
      // Lowering by simple root k shifts the weight by minus the k-th Cartan row.
      wt[k] -= 2;
      if (k > 0) wt[k - 1] += 1;
      if (k + 1 < q - 1) wt[k + 1] += 1;
      if (spaces[wt].insert(w)) {
        vecs.push_back(std::move(w));
        wts.push_back(wt);
      }
    }
    if (vecs.size() > expected) throw InternalInconsistency("highest-weight module exceeds Weyl dimension");
  }
  if (vecs.size() != expected) throw InternalInconsistency("highest-weight module has wrong dimension");

  // Orthogonalize inside each weight space, keeping first-appearance order.
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (wts[j] != wts[i]) continue;
      Rational c = detail::dot(vecs[j], vecs[i]) / detail::dot(vecs[j], vecs[j]);
      if (!c.is_zero()) detail::axpy(vecs[i], -c, vecs[j]);
    }

  Rep r;
  r.label = target;
  r.key = "hw:su" + std::to_string(q) + ":";
  for (std::size_t i = 0; i < target.dynkin.size(); ++i)
    r.key += (i ? "," : "") + std::to_string(target.dynkin[i]);
  r.dim = vecs.size();
  r.weights = wts;
  for (const auto &v : vecs) r.metric.push_back(detail::dot(v, v));

  auto express = [&](const detail::SparseVec &image, std::size_t col, Matrix<Rational> &m) {
    detail::SparseVec rest = image;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      Rational c = detail::dot(vecs[i], image) / r.metric[i];
      if (c.is_zero()) continue;
      m(i, col) = c;
      detail::axpy(rest, -c, vecs[i]);
    }
    if (!rest.empty()) throw InternalInconsistency("generator image leaves the irreducible subspace");
  };
  for (int k = 0; k < q - 1; ++k) {
    Matrix<Rational> e(r.dim, r.dim), f(r.dim, r.dim), h(r.dim, r.dim);
    for (std::size_t j = 0; j < r.dim; ++j) {
      express(amb.apply(vecs[j], k, true), j, e);
      express(amb.apply(vecs[j], k, false), j, f);
      h(j, j) = wts[j][k];
    }
    r.raising.push_back(std::move(e));
    r.lowering.push_back(std::move(f));
    r.cartan.push_back(std::move(h));
  }
  return r;
}

/// Chevalley-Serre relations, diagonal Cartan generators and f_k = e_k^dagger.
inline bool check_lie_relations(const Rep &r) {
  const int n = r.rank();
  auto br = [](const Matrix<Rational> &a, const Matrix<Rational> &b) { return a * b - b * a; };
  auto cartan = [](int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); };
  for (int i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < r.dim; ++a)
      for (std::size_t b = 0; b < r.dim; ++b)
        if (a != b && !r.cartan[i](a, b).is_zero()) return false;
    if (!(r.adjoint(r.raising[i]) == r.lowering[i])) return false;
    for (int j = 0; j < n; ++j) {
      Matrix<Rational> e = r.raising[j], f = r.lowering[j];
      if (!(br(r.cartan[i], r.cartan[j]).is_zero())) return false;
      if (!(br(r.cartan[i], r.raising[j]) == e.scale(Rational(cartan(i, j))))) return false;
      if (!(br(r.cartan[i], r.lowering[j]) == f.scale(Rational(-cartan(i, j))))) return false;
      auto ef = br(r.raising[i], r.lowering[j]);
      if (i == j ? !(ef == r.cartan[i]) : !ef.is_zero()) return false;
      if (i != j) {
        int reps = 1 - cartan(i, j);
        Matrix<Rational> se = r.raising[j], sf = r.lowering[j];
        for (int t = 0; t < reps; ++t) {
          se = br(r.raising[i], se);
          sf = br(r.lowering[i], sf);
        }
        if (!se.is_zero() || !sf.is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace imw
