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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imw/matrix.hpp"
#include "imw/rep.hpp"
#include "imw/sectors.hpp"

namespace imw {

/// Orthogonal projector onto a code subspace, stored in the rescaled basis of
/// its representation (see Rep).
struct CodeProjector {
  std::string name;
  std::string rep_key;
  Matrix<Radical> P;
  std::vector<Rational> metric;
  int K = 0;
  std::size_t N = 0;
};

template <class T>
Matrix<T> metric_adjoint(const Matrix<T> &x, const std::vector<Rational> &h) {
  Matrix<T> out(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.cols(); ++i)
    for (std::size_t j = 0; j < x.rows(); ++j)
      if (!is_zero(x(j, i))) out(i, j) = x(j, i) * (h[j] / h[i]);
  return out;
}

/// Validates P^2 = P, P^dagger = P and an integral trace.
inline CodeProjector make_code_projector(const Rep &rep, Matrix<Radical> P, std::string name = {}) {
  if (P.rows() != rep.dim || P.cols() != rep.dim) throw DimensionMismatch("projector size differs from rep");
  if (!(P * P == P)) throw InvalidSpec("matrix is not idempotent");
  if (!(metric_adjoint(P, rep.metric) == P)) throw InvalidSpec("matrix is not self-adjoint");
  Radical tr = P.trace();
  if (!tr.is_rational() || !tr.rational_part().is_integer() || tr.rational_part().sign() <= 0) {
    throw InvalidSpec("projector trace " + tr.str() + " is not a positive integer");
  }
  CodeProjector c;
  c.name = std::move(name);
  c.rep_key = rep.key;
  c.P = std::move(P);
  c.metric = rep.metric;
  c.K = static_cast<int>(tr.rational_part().numerator().get_si());
  c.N = rep.dim;
  return c;
}

inline CodeProjector make_code_projector(const Rep &rep, const Matrix<Rational> &P, std::string name = {}) {
  return make_code_projector(rep, to_radical(P), std::move(name));
}

namespace detail {

/// Tr(F^dagger x) for sparse F under the diagonal metric.
template <class T>
T hs_coefficient(const Operator &F, const Matrix<T> &x, const std::vector<Rational> &h) {
  T s{};
  F.for_each([&](std::size_t i, std::size_t j, const Rational &v) {
    if (!is_zero(x(i, j))) s += x(i, j) * (v * h[i] / h[j]);
  });
  return s;
}

/// Tr(A B) for dense matrices.
template <class T>
T trace_of_product(const Matrix<T> &a, const Matrix<T> &b) {
  T s{};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j)) && !is_zero(b(j, i))) s += a(i, j) * b(j, i);
  return s;
}

inline Rational as_rational(const Rational &r) { return r; }
inline Rational as_rational(const Radical &r) { return r.to_rational(); }

/// Dual basis Ftilde_a = sum_b (G^{-1})_{ab} F_b of one copy.
inline std::vector<Operator> dual_basis(const Sector &s, std::size_t copy) {
  const auto ginv = s.gram_inverse();
  const bool diag = s.gram_is_diagonal();
  std::vector<Operator> out;
  for (std::size_t a = 0; a < s.dim; ++a) {
    if (diag) {
      out.push_back(s.copies[copy][a].scaled(ginv(a, a)));
      continue;
    }
    Operator acc(s.copies[copy][a].rows(), s.copies[copy][a].cols());
    for (std::size_t b = 0; b < s.dim; ++b)
      if (!ginv(a, b).is_zero()) acc = lincomb(Rational(1), acc, ginv(a, b), s.copies[copy][b]);
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace detail

/// Projector enumerator block: entry (a,b) = sum_{ij} (G^{-1})_{ij} Tr(x^dag F^b_i) Tr(x F^a_j^dag).
/// Reported in the copy basis of the sector, whose copies carry norms copy_norms.
template <class T>
Matrix<Rational> projector_enumerator(const Matrix<T> &x, const Sector &s, const std::vector<Rational> &metric) {
  if (x.rows() != metric.size() || x.cols() != metric.size()) throw DimensionMismatch("operator size");
  const std::size_t m = s.multiplicity;
  std::vector<std::vector<T>> t(m, std::vector<T>(s.dim));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < s.dim; ++i) t[a][i] = detail::hs_coefficient(s.copies[a][i], x, metric);
  const auto ginv = s.gram_inverse();
  const bool diag = s.gram_is_diagonal();
  Matrix<Rational> A(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      T acc{};
      for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j) {
          if (diag && i != j) continue;
          if (ginv(i, j).is_zero() || is_zero(t[b][i]) || is_zero(t[a][j])) continue;
          acc += t[b][i] * t[a][j] * ginv(i, j);
        }
      A(a, b) = detail::as_rational(acc);
    }
  return A;
}

/// Twirl enumerator block: entry (a,b) = sum_{ij} (G^{-1})_{ij} Tr(x^dag F^a_i^dag x F^b_j).
template <class T>
Matrix<Rational> twirl_enumerator(const Matrix<T> &x, const Sector &s, const std::vector<Rational> &metric) {
  if (x.rows() != metric.size() || x.cols() != metric.size()) throw DimensionMismatch("operator size");
  const std::size_t m = s.multiplicity;
  const Matrix<T> xd = metric_adjoint(x, metric);
  std::vector<std::vector<Operator>> duals;
  for (std::size_t b = 0; b < m; ++b) duals.push_back(detail::dual_basis(s, b));
  std::vector<std::vector<T>> acc(m, std::vector<T>(m));
  for (std::size_t i = 0; i < s.dim; ++i) {
    std::vector<Matrix<T>> left, right;
    for (std::size_t a = 0; a < m; ++a) left.push_back(xd * adjoint(s.copies[a][i], metric));
    for (std::size_t b = 0; b < m; ++b) right.push_back(x * duals[b][i]);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) acc[a][b] += detail::trace_of_product(left[a], right[b]);
  }
  Matrix<Rational> B(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) B(a, b) = detail::as_rational(acc[a][b]);
  return B;
}

/// sum_i F^mu_i^dag x Ftilde^nu_i over the basis of one sector, with the dual
/// taken against the copy-0 Gram matrix.
template <class T>
Matrix<T> twirl_apply(const Matrix<T> &x, const Sector &s, std::size_t mu, std::size_t nu,
                      const std::vector<Rational> &metric) {
  const auto dual = detail::dual_basis(s, nu);
  Matrix<T> out(x.rows(), x.cols());
  for (std::size_t i = 0; i < s.dim; ++i) out += adjoint(s.copies[mu][i], metric) * (x * dual[i]);
  return out;
}

/// Trace of a block in the orthonormal copy frame: sum_a X_aa / n_a.
inline Rational metric_trace(const Matrix<Rational> &block, const std::vector<Rational> &copy_norms) {
  Rational t;
  for (std::size_t a = 0; a < block.rows(); ++a) t += block(a, a) / copy_norms[a];
  return t;
}

/// Orthonormal-copy-frame block S^{-1} X S^{-1}, S = diag(sqrt(n)). Entries may be irrational.
inline Matrix<Radical> orthonormal_block(const Matrix<Rational> &block, const std::vector<Rational> &copy_norms) {
  Matrix<Radical> out(block.rows(), block.cols());
  for (std::size_t a = 0; a < block.rows(); ++a)
    for (std::size_t b = 0; b < block.cols(); ++b)
      out(a, b) = Radical::sqrt(Rational(1) / (copy_norms[a] * copy_norms[b])) * block(a, b);
  return out;
}

/// Positive semidefiniteness of a block in the orthonormal copy frame. The
/// congruence by diag(sqrt(n)) preserves inertia, so the rational block is tested directly.
inline bool block_is_psd(const Matrix<Rational> &block) { return is_psd_exact(block); }

struct SectorEnumerators {
  IrrepLabel label;
  int depth = 0;
  int multiplicity = 1;
  std::size_t dim = 0;
  std::vector<Rational> copy_norms;
  Matrix<Rational> A, B;
  std::optional<Rational> A_tilde, B_tilde;
  std::optional<bool> detected;
};

struct EnumeratorData {
  std::string name;
  std::string rep_key;
  std::size_t N = 0;
  int K = 0;
  std::vector<SectorEnumerators> sectors;
  std::optional<int> depth;

  std::vector<Rational> A_tilde() const {
    std::vector<Rational> v;
    for (const auto &s : sectors) v.push_back(s.A_tilde.value());
    return v;
  }
  std::vector<Rational> B_tilde() const {
    std::vector<Rational> v;
    for (const auto &s : sectors) v.push_back(s.B_tilde.value());
    return v;
  }
};

/// Operator test PFP = c_F P on every basis operator of every copy.
inline bool detects_by_operators(const CodeProjector &p, const Sector &s) {
  const Radical K(Rational(p.K));
  for (const auto &copy : s.copies)
    for (const auto &F : copy) {
      Matrix<Radical> y = (p.P * F) * p.P;
      Radical c = y.trace() / K;
      Matrix<Radical> cp = p.P;
      for (auto &v : cp.data()) v *= c;
      if (!(y == cp)) return false;
    }
  return true;
}

/// Knill-Laflamme detection of a sector. The operator criterion is primary; the
/// enumerator criterion A = K B must agree, otherwise InternalInconsistency.
inline bool kl_detects(const CodeProjector &p, const Sector &s, const Matrix<Rational> &A, const Matrix<Rational> &B) {
  const bool by_ops = detects_by_operators(p, s);
  Matrix<Rational> KB = B;
  KB.scale(Rational(p.K));
  const bool by_enum = A == KB;
  if (by_ops != by_enum) {
    throw InternalInconsistency("detection criteria disagree on sector " + s.label.str());
  }
  return by_ops;
}

inline bool kl_detects(const CodeProjector &p, const Sector &s) {
  return kl_detects(p, s, projector_enumerator(p.P, s, p.metric), twirl_enumerator(p.P, s, p.metric));
}

/// Ã = (N/K^2) A, B̃ = (N/K) B for multiplicity-free decompositions.
inline std::pair<std::vector<Rational>, std::vector<Rational>> normalized_enumerators(const CodeProjector &p,
                                                                                     const SectorSet &set) {
  if (!set.multiplicity_free()) throw MultiplicityPresent("normalized enumerators need m = 1; use block form");
  std::vector<Rational> at, bt;
  const Rational N(static_cast<long>(p.N)), K(p.K);
  for (const auto &s : set.sectors) {
    at.push_back(projector_enumerator(p.P, s, p.metric)(0, 0) * N / (K * K));
    bt.push_back(twirl_enumerator(p.P, s, p.metric)(0, 0) * N / K);
  }
  return {at, bt};
}

/// Full enumerator record of a code projector; detection flags and code depth
/// are filled when `with_detection` is set.
inline EnumeratorData compute_enumerators(const CodeProjector &p, const SectorSet &set, bool with_detection = true) {
  if (p.N != set.N) throw DimensionMismatch("projector and sectors come from different reps");
  EnumeratorData d;
  d.name = p.name;
  d.rep_key = set.rep_key;
  d.N = p.N;
  d.K = p.K;
  const Rational N(static_cast<long>(p.N)), K(p.K);
  std::optional<int> first_undetected;
  int max_depth = 0;
  for (const auto &s : set.sectors) {
    SectorEnumerators e;
    e.label = s.label;
    e.depth = s.depth;
    e.multiplicity = s.multiplicity;
    e.dim = s.dim;
    e.copy_norms = s.copy_norms;
    e.A = projector_enumerator(p.P, s, p.metric);
    e.B = twirl_enumerator(p.P, s, p.metric);
    if (s.multiplicity == 1) {
      e.A_tilde = e.A(0, 0) * N / (K * K);
      e.B_tilde = e.B(0, 0) * N / K;
    }
    if (with_detection) {
      e.detected = kl_detects(p, s, e.A, e.B);
      if (!*e.detected && (!first_undetected || s.depth < *first_undetected)) first_undetected = s.depth;
    }
    max_depth = std::max(max_depth, s.depth);
    d.sectors.push_back(std::move(e));
  }
  if (with_detection) d.depth = first_undetected ? *first_undetected : max_depth + 1;
  return d;
}

/// Largest d such that every sector of depth < d is detected.
inline int code_depth(const CodeProjector &p, const SectorSet &set) {
  std::optional<int> first_undetected;
  int max_depth = 0;
  for (const auto &s : set.sectors) {
    max_depth = std::max(max_depth, s.depth);
    if (first_undetected && s.depth >= *first_undetected) continue;
    if (!kl_detects(p, s)) first_undetected = s.depth;
  }
  return first_undetected ? *first_undetected : max_depth + 1;
}

}  // namespace imw
