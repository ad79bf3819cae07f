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

#include "imw/macwilliams.hpp"
#include "imw/matrix.hpp"

namespace imw {

struct LinearConstraint {
  enum class Sense { Eq, Ge };
  std::string name;
  std::vector<Rational> coeffs;
  Rational rhs;
  Sense sense = Sense::Eq;
};

/// Normalized enumerator LP over Ã >= 0, with B̃ = K M Ã substituted.
struct LPProblem {
  std::vector<IrrepLabel> labels;
  std::size_t N = 0;
  int K = 1;
  Matrix<Rational> M;
  std::vector<std::size_t> detected;
  std::vector<LinearConstraint> constraints;

  std::size_t num_vars() const { return labels.size(); }
};

struct LPResult {
  enum class Verdict { Feasible, Infeasible };
  Verdict verdict = Verdict::Infeasible;
  std::vector<Rational> point;   // Ã when feasible
  std::vector<Rational> farkas;  // one multiplier per constraint when infeasible
  bool feasible() const { return verdict == Verdict::Feasible; }
};

/// Sectors with 0 < depth < d.
inline std::vector<std::size_t> detected_below_depth(const std::vector<int> &depths, int d) {
  std::vector<std::size_t> e;
  for (std::size_t i = 0; i < depths.size(); ++i)
    if (depths[i] > 0 && depths[i] < d) e.push_back(i);
  return e;
}

inline LPProblem build_lp(const MacWilliamsMatrix &m, int K, std::vector<std::size_t> detected) {
  if (K < 1) throw Error("K must be positive");
  const std::size_t n = m.size();
  for (auto i : detected)
    if (i >= n) throw Error("detected sector index out of range");
  // The trivial sector is always detected and carries no constraint.
  detected.erase(std::remove(detected.begin(), detected.end(), std::size_t{0}), detected.end());
  std::sort(detected.begin(), detected.end());
  detected.erase(std::unique(detected.begin(), detected.end()), detected.end());

  LPProblem lp;
  lp.labels = m.labels;
  lp.N = m.N;
  lp.K = K;
  lp.M = m.M;
  lp.detected = detected;
  const Rational Kr(K), Nr(static_cast<long>(m.N));
  auto b_row = [&](std::size_t xi) {
    std::vector<Rational> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = Kr * m.M(xi, j);
    return r;
  };
  using S = LinearConstraint::Sense;
  {
    std::vector<Rational> r(n);
    r[0] = 1;
    lp.constraints.push_back({"normalization", r, Rational(1), S::Eq});
  }
  lp.constraints.push_back({"sum_A", std::vector<Rational>(n, Rational(1)), Nr / Kr, S::Eq});
  {
    std::vector<Rational> r(n);
    for (std::size_t xi = 0; xi < n; ++xi) {
      auto b = b_row(xi);
      for (std::size_t j = 0; j < n; ++j) r[j] += b[j];
    }
    lp.constraints.push_back({"sum_B", r, Nr * Kr, S::Eq});
  }
  for (std::size_t xi = 0; xi < n; ++xi) {
    auto r = b_row(xi);
    r[xi] -= 1;
    const bool det = std::binary_search(detected.begin(), detected.end(), xi);
    lp.constraints.push_back({(det ? "detect[" : "kl[") + m.labels[xi].str() + "]", r, Rational(0),
                              det ? S::Eq : S::Ge});
  }
  return lp;
}

inline LPProblem build_lp(const BlockMacWilliams &b, int K, std::vector<std::size_t> detected) {
  return build_lp(scalar_from_block(b), K, std::move(detected));
}

/// Exact re-substitution of a candidate point into every constraint and x >= 0.
inline bool verify_point(const LPProblem &lp, const std::vector<Rational> &x) {
  if (x.size() != lp.num_vars()) return false;
  for (const auto &v : x)
    if (v.sign() < 0) return false;
  for (const auto &c : lp.constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coeffs[j] * x[j];
    if (c.sense == LinearConstraint::Sense::Eq ? !(lhs == c.rhs) : lhs < c.rhs) return false;
  }
  return true;
}

/// A certificate y proves infeasibility when y_g >= 0 on every ">=" row,
/// sum_c y_c a_c <= 0 componentwise and sum_c y_c b_c > 0: for x >= 0 any
/// feasible point would give 0 >= y.Ax >= y.b > 0.
inline bool verify_farkas(const LPProblem &lp, const std::vector<Rational> &y) {
  if (y.size() != lp.constraints.size()) return false;
  std::vector<Rational> combo(lp.num_vars());
  Rational rhs;
  for (std::size_t c = 0; c < y.size(); ++c) {
    const auto &con = lp.constraints[c];
    if (con.sense == LinearConstraint::Sense::Ge && y[c].sign() < 0) return false;
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += y[c] * con.coeffs[j];
    rhs += y[c] * con.rhs;
  }
  for (const auto &v : combo)
    if (v.sign() > 0) return false;
  return rhs.sign() > 0;
}

namespace detail {

/// Dense two-phase simplex on {A z = b, z >= 0} with Bland's rule.
class Simplex {
 public:
  Simplex(const Matrix<Rational> &A, const std::vector<Rational> &b) : m_(A.rows()), n_(A.cols()) {
    sign_.assign(m_, 1);
    T_ = Matrix<Rational>(m_, n_ + m_ + 1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (b[i].sign() < 0) sign_[i] = -1;
      for (std::size_t j = 0; j < n_; ++j) T_(i, j) = sign_[i] > 0 ? A(i, j) : -A(i, j);
      T_(i, n_ + i) = 1;
      T_(i, n_ + m_) = sign_[i] > 0 ? b[i] : -b[i];
      basis_.push_back(n_ + i);
    }
    active_.assign(m_, true);
  }

  /// Phase one. Returns true when a feasible basis exists; otherwise fills the
  /// Farkas multipliers for the original rows.
  bool phase_one(std::vector<Rational> &farkas) {
    std::vector<Rational> cost(n_ + m_);
    for (std::size_t i = 0; i < m_; ++i) cost[n_ + i] = 1;
    run(cost, n_ + m_);
    Rational obj;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= n_) obj += T_(i, n_ + m_);
    if (obj.sign() > 0) {
      // y_i = c_B B^{-1} e_i; the artificial columns hold B^{-1}.
      farkas.assign(m_, Rational(0));
      for (std::size_t i = 0; i < m_; ++i) {
        Rational y;
        for (std::size_t r = 0; r < m_; ++r)
          if (basis_[r] >= n_) y += T_(r, n_ + i);
        farkas[i] = sign_[i] > 0 ? y : -y;
      }
      return false;
    }
    // Pivot artificials out of the basis; rows where that is impossible are redundant.
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      std::size_t j = 0;
      while (j < n_ && T_(r, j).is_zero()) ++j;
      if (j < n_) pivot(r, j);
      else active_[r] = false;
    }
    return true;
  }

  /// Phase two: minimizes cost . z over the structural columns. Returns false if unbounded.
  bool minimize(const std::vector<Rational> &cost) { return run(cost, n_); }

  std::vector<Rational> solution() const {
    std::vector<Rational> z(n_);
    for (std::size_t r = 0; r < m_; ++r)
      if (active_[r] && basis_[r] < n_) z[basis_[r]] = T_(r, n_ + m_);
    return z;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    Rational inv = Rational(1) / T_(r, c);
    for (std::size_t j = 0; j < T_.cols(); ++j)
      if (!T_(r, j).is_zero()) T_(r, j) *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || T_(i, c).is_zero()) continue;
      Rational f = T_(i, c);
      for (std::size_t j = 0; j < T_.cols(); ++j)
        if (!T_(r, j).is_zero()) T_(i, j) -= f * T_(r, j);
    }
    basis_[r] = c;
  }

  /// Bland's rule over columns [0, ncols). Cost has entries for every column.
  bool run(const std::vector<Rational> &cost, std::size_t ncols) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < ncols && !enter; ++j) {
        if (std::find(basis_.begin(), basis_.end(), j) != basis_.end()) continue;
        Rational red = cost[j];
        for (std::size_t r = 0; r < m_; ++r)
          if (active_[r] && !T_(r, j).is_zero()) red -= cost[basis_[r]] * T_(r, j);
        if (red.sign() < 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (!active_[r] || T_(r, *enter).sign() <= 0) continue;
        Rational ratio = T_(r, n_ + m_) / T_(r, *enter);
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  std::size_t m_, n_;
  Matrix<Rational> T_;
  std::vector<std::size_t> basis_;
  std::vector<int> sign_;
  std::vector<bool> active_;
};

/// Standard form: structural variables followed by one surplus per ">=" row.
inline std::pair<Matrix<Rational>, std::vector<Rational>> standard_form(const LPProblem &lp) {
  const std::size_t n = lp.num_vars();
  std::size_t ge = 0;
  for (const auto &c : lp.constraints) ge += c.sense == LinearConstraint::Sense::Ge;
  Matrix<Rational> A(lp.constraints.size(), n + ge);
  std::vector<Rational> b;
  std::size_t s = n;
  for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
    const auto &c = lp.constraints[r];
    for (std::size_t j = 0; j < n; ++j) A(r, j) = c.coeffs[j];
    if (c.sense == LinearConstraint::Sense::Ge) A(r, s++) = -1;
    b.push_back(c.rhs);
  }
  return {A, b};
}

}  // namespace detail

/// Exact feasibility verdict with a re-verified point or Farkas certificate.
inline LPResult solve(const LPProblem &lp) {
  auto [A, b] = detail::standard_form(lp);
  detail::Simplex sx(A, b);
  LPResult res;
  std::vector<Rational> farkas;
  if (!sx.phase_one(farkas)) {
    res.verdict = LPResult::Verdict::Infeasible;
    res.farkas = std::move(farkas);
    if (!verify_farkas(lp, res.farkas)) throw InternalInconsistency("Farkas certificate failed verification");
    return res;
  }
  auto z = sx.solution();
  res.verdict = LPResult::Verdict::Feasible;
  res.point.assign(z.begin(), z.begin() + lp.num_vars());
  if (!verify_point(lp, res.point)) throw InternalInconsistency("feasible point failed verification");
  return res;
}

/// Exact optimum of c . x (minimized, or maximized when `maximize`). nullopt if infeasible.
inline std::optional<std::pair<Rational, std::vector<Rational>>> optimize(const LPProblem &lp,
                                                                        const std::vector<Rational> &c,
                                                                        bool maximize) {
  auto [A, b] = detail::standard_form(lp);
  detail::Simplex sx(A, b);
  std::vector<Rational> farkas;
  if (!sx.phase_one(farkas)) return std::nullopt;
  std::vector<Rational> cost(A.cols() + A.rows());
  for (std::size_t j = 0; j < c.size(); ++j) cost[j] = maximize ? -c[j] : c[j];
  if (!sx.minimize(cost)) throw Error("LP objective is unbounded");
  auto z = sx.solution();
  std::vector<Rational> x(z.begin(), z.begin() + lp.num_vars());
  if (!verify_point(lp, x)) throw InternalInconsistency("optimal point failed verification");
  Rational v;
  for (std::size_t j = 0; j < c.size(); ++j) v += c[j] * x[j];
  return std::make_pair(v, x);
}

struct Uniqueness {
  bool unique = false;
  std::optional<std::vector<Rational>> point;
  std::vector<std::pair<Rational, Rational>> ranges;  // [min, max] per coordinate
};

/// Minimizes and maximizes each coordinate; unique iff every range is a point.
inline Uniqueness check_uniqueness(const LPProblem &lp) {
  Uniqueness u;
  u.unique = true;
  std::vector<Rational> pt(lp.num_vars());
  for (std::size_t i = 0; i < lp.num_vars(); ++i) {
    std::vector<Rational> c(lp.num_vars());
    c[i] = 1;
    auto lo = optimize(lp, c, false);
    if (!lo) throw InfeasibleInput("LP is infeasible");
    auto hi = optimize(lp, c, true);
    u.ranges.emplace_back(lo->first, hi->first);
    if (!(lo->first == hi->first)) u.unique = false;
    pt[i] = lo->first;
  }
  if (u.unique) u.point = pt;
  return u;
}

/// Largest K in [k_min, k_max] with a feasible LP.
inline int scan_max_K(const MacWilliamsMatrix &m, const std::vector<std::size_t> &detected, int k_min, int k_max) {
  for (int K = k_max; K >= k_min; --K)
    if (solve(build_lp(m, K, detected)).feasible()) return K;
  throw InfeasibleAll("no K in range is feasible");
}

/// Largest d such that the LP detecting every sector of depth < d is feasible.
inline int scan_max_d(const MacWilliamsMatrix &m, int K, const std::vector<int> &depths) {
  const int top = *std::max_element(depths.begin(), depths.end()) + 1;
  int best = 0;
  for (int d = 1; d <= top; ++d) {
    if (!solve(build_lp(m, K, detected_below_depth(depths, d))).feasible()) break;
    best = d;
  }
  if (best == 0) throw InfeasibleAll("LP infeasible even with no detected sectors");
  return best;
}

}  // namespace imw
