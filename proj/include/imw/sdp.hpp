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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "imw/enumerators.hpp"
#include "imw/macwilliams.hpp"

namespace imw {

/// How detection of a sector is imposed.
/// Strict: A = K B (Knill-Laflamme). Vanishing: A = 0.
enum class DetectionMode { Strict, Vanishing };

inline const char *mode_name(DetectionMode m) { return m == DetectionMode::Strict ? "strict" : "vanishing"; }

/// Block enumerator feasibility problem in the orthonormal copy frame.
struct SDPProblem {
  std::vector<IrrepLabel> labels;
  std::vector<int> multiplicities;
  std::vector<int> depths;
  std::vector<std::vector<Rational>> copy_norms;
  std::vector<BlockIndex> index;
  int K = 1;
  std::size_t N = 0;
  std::vector<std::size_t> detected;
  DetectionMode mode = DetectionMode::Strict;
  Matrix<Radical> M;  // exact transform, orthonormal frame
  Eigen::MatrixXd Md;

  std::size_t offset(std::size_t s) const {
    std::size_t o = 0;
    for (std::size_t k = 0; k < s; ++k) o += multiplicities[k] * multiplicities[k];
    return o;
  }
  bool is_detected(std::size_t s) const { return std::find(detected.begin(), detected.end(), s) != detected.end(); }
};

struct SDPResidual {
  std::string name;
  double value = 0;             // absolute value of the largest entry
  std::optional<Radical> exact;  // signed exact value when the inputs are exact
};

struct SDPResult {
  enum class Verdict { ApproxFeasible, LikelyInfeasible };
  Verdict verdict = Verdict::LikelyInfeasible;
  double tol = 0;
  double max_residual = 0;
  double min_eigenvalue = 0;        // over A_xi and K B_xi - A_xi
  double infeasibility_measure = 0;  // -s* for the solver; 0 when feasible
  std::vector<SDPResidual> residuals;
  std::vector<Eigen::MatrixXd> A, B;  // point, orthonormal frame
  int iterations = 0;
  bool max_iterations = false;
  bool feasible() const { return verdict == Verdict::ApproxFeasible; }
};

inline SDPProblem build_sdp(const BlockMacWilliams &b, int K, std::vector<std::size_t> detected,
                            DetectionMode mode = DetectionMode::Strict) {
  if (K < 1) throw Error("K must be positive");
  for (auto s : detected)
    if (s >= b.labels.size()) throw Error("detected sector index out of range");
  detected.erase(std::remove(detected.begin(), detected.end(), std::size_t{0}), detected.end());
  std::sort(detected.begin(), detected.end());
  detected.erase(std::unique(detected.begin(), detected.end()), detected.end());
  SDPProblem p;
  p.labels = b.labels;
  p.multiplicities = b.multiplicities;
  p.depths = b.depths;
  p.copy_norms = b.copy_norms;
  p.index = b.index;
  p.K = K;
  p.N = b.N;
  p.detected = std::move(detected);
  p.mode = mode;
  // B_on = S^-1 B_hat S^-1 with S = diag(sqrt(n)), so M_on(r,c) = M(r,c) sqrt(w_c / w_r), w = n_a n_b.
  std::vector<Rational> w;
  for (const auto &ix : b.index) w.push_back(b.copy_norms[ix.sector][ix.a] * b.copy_norms[ix.sector][ix.b]);
  const std::size_t n = b.index.size();
  p.M = Matrix<Radical>(n, n);
  p.Md = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (b.M(r, c).is_zero()) continue;
      p.M(r, c) = Radical::sqrt(w[c] / w[r]) * b.M(r, c);
      p.Md(r, c) = p.M(r, c).to_double();
    }
  return p;
}

/// Candidate enumerator blocks in the orthonormal copy frame. When `aligned` is
/// false the blocks are expressed in some other orthonormal multiplicity basis,
/// and only basis-independent constraints are checked.
struct SDPCandidate {
  std::vector<Matrix<Radical>> A, B;
  bool aligned = true;
};

/// Converts rational copy-basis blocks (as produced by the enumerators) to a candidate.
inline SDPCandidate candidate_from_copy_blocks(const SDPProblem &p, const std::vector<Matrix<Rational>> &A,
                                               const std::vector<Matrix<Rational>> &B) {
  SDPCandidate c;
  for (std::size_t s = 0; s < A.size(); ++s) {
    c.A.push_back(orthonormal_block(A[s], p.copy_norms.at(s)));
    c.B.push_back(orthonormal_block(B[s], p.copy_norms.at(s)));
  }
  return c;
}

inline SDPCandidate candidate_from_enumerators(const SDPProblem &p, const EnumeratorData &e) {
  std::vector<Matrix<Rational>> A, B;
  for (const auto &s : e.sectors) {
    A.push_back(s.A);
    B.push_back(s.B);
  }
  return candidate_from_copy_blocks(p, A, B);
}

namespace detail {

inline Eigen::MatrixXd to_eigen(const Matrix<Radical> &m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

inline double min_eigenvalue(const Eigen::MatrixXd &m) {
  if (m.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sym, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

/// Adds a residual; `vals` are the signed exact entries whose largest magnitude is reported.
inline void add_residual(SDPResult &r, std::string name, const std::vector<Radical> &vals) {
  SDPResidual res;
  res.name = std::move(name);
  res.exact = Radical();
  for (const auto &v : vals) {
    double d = std::abs(v.to_double());
    if (!v.is_zero() && (res.exact->is_zero() || d > res.value)) {
      res.value = d;
      res.exact = v;
    }
  }
  r.max_residual = std::max(r.max_residual, res.value);
  r.residuals.push_back(std::move(res));
}

}  // namespace detail

/// Checks a candidate against every constraint. Residuals are exact; PSD is
/// decided from the smallest eigenvalue in double precision.
inline SDPResult check_point(const SDPProblem &p, const SDPCandidate &c, double tol = 1e-7) {
  const std::size_t ns = p.labels.size();
  if (c.A.size() != ns || c.B.size() != ns) throw ShapeMismatch("candidate has the wrong number of sectors");
  for (std::size_t s = 0; s < ns; ++s) {
    const std::size_t m = p.multiplicities[s];
    if (c.A[s].rows() != m || c.A[s].cols() != m || c.B[s].rows() != m || c.B[s].cols() != m) {
      throw ShapeMismatch("block for sector " + p.labels[s].str() + " must be " + std::to_string(m) + "x" +
                          std::to_string(m));
    }
  }
  SDPResult r;
  r.tol = tol;
  const Radical K(Rational(p.K));
  Radical trA, trB;
  for (std::size_t s = 0; s < ns; ++s) {
    trA += c.A[s].trace();
    trB += c.B[s].trace();
  }
  detail::add_residual(r, "sum_tr_A", {trA - K});
  detail::add_residual(r, "sum_tr_B", {trB - K * K});
  std::vector<Radical> asym;
  for (std::size_t s = 0; s < ns; ++s) {
    for (const auto *blk : {&c.A[s], &c.B[s]}) {
      auto d = *blk - blk->transpose();
      asym.insert(asym.end(), d.data().begin(), d.data().end());
    }
  }
  detail::add_residual(r, "symmetry", asym);
  if (c.aligned) {
    std::vector<Radical> a, b;
    for (std::size_t s = 0; s < ns; ++s) {
      a.insert(a.end(), c.A[s].data().begin(), c.A[s].data().end());
      b.insert(b.end(), c.B[s].data().begin(), c.B[s].data().end());
    }
    std::vector<Radical> diff;
    for (std::size_t i = 0; i < p.M.rows(); ++i) {
      Radical acc = -b[i];
      for (std::size_t j = 0; j < p.M.cols(); ++j)
        if (!p.M(i, j).is_zero() && !a[j].is_zero()) acc += p.M(i, j) * a[j];
      diff.push_back(acc);
    }
    detail::add_residual(r, "macwilliams", diff);
  }
  for (auto s : p.detected) {
    Matrix<Radical> d = c.A[s];
    if (p.mode == DetectionMode::Strict)
      for (std::size_t k = 0; k < d.data().size(); ++k) d.data()[k] -= K * c.B[s].data()[k];
    detail::add_residual(r, "detect[" + p.labels[s].str() + "]", d.data());
  }
  r.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < ns; ++s) {
    Eigen::MatrixXd a = detail::to_eigen(c.A[s]), b = detail::to_eigen(c.B[s]);
    r.min_eigenvalue = std::min({r.min_eigenvalue, detail::min_eigenvalue(a), detail::min_eigenvalue(p.K * b - a)});
    r.A.push_back(a);
    r.B.push_back(b);
  }
  const bool ok = r.max_residual <= tol && r.min_eigenvalue >= -tol;
  r.verdict = ok ? SDPResult::Verdict::ApproxFeasible : SDPResult::Verdict::LikelyInfeasible;
  r.infeasibility_measure = ok ? 0.0 : std::max(r.max_residual, -r.min_eigenvalue);
  return r;
}

struct SDPOptions {
  double mu_start = 1.0;
  double mu_final = 1e-12;
  double mu_factor = 0.1;
  int newton_per_stage = 60;
  double newton_tol = 1e-10;  // stop a stage when the squared Newton decrement falls below this
};

namespace detail {

/// Affine symmetric matrix G(z) = G0 + sum_i z_i G_i.
struct AffineBlock {
  Eigen::MatrixXd G0;
  std::vector<Eigen::MatrixXd> Gi;
  Eigen::MatrixXd at(const Eigen::VectorXd &z) const {
    Eigen::MatrixXd g = G0;
    for (std::size_t i = 0; i < Gi.size(); ++i) g += z(i) * Gi[i];
    return g;
  }
};

}  // namespace detail

/// Maximizes s subject to A_xi - sI >= 0 and K B_xi - A_xi - sI >= 0 over the
/// affine set cut out by the linear constraints, using a log-barrier Newton
/// method. ApproxFeasible iff the optimum s* >= -tol; otherwise -s* is the
/// reported infeasibility measure.
inline SDPResult solve_feasibility(const SDPProblem &p, double tol = 1e-7, const SDPOptions &opt = {}) {
  const std::size_t ns = p.labels.size();
  const double K = p.K;
  // Unknowns: upper triangles of the A blocks.
  struct Var {
    std::size_t s, a, b;
  };
  std::vector<Var> vars;
  for (std::size_t s = 0; s < ns; ++s)
    for (int a = 0; a < p.multiplicities[s]; ++a)
      for (int b = a; b < p.multiplicities[s]; ++b) vars.push_back({s, std::size_t(a), std::size_t(b)});
  const std::size_t nv = vars.size(), nfull = p.index.size();
  // vec(A) = E y.
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(nfull, nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto &x = vars[v];
    const std::size_t m = p.multiplicities[x.s], o = p.offset(x.s);
    E(o + x.a * m + x.b, v) = 1;
    E(o + x.b * m + x.a, v) = 1;
  }
  const Eigen::MatrixXd MB = p.Md * E;  // vec(B) = MB y

  std::vector<Eigen::RowVectorXd> rows;
  std::vector<double> rhs;
  Eigen::RowVectorXd trA = Eigen::RowVectorXd::Zero(nv), trB = Eigen::RowVectorXd::Zero(nv);
  for (std::size_t s = 0; s < ns; ++s) {
    const std::size_t m = p.multiplicities[s], o = p.offset(s);
    for (std::size_t a = 0; a < m; ++a) {
      trA += E.row(o + a * m + a);
      trB += MB.row(o + a * m + a);
    }
  }
  rows.push_back(trA);
  rhs.push_back(K);
  rows.push_back(trB);
  rhs.push_back(K * K);
  for (auto s : p.detected) {
    const std::size_t m = p.multiplicities[s], o = p.offset(s);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b) {
        const std::size_t k = o + a * m + b;
        rows.push_back(p.mode == DetectionMode::Strict ? Eigen::RowVectorXd(E.row(k) - K * MB.row(k))
                                                       : Eigen::RowVectorXd(E.row(k)));
        rhs.push_back(0);
      }
  }
  Eigen::MatrixXd C(rows.size(), nv);
  Eigen::VectorXd d(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    C.row(i) = rows[i];
    d(i) = rhs[i];
  }

  SDPResult r;
  r.tol = tol;
  // y = y0 + Z t with Z an orthonormal basis of ker C.
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(C);
  cod.setThreshold(1e-11);
  const Eigen::VectorXd y0 = cod.solve(d);
  const double eq_res = (C * y0 - d).cwiseAbs().maxCoeff();
  if (eq_res > tol) {
    r.verdict = SDPResult::Verdict::LikelyInfeasible;
    r.infeasibility_measure = eq_res;
    r.max_residual = eq_res;
    return r;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(C, Eigen::ComputeFullV);
  const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-11 * std::max(1.0, smax)) ++rank;
  const Eigen::MatrixXd Z = svd.matrixV().rightCols(nv - rank);
  const std::size_t nt = Z.cols(), nz = nt + 1;  // last coordinate is s

  // Cone blocks as affine functions of z = (t, s).
  std::vector<detail::AffineBlock> cones;
  auto block_of = [&](const Eigen::VectorXd &vec, std::size_t s) {
    const std::size_t m = p.multiplicities[s], o = p.offset(s);
    Eigen::MatrixXd blk(m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) blk(a, b) = vec(o + a * m + b);
    return Eigen::MatrixXd(0.5 * (blk + blk.transpose()));
  };
  const Eigen::VectorXd a0 = E * y0, b0 = MB * y0;
  const Eigen::MatrixXd aZ = E * Z, bZ = MB * Z;
  for (std::size_t s = 0; s < ns; ++s) {
    const std::size_t m = p.multiplicities[s];
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(m, m);
    detail::AffineBlock ca, cb;
    ca.G0 = block_of(a0, s);
    cb.G0 = K * block_of(b0, s) - ca.G0;
    for (std::size_t i = 0; i < nt; ++i) {
      Eigen::MatrixXd ai = block_of(aZ.col(i), s);
      ca.Gi.push_back(ai);
      cb.Gi.push_back(K * block_of(bZ.col(i), s) - ai);
    }
    ca.Gi.push_back(-I);
    cb.Gi.push_back(-I);
    cones.push_back(std::move(ca));
    cones.push_back(std::move(cb));
  }

  double nu = 0;
  for (const auto &c : cones) nu += c.G0.rows();
  auto min_eig_at = [&](const Eigen::VectorXd &z) {
    double e = std::numeric_limits<double>::infinity();
    for (const auto &c : cones) e = std::min(e, detail::min_eigenvalue(c.at(z)));
    return e;
  };
  Eigen::VectorXd z = Eigen::VectorXd::Zero(nz);
  z(nt) = 0;
  z(nt) = min_eig_at(z) - 1.0;

  // phi(z) = -s / mu - sum log det G_k(z).
  auto barrier = [&](const Eigen::VectorXd &zz, double mu, double &val) {
    val = -zz(nt) / mu;
    for (const auto &c : cones) {
      Eigen::LLT<Eigen::MatrixXd> llt(c.at(zz));
      if (llt.info() != Eigen::Success) return false;
      const Eigen::MatrixXd &L = llt.matrixL();
      for (Eigen::Index i = 0; i < L.rows(); ++i) {
        if (!(L(i, i) > 0)) return false;
        val -= 2 * std::log(L(i, i));
      }
    }
    return true;
  };

  for (double mu = opt.mu_start; mu >= opt.mu_final * 0.999; mu *= opt.mu_factor) {
    for (int it = 0; it < opt.newton_per_stage; ++it) {
      ++r.iterations;
      Eigen::VectorXd g = Eigen::VectorXd::Zero(nz);
      g(nt) = -1.0 / mu;
      Eigen::MatrixXd H = Eigen::MatrixXd::Zero(nz, nz);
      for (const auto &c : cones) {
        const Eigen::MatrixXd Ginv = c.at(z).inverse();
        std::vector<Eigen::MatrixXd> W;
        for (std::size_t i = 0; i < nz; ++i) W.push_back(Ginv * c.Gi[i]);
        for (std::size_t i = 0; i < nz; ++i) {
          g(i) -= W[i].trace();
          for (std::size_t j = i; j < nz; ++j) {
            const double h = (W[i] * W[j]).trace();
            H(i, j) += h;
            if (i != j) H(j, i) += h;
          }
        }
      }
      Eigen::LDLT<Eigen::MatrixXd> ldlt(H);
      Eigen::VectorXd dz = -ldlt.solve(g);
      const double dec2 = -g.dot(dz);
      if (!std::isfinite(dec2) || dec2 < opt.newton_tol) break;
      double f0;
      barrier(z, mu, f0);
      double step = 1.0;
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls, step *= 0.5) {
        double f1;
        Eigen::VectorXd zn = z + step * dz;
        if (barrier(zn, mu, f1) && f1 <= f0 - 0.25 * step * dec2) {
          z = zn;
          moved = true;
          break;
        }
      }
      if (!moved) break;
      // Steps at rounding level: the stage has converged as far as doubles allow.
      if (step * dz.lpNorm<Eigen::Infinity>() <= 1e-13 * (1.0 + z.lpNorm<Eigen::Infinity>())) break;
      if (it == opt.newton_per_stage - 1) r.max_iterations = true;
    }
  }

  const Eigen::VectorXd y = y0 + Z * z.head(nt);
  const Eigen::VectorXd av = E * y, bv = MB * y;
  r.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < ns; ++s) {
    Eigen::MatrixXd A = block_of(av, s), B = block_of(bv, s);
    r.min_eigenvalue = std::min({r.min_eigenvalue, detail::min_eigenvalue(A), detail::min_eigenvalue(K * B - A)});
    r.A.push_back(A);
    r.B.push_back(B);
  }
  r.max_residual = (C * y - d).cwiseAbs().maxCoeff();
  r.residuals.push_back({"linear", r.max_residual, std::nullopt});
  const double s_star = z(nt);
  const bool ok = s_star >= -tol && r.max_residual <= tol;
  r.verdict = ok ? SDPResult::Verdict::ApproxFeasible : SDPResult::Verdict::LikelyInfeasible;
  r.infeasibility_measure = ok ? 0.0 : -s_star;
  return r;
}

/// Largest K in [k_min, k_max] that the solver reports feasible.
inline int sdp_scan_max_K(const BlockMacWilliams &b, const std::vector<std::size_t> &detected, DetectionMode mode,
                          int k_min, int k_max, double tol = 1e-7) {
  for (int K = k_max; K >= k_min; --K)
    if (solve_feasibility(build_sdp(b, K, detected, mode), tol).feasible()) return K;
  throw InfeasibleAll("no K in range is feasible");
}

}  // namespace imw
