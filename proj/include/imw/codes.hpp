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

#include <cmath>
#include <string>
#include <vector>

#include "imw/enumerators.hpp"
#include "imw/rep.hpp"

namespace imw {

/// Which representation a code lives in.
struct Ambient {
  enum class Kind { SU2, Sym, HW };
  Kind kind = Kind::SU2;
  int two_j = 0;      // SU2
  int q = 2, n = 0;   // Sym
  IrrepLabel hw;      // HW

  static Ambient su2(int two_j) { return {Kind::SU2, two_j, 2, 0, {}}; }
  static Ambient sym(int q, int n) { return {Kind::Sym, 0, q, n, {}}; }
  static Ambient highest_weight(IrrepLabel l) { return {Kind::HW, 0, l.q, 0, std::move(l)}; }

  Rep make_rep() const {
    switch (kind) {
      case Kind::SU2:
        return su2_irrep(two_j);
      case Kind::Sym:
        return sym_power_rep(q, n);
      case Kind::HW:
        return build_irrep_by_highest_weight(hw);
    }
    throw Error("unknown ambient kind");
  }
};

/// Code given by orthogonal codewords with amplitudes over the orthonormal basis
/// of the ambient representation.
struct CodeSpec {
  std::string name;
  Ambient ambient;
  std::vector<std::vector<Radical>> codewords;
};

inline Radical dot(const std::vector<Radical> &a, const std::vector<Radical> &b) {
  Radical s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

/// Checks amplitude shape, the single-term amplitude convention, nonzero
/// codewords and exact mutual orthogonality.
inline void validate_spec(const CodeSpec &spec, std::size_t N) {
  if (spec.codewords.empty()) throw InvalidSpec("code has no codewords");
  for (const auto &w : spec.codewords) {
    if (w.size() != N) {
      throw InvalidSpec("codeword has " + std::to_string(w.size()) + " amplitudes, ambient dimension is " +
                        std::to_string(N));
    }
    bool nonzero = false;
    for (const auto &c : w) {
      if (!c.is_pure()) throw InvalidSpec("amplitude " + c.str() + " is not a single term q*sqrt(m)");
      nonzero |= !c.is_zero();
    }
    if (!nonzero) throw InvalidSpec("zero codeword");
  }
  for (std::size_t a = 0; a < spec.codewords.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (!dot(spec.codewords[a], spec.codewords[b]).is_zero()) {
        throw NonOrthogonalCodewords("codewords " + std::to_string(b) + " and " + std::to_string(a) +
                                     " are not orthogonal");
      }
}

/// P = sum |psi><psi| / <psi|psi> in the orthonormal basis.
inline Matrix<Radical> projector_orthonormal(const CodeSpec &spec, std::size_t N) {
  validate_spec(spec, N);
  Matrix<Radical> P(N, N);
  for (const auto &w : spec.codewords) {
    Rational norm = dot(w, w).to_rational();
    for (std::size_t i = 0; i < N; ++i) {
      if (w[i].is_zero()) continue;
      for (std::size_t j = 0; j < N; ++j)
        if (!w[j].is_zero()) P(i, j) += w[i] * w[j] / norm;
    }
  }
  return P;
}

inline CodeProjector projector_from_spec(const CodeSpec &spec, const Rep &rep) {
  return make_code_projector(rep, rep.from_orthonormal(projector_orthonormal(spec, rep.dim)), spec.name);
}

inline CodeProjector projector_from_spec(const CodeSpec &spec) { return projector_from_spec(spec, spec.ambient.make_rep()); }

/// The three permutation-invariant example codes plus two trivial ones.
inline std::vector<CodeSpec> builtin_catalog() {
  std::vector<CodeSpec> out;
  const Radical half_sqrt2 = Radical::term(Rational(1, 2), 2u);
  const Radical third_sqrt3 = Radical::term(Rational(1, 3), 3u);
  auto basis = [](std::size_t n, std::size_t i) {
    std::vector<Radical> v(n);
    v[i] = Radical(1);
    return v;
  };
  {
    CodeSpec c{"5-2-2", Ambient::su2(4), {}};
    std::vector<Radical> w0(5);
    w0[0] = half_sqrt2;
    w0[4] = half_sqrt2;
    c.codewords = {w0, basis(5, 2)};
    out.push_back(c);
  }
  {
    CodeSpec c{"8-2-3", Ambient::su2(7), {}};
    auto amp = [](long m, int sign) { return Radical::term(Rational(sign, 8), static_cast<std::uint64_t>(m)); };
    std::vector<Radical> w0(8), w1(8);
    w0[0] = amp(15, 1);
    w0[2] = amp(7, 1);
    w0[4] = amp(21, 1);
    w0[6] = amp(21, -1);
    w1[7] = amp(15, 1);
    w1[5] = amp(7, 1);
    w1[3] = amp(21, 1);
    w1[1] = amp(21, -1);
    c.codewords = {w0, w1};
    out.push_back(c);
  }
  {
    CodeSpec c{"10-2-2", Ambient::sym(3, 3), {}};
    Rep r = sym_power_rep(3, 3);
    std::vector<Radical> w0(r.dim);
    for (auto occ : {std::vector<int>{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}) w0[r.index_of_occupation(occ)] = third_sqrt3;
    c.codewords = {w0, basis(r.dim, r.index_of_occupation({1, 1, 1}))};
    out.push_back(c);
  }
  out.push_back(CodeSpec{"top-state-j2", Ambient::su2(4), {basis(5, 0)}});
  {
    CodeSpec c{"full-j2", Ambient::su2(4), {}};
    for (std::size_t i = 0; i < 5; ++i) c.codewords.push_back(basis(5, i));
    out.push_back(c);
  }
  return out;
}

inline CodeSpec catalog_code(const std::string &name) {
  for (auto &c : builtin_catalog())
    if (c.name == name) return c;
  std::string names;
  for (auto &c : builtin_catalog()) names += " " + c.name;
  throw InvalidSpec("unknown catalog code '" + name + "'; available:" + names);
}

/// Isometric image of a Sym^n(C^q) vector (orthonormal occupation basis) in
/// (C^q)^{(x)n}. Site 0 is the most significant digit of the index.
inline std::vector<Radical> dicke_embed(int q, int n, const std::vector<Radical> &v) {
  Rep r = sym_power_rep(q, n);
  if (v.size() != r.dim) throw DimensionMismatch("vector size differs from Sym^n(C^q)");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  std::vector<Radical> out(total);
  std::vector<Radical> scale(r.dim);
  for (std::size_t a = 0; a < r.dim; ++a)
    if (!v[a].is_zero()) scale[a] = v[a] * Radical::sqrt(Rational(1) / r.metric[a]);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<int> occ(q, 0);
    for (std::size_t t = idx, s = 0; s < static_cast<std::size_t>(n); ++s, t /= q) ++occ[t % q];
    std::size_t a = r.index_of_occupation(occ);
    out[idx] = scale[a];
  }
  return out;
}

struct PhysicalDistance {
  int distance = 0;
  double passing_margin = 0;  // largest KL deviation among weights that passed
  double failing_margin = 0;  // largest KL deviation at the first failing weight (0 if none failed)
};

/// Brute-force Knill-Laflamme distance of a code on n qudits, in floating point.
/// Errors of weight w are products of traceless local operators on w sites.
inline PhysicalDistance physical_distance_bruteforce(std::vector<std::vector<double>> codewords, int q, int n,
                                                     int t_max, double tol = 1e-9, std::size_t max_dim = 729) {
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  if (total > max_dim) throw TooLarge("Hilbert space dimension " + std::to_string(total) + " exceeds cap");
  for (auto &w : codewords)
    if (w.size() != total) throw DimensionMismatch("codeword length differs from q^n");
  // Gram-Schmidt so that the KL matrix is compared against c * identity.
  for (std::size_t a = 0; a < codewords.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      double d = 0;
      for (std::size_t i = 0; i < total; ++i) d += codewords[a][i] * codewords[b][i];
      for (std::size_t i = 0; i < total; ++i) codewords[a][i] -= d * codewords[b][i];
    }
    double nrm = 0;
    for (double x : codewords[a]) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (double &x : codewords[a]) x /= nrm;
  }
  // Local traceless basis: E_ab (a != b) and E_00 - E_kk.
  std::vector<std::vector<double>> local;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (a == b) continue;
      std::vector<double> m(q * q, 0);
      m[a * q + b] = 1;
      local.push_back(m);
    }
  for (int k = 1; k < q; ++k) {
    std::vector<double> m(q * q, 0);
    m[0] = 1;
    m[k * q + k] = -1;
    local.push_back(m);
  }
  std::vector<std::size_t> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * q;
  auto apply_site = [&](const std::vector<double> &v, int site, const std::vector<double> &op) {
    std::vector<double> out(total, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (v[idx] == 0) continue;
      int d = static_cast<int>(idx / stride[site] % q);
      for (int r = 0; r < q; ++r) {
        double c = op[r * q + d];
        if (c != 0) out[idx + (r - d) * static_cast<long>(stride[site])] += c * v[idx];
      }
    }
    return out;
  };

  PhysicalDistance res;
  const std::size_t K = codewords.size();
  for (int w = 1; w <= t_max; ++w) {
    double worst = 0;
    std::vector<int> support;
    auto visit_support = [&](auto &&self, int start) -> void {
      if (static_cast<int>(support.size()) == w) {
        std::vector<std::size_t> choice(w, 0);
        while (true) {
          std::vector<std::vector<double>> images;
          for (const auto &cw : codewords) {
            std::vector<double> v = cw;
            for (int s = 0; s < w; ++s) v = apply_site(v, support[s], local[choice[s]]);
            images.push_back(std::move(v));
          }
          double diag0 = 0;
          for (std::size_t k = 0; k < K; ++k)
            for (std::size_t l = 0; l < K; ++l) {
              double x = 0;
              for (std::size_t i = 0; i < total; ++i) x += codewords[k][i] * images[l][i];
              if (k == 0 && l == 0) diag0 = x;
              double dev = k == l ? std::abs(x - diag0) : std::abs(x);
              worst = std::max(worst, dev);
            }
          int s = 0;
          while (s < w && ++choice[s] == local.size()) choice[s++] = 0;
          if (s == w) break;
        }
        return;
      }
      for (int site = start; site < n; ++site) {
        support.push_back(site);
        self(self, site + 1);
        support.pop_back();
      }
    };
    visit_support(visit_support, 0);
    if (worst > tol) {
      res.distance = w;
      res.failing_margin = worst;
      return res;
    }
    res.passing_margin = std::max(res.passing_margin, worst);
  }
  res.distance = t_max + 1;
  return res;
}

/// Codewords of a symmetric-power code embedded into n qudits, as doubles.
inline std::vector<std::vector<double>> embedded_codewords(const CodeSpec &spec) {
  int q = 2, n = 0;
  if (spec.ambient.kind == Ambient::Kind::SU2) {
    n = spec.ambient.two_j;
  } else if (spec.ambient.kind == Ambient::Kind::Sym) {
    q = spec.ambient.q;
    n = spec.ambient.n;
  } else {
    throw InvalidSpec("only symmetric-power codes embed into qudit registers");
  }
  std::vector<std::vector<double>> out;
  for (const auto &w : spec.codewords) {
    std::vector<double> v;
    for (const auto &x : dicke_embed(q, n, w)) v.push_back(x.to_double());
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace imw
