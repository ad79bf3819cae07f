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

#include <set>
#include <string>
#include <vector>

#include "imw/codes.hpp"
#include "imw/lp.hpp"
#include "imw/sdp.hpp"
#include "json.hpp"

namespace imw {

using Json = nlohmann::json;

/// Always "p/q", integers included.
inline Json to_json(const Rational &r) { return r.numerator().get_str() + "/" + r.denominator().get_str(); }

inline Rational rational_from_json(const Json &j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

namespace detail {

inline Json integer_json(const mpz_class &z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline mpz_class integer_from_json(const Json &j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer " + j.dump());
    return z;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

inline void reject_unknown_keys(const Json &j, std::initializer_list<const char *> allowed, const std::string &what) {
  if (!j.is_object()) throw ParseError(what + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto &[k, v] : j.items())
    if (!ok.count(k)) throw ParseError("unknown field '" + k + "' in " + what);
}

inline const Json &required(const Json &j, const char *key, const std::string &what) {
  if (!j.contains(key)) throw ParseError(what + " is missing field '" + key + "'");
  return j.at(key);
}

}  // namespace detail

/// Radical as a list of [p, q, m] triples meaning sum (p/q) sqrt(m).
inline Json to_json(const Radical &r) {
  Json out = Json::array();
  for (const auto &[m, c] : r.terms())
    out.push_back({detail::integer_json(c.numerator()), detail::integer_json(c.denominator()), m});
  return out;
}

inline Radical radical_from_triple(const Json &t) {
  if (!t.is_array() || t.size() != 3) throw ParseError("radical term must be [p, q, m], got " + t.dump());
  mpz_class p = detail::integer_from_json(t[0]), q = detail::integer_from_json(t[1]),
            m = detail::integer_from_json(t[2]);
  if (q == 0) throw ParseError("zero denominator in " + t.dump());
  if (m <= 0) throw ParseError("radicand must be positive in " + t.dump());
  return Radical::term(Rational(p, q), m);
}

/// Accepts a single triple, a list of triples, or a plain rational.
inline Radical radical_from_json(const Json &j) {
  if (j.is_string() || j.is_number_integer()) return Radical(rational_from_json(j));
  if (!j.is_array()) throw ParseError("expected a radical, got " + j.dump());
  if (j.empty()) return {};
  if (!j[0].is_array()) return radical_from_triple(j);
  Radical r;
  for (const auto &t : j) r += radical_from_triple(t);
  return r;
}

template <class T>
Json to_json(const Matrix<T> &m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json to_json(const Eigen::MatrixXd &m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

inline Matrix<Rational> rational_matrix_from_json(const Json &j) {
  if (!j.is_array()) throw ParseError("matrix must be a nested array");
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  Matrix<Rational> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

inline Json to_json(const std::vector<Rational> &v) {
  Json out = Json::array();
  for (const auto &x : v) out.push_back(to_json(x));
  return out;
}

inline std::vector<Rational> rational_vector_from_json(const Json &j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> v;
  for (const auto &x : j) v.push_back(rational_from_json(x));
  return v;
}

/// "su2:4" (2j = 4) or "su3:2,2" (Dynkin labels).
inline IrrepLabel parse_irrep_label(const std::string &text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || text.rfind("su", 0) != 0) {
    throw ParseError("irrep label must look like su3:2,2, got '" + text + "'");
  }
  int q = 0;
  try {
    q = std::stoi(text.substr(2, colon - 2));
  } catch (const std::exception &) {
    throw ParseError("bad group in irrep label '" + text + "'");
  }
  std::vector<int> labels;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    std::string piece = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      labels.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception &) {
      throw ParseError("bad Dynkin label '" + piece + "' in '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  try {
    return IrrepLabel::su(q, labels);
  } catch (const Error &e) {
    throw ParseError(e.what());
  }
}

inline std::string irrep_label_key(const IrrepLabel &l) {
  std::string s = "su" + std::to_string(l.q) + ":";
  for (std::size_t i = 0; i < l.dynkin.size(); ++i) s += (i ? "," : "") + std::to_string(l.dynkin[i]);
  return s;
}

inline std::vector<IrrepLabel> labels_from_keys(const Json &j) {
  std::vector<IrrepLabel> out;
  for (const auto &k : j) out.push_back(parse_irrep_label(k.get<std::string>()));
  return out;
}

inline Json label_keys(const std::vector<IrrepLabel> &labels) {
  Json out = Json::array();
  for (const auto &l : labels) out.push_back(irrep_label_key(l));
  return out;
}

inline Json to_json(const std::vector<IrrepLabel> &labels) {
  Json out = Json::array();
  for (const auto &l : labels) out.push_back(l.str());
  return out;
}

inline Json to_json(const Ambient &a) {
  switch (a.kind) {
    case Ambient::Kind::SU2:
      return {{"type", "su2"}, {"two_j", a.two_j}};
    case Ambient::Kind::Sym:
      return {{"type", "sym"}, {"q", a.q}, {"n", a.n}};
    case Ambient::Kind::HW:
      return {{"type", "hw"}, {"label", irrep_label_key(a.hw)}};
  }
  throw Error("unknown ambient kind");
}

inline Ambient ambient_from_json(const Json &j) {
  const std::string what = "ambient";
  const std::string type = detail::required(j, "type", what).get<std::string>();
  if (type == "su2") {
    detail::reject_unknown_keys(j, {"type", "two_j"}, what);
    int tj = detail::required(j, "two_j", what).get<int>();
    if (tj < 0) throw ParseError("two_j must be nonnegative");
    return Ambient::su2(tj);
  }
  if (type == "sym") {
    detail::reject_unknown_keys(j, {"type", "q", "n"}, what);
    int q = detail::required(j, "q", what).get<int>(), n = detail::required(j, "n", what).get<int>();
    if (q < 2 || n < 0) throw ParseError("sym ambient needs q >= 2 and n >= 0");
    return Ambient::sym(q, n);
  }
  if (type == "hw") {
    detail::reject_unknown_keys(j, {"type", "label"}, what);
    return Ambient::highest_weight(parse_irrep_label(detail::required(j, "label", what).get<std::string>()));
  }
  throw ParseError("unknown ambient type '" + type + "'");
}

/// {ambient, codewords: [[amplitude triples]], name}. Each amplitude is a
/// single [p, q, m] triple meaning (p/q) sqrt(m).
inline Json to_json(const CodeSpec &c) {
  Json words = Json::array();
  for (const auto &w : c.codewords) {
    Json row = Json::array();
    for (const auto &a : w) {
      if (a.is_zero()) {
        row.push_back({0, 1, 1});
      } else {
        const auto &[m, coef] = a.terms().front();
        row.push_back({detail::integer_json(coef.numerator()), detail::integer_json(coef.denominator()), m});
      }
    }
    words.push_back(std::move(row));
  }
  return {{"name", c.name}, {"ambient", to_json(c.ambient)}, {"codewords", words}};
}

inline CodeSpec code_spec_from_json(const Json &j) {
  const std::string what = "code spec";
  detail::reject_unknown_keys(j, {"name", "ambient", "codewords"}, what);
  CodeSpec c;
  c.name = j.value("name", std::string("unnamed"));
  c.ambient = ambient_from_json(detail::required(j, "ambient", what));
  const Json &words = detail::required(j, "codewords", what);
  if (!words.is_array()) throw ParseError("codewords must be an array");
  for (const auto &w : words) {
    if (!w.is_array()) throw ParseError("codeword must be an array of amplitudes");
    std::vector<Radical> v;
    for (const auto &a : w) v.push_back(radical_from_json(a));
    c.codewords.push_back(std::move(v));
  }
  return c;
}

inline Json to_json(const EnumeratorData &d) {
  Json sectors = Json::array();
  for (const auto &s : d.sectors) {
    Json e = {{"sector_label", s.label.str()},
              {"depth", s.depth},
              {"multiplicity", s.multiplicity},
              {"dim", s.dim},
              {"A", to_json(s.A)},
              {"B", to_json(s.B)},
              {"A_tilde", s.A_tilde ? to_json(*s.A_tilde) : Json()},
              {"B_tilde", s.B_tilde ? to_json(*s.B_tilde) : Json()}};
    if (s.multiplicity > 1) e["copy_norms"] = to_json(s.copy_norms);
    if (s.detected) e["detected"] = *s.detected;
    sectors.push_back(std::move(e));
  }
  Json out = {{"name", d.name}, {"rep", d.rep_key}, {"N", d.N}, {"K", d.K}, {"sectors", sectors}};
  out["depth"] = d.depth ? Json(*d.depth) : Json();
  return out;
}

inline Json provenance(const std::string &rep_key, int basis_version) {
  return {{"rep", rep_key}, {"basis_convention_version", basis_version}};
}

inline Json to_json(const MacWilliamsMatrix &m) {
  return {{"kind", "scalar"},
          {"N", m.N},
          {"labels", to_json(m.labels)},
          {"label_keys", label_keys(m.labels)},
          {"dims", m.dims},
          {"depths", m.depths},
          {"M", to_json(m.M)},
          {"provenance", provenance(m.rep_key, m.basis_convention_version)}};
}

inline MacWilliamsMatrix macwilliams_from_json(const Json &j) {
  MacWilliamsMatrix m;
  m.N = j.at("N").get<std::size_t>();
  m.labels = labels_from_keys(j.at("label_keys"));
  m.dims = j.at("dims").get<std::vector<std::size_t>>();
  m.depths = j.at("depths").get<std::vector<int>>();
  m.M = rational_matrix_from_json(j.at("M"));
  m.rep_key = j.at("provenance").at("rep").get<std::string>();
  m.basis_convention_version = j.at("provenance").at("basis_convention_version").get<int>();
  return m;
}

inline Json to_json(const BlockMacWilliams &b) {
  Json norms = Json::array(), index = Json::array();
  for (const auto &n : b.copy_norms) norms.push_back(to_json(n));
  for (const auto &ix : b.index) index.push_back({ix.sector, ix.a, ix.b});
  return {{"kind", "block"},
          {"N", b.N},
          {"labels", to_json(b.labels)},
          {"label_keys", label_keys(b.labels)},
          {"multiplicities", b.multiplicities},
          {"dims", b.dims},
          {"depths", b.depths},
          {"copy_norms", norms},
          {"index", index},
          {"M", to_json(b.M)},
          {"provenance", provenance(b.rep_key, b.basis_convention_version)}};
}

inline BlockMacWilliams block_macwilliams_from_json(const Json &j) {
  BlockMacWilliams b;
  b.N = j.at("N").get<std::size_t>();
  b.labels = labels_from_keys(j.at("label_keys"));
  b.multiplicities = j.at("multiplicities").get<std::vector<int>>();
  b.dims = j.at("dims").get<std::vector<std::size_t>>();
  b.depths = j.at("depths").get<std::vector<int>>();
  for (const auto &n : j.at("copy_norms")) b.copy_norms.push_back(rational_vector_from_json(n));
  for (const auto &ix : j.at("index")) b.index.push_back({ix[0].get<std::size_t>(), ix[1].get<int>(), ix[2].get<int>()});
  b.M = rational_matrix_from_json(j.at("M"));
  b.rep_key = j.at("provenance").at("rep").get<std::string>();
  b.basis_convention_version = j.at("provenance").at("basis_convention_version").get<int>();
  if (b.M.rows() != b.index.size() || b.M.cols() != b.index.size()) throw ParseError("block transform shape");
  return b;
}

inline Json to_json(const LPProblem &lp) {
  Json cons = Json::array();
  for (const auto &c : lp.constraints)
    cons.push_back({{"name", c.name},
                    {"sense", c.sense == LinearConstraint::Sense::Eq ? "==" : ">="},
                    {"coeffs", to_json(c.coeffs)},
                    {"rhs", to_json(c.rhs)}});
  Json det = Json::array();
  for (auto i : lp.detected) det.push_back(lp.labels[i].str());
  return {{"K", lp.K}, {"N", lp.N}, {"variables", to_json(lp.labels)}, {"detected", det}, {"constraints", cons}};
}

inline Json to_json(const LPResult &r) {
  Json out = {{"verdict", r.feasible() ? "feasible" : "infeasible"}};
  if (r.feasible()) out["point"] = to_json(r.point);
  else out["farkas"] = to_json(r.farkas);
  return out;
}

inline Json to_json(const Uniqueness &u) {
  Json ranges = Json::array();
  for (const auto &[lo, hi] : u.ranges) ranges.push_back({to_json(lo), to_json(hi)});
  Json out = {{"unique", u.unique}, {"ranges", ranges}};
  out["point"] = u.point ? to_json(*u.point) : Json();
  return out;
}

inline Json to_json(const SDPResult &r) {
  Json res = Json::array();
  for (const auto &x : r.residuals) {
    Json e = {{"name", x.name}, {"value", x.value}};
    if (x.exact) e["exact"] = to_json(*x.exact);
    res.push_back(std::move(e));
  }
  Json A = Json::array(), B = Json::array();
  for (const auto &a : r.A) A.push_back(to_json(a));
  for (const auto &b : r.B) B.push_back(to_json(b));
  return {{"verdict", r.feasible() ? "approx_feasible" : "likely_infeasible"},
          {"tol", r.tol},
          {"max_residual", r.max_residual},
          {"min_eigenvalue", r.min_eigenvalue},
          {"infeasibility_measure", r.infeasibility_measure},
          {"iterations", r.iterations},
          {"max_iterations", r.max_iterations},
          {"residuals", res},
          {"A", A},
          {"B", B}};
}

}  // namespace imw
