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

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "imw/reproduce.hpp"

namespace imw::cli {

/// Parses "key=value" tokens into integers; every key in `keys` must appear once.
inline std::map<std::string, int> parse_assignments(const std::vector<std::string> &tokens,
                                                    std::initializer_list<const char *> keys, const std::string &flag) {
  std::map<std::string, int> out;
  for (const auto &tok : tokens) {
    std::istringstream words(tok);
    std::string w;
    while (words >> w) {
      auto eq = w.find('=');
      if (eq == std::string::npos) throw ParseError(flag + ": expected key=value, got '" + w + "'");
      std::string key = w.substr(0, eq), val = w.substr(eq + 1);
      if (std::find_if(keys.begin(), keys.end(), [&](const char *k) { return key == k; }) == keys.end())
        throw ParseError(flag + ": unknown key '" + key + "'");
      if (out.count(key)) throw ParseError(flag + ": '" + key + "' given twice");
      try {
        std::size_t used = 0;
        out[key] = std::stoi(val, &used);
        if (used != val.size()) throw std::invalid_argument(val);
      } catch (const std::exception &) {
        throw ParseError(flag + ": '" + val + "' is not an integer");
      }
    }
  }
  for (const char *k : keys)
    if (!out.count(k)) throw ParseError(flag + ": missing " + k + "=");
  return out;
}

struct RepSelector {
  std::vector<std::string> su2, sym;
  std::string hw;

  void add_to(CLI::App *app) {
    app->add_option("--su2", su2, "SU(2) irrep, e.g. 2j=4")->expected(1);
    app->add_option("--sym", sym, "symmetric power Sym^n(C^q), e.g. q=3 n=3")->expected(1, 2);
    app->add_option("--hw", hw, "SU(q) irrep by Dynkin labels, e.g. su3:2,2");
  }

  Ambient ambient() const {
    const int given = !su2.empty() + !sym.empty() + !hw.empty();
    if (given != 1) throw ParseError("give exactly one of --su2, --sym, --hw");
    if (!su2.empty()) {
      const int tj = parse_assignments(su2, {"2j"}, "--su2").at("2j");
      if (tj < 0) throw ParseError("--su2: 2j must be nonnegative");
      return Ambient::su2(tj);
    }
    if (!sym.empty()) {
      auto kv = parse_assignments(sym, {"q", "n"}, "--sym");
      if (kv["q"] < 2 || kv["n"] < 1) throw ParseError("--sym: need q >= 2 and n >= 1");
      return Ambient::sym(kv["q"], kv["n"]);
    }
    return Ambient::highest_weight(parse_irrep_label(hw));
  }
};

inline std::string pad(const std::string &s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

inline void print_matrix(std::ostream &out, const Matrix<Rational> &m) {
  std::size_t w = 1;
  for (const auto &v : m.data()) w = std::max(w, v.str().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "  " : "") << std::setw(static_cast<int>(w)) << m(i, j).str();
    out << "]\n";
  }
}

inline std::string join(const std::vector<Rational> &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

/// Sector indices from a comma list of labels as printed ("1", "3/2", "(1,1)").
inline std::vector<std::size_t> parse_sector_list(const std::string &text, const std::vector<IrrepLabel> &labels) {
  std::vector<std::size_t> out;
  std::size_t depth = 0, start = 0;
  auto take = [&](std::size_t end) {
    std::string tok = text.substr(start, end - start);
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (tok.empty()) return;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i].str() == tok) {
        out.push_back(i);
        return;
      }
    throw ParseError("--E: no sector labelled '" + tok + "'");
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == ',' && depth == 0) {
      take(i);
      start = i + 1;
    }
  }
  take(text.size());
  return out;
}

struct Context {
  std::ostream &out;
  bool json = false;
  bool use_cache = true;
};

inline int cmd_transform(Context &ctx, const Ambient &amb) {
  Rep rep = amb.make_rep();
  SectorSet set = conjugation_sectors(rep);
  if (set.multiplicity_free()) {
    auto m = ctx.use_cache ? cached_macwilliams(rep, true) : macwilliams_from_sectors(set);
    const bool orth = verify_weighted_orthogonality(m), row = verify_first_row(m);
    if (ctx.json) {
      Json j = to_json(m);
      j["D"] = to_json(dims_diagonal(m));
      j["checks"] = {{"weighted_orthogonality", orth}, {"first_row", row}};
      ctx.out << j.dump(2) << "\n";
    } else {
      ctx.out << "rep " << rep.key << ", N = " << m.N << "\n";
      ctx.out << "sector  depth  dim\n";
      for (std::size_t i = 0; i < m.size(); ++i)
        ctx.out << pad(m.labels[i].str(), 8) << pad(std::to_string(m.depths[i]), 7) << m.dims[i] << "\n";
      ctx.out << "M (rows: twirl sector, columns: projector sector)\n";
      print_matrix(ctx.out, m.M);
      ctx.out << "D = diag(dims)\n";
      ctx.out << "M D M^T = D: " << (orth ? "yes" : "NO") << "\n";
      ctx.out << "first row 1/N: " << (row ? "yes" : "NO") << "\n";
    }
    return orth && row ? 0 : 1;
  }
  auto b = cached_block_macwilliams(rep, ctx.use_cache);
  const bool orth = verify_weighted_orthogonality(b);
  if (ctx.json) {
    Json j = to_json(b);
    j["checks"] = {{"weighted_orthogonality", orth}};
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "rep " << rep.key << ", N = " << b.N << ", block transform of size " << b.index.size() << "\n";
    ctx.out << "sector    depth  dim   mult  copy norms\n";
    for (std::size_t s = 0; s < b.labels.size(); ++s)
      ctx.out << pad(b.labels[s].str(), 10) << pad(std::to_string(b.depths[s]), 7) << pad(std::to_string(b.dims[s]), 6)
              << pad(std::to_string(b.multiplicities[s]), 6) << join(b.copy_norms[s]) << "\n";
    ctx.out << "weighted orthogonality: " << (orth ? "yes" : "NO") << "\n";
    ctx.out << "(use --json for the full matrix)\n";
  }
  return orth ? 0 : 1;
}

inline int cmd_enumerate(Context &ctx, const std::string &catalog, const std::string &file) {
  if (catalog.empty() == file.empty()) throw ParseError("give exactly one of --catalog or --code");
  CodeSpec spec;
  if (!catalog.empty()) {
    spec = catalog_code(catalog);
  } else {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception &e) {
      throw ParseError(file + ": " + e.what());
    }
    spec = code_spec_from_json(j);
  }
  Rep rep = spec.ambient.make_rep();
  SectorSet set = conjugation_sectors(rep);
  auto data = compute_enumerators(projector_from_spec(spec, rep), set, true);
  if (ctx.json) {
    ctx.out << to_json(data).dump(2) << "\n";
    return 0;
  }
  ctx.out << "code " << data.name << " in " << data.rep_key << ", N = " << data.N << ", K = " << data.K << "\n";
  const bool scalar = set.multiplicity_free();
  ctx.out << "sector    depth  A~" << std::string(10, ' ') << "B~" << std::string(10, ' ') << "detected\n";
  for (const auto &s : data.sectors) {
    ctx.out << pad(s.label.str(), 10) << pad(std::to_string(s.depth), 7) << pad(s.A_tilde->str(), 12)
            << pad(s.B_tilde->str(), 12) << (s.detected && *s.detected ? "yes" : "no") << "\n";
    if (!scalar && s.multiplicity > 1) {
      ctx.out << "  A block (copy basis)\n";
      print_matrix(ctx.out, s.A);
      ctx.out << "  B block (copy basis)\n";
      print_matrix(ctx.out, s.B);
    }
  }
  ctx.out << "A~ = " << join(data.A_tilde()) << "\n";
  ctx.out << "B~ = " << join(data.B_tilde()) << "\n";
  ctx.out << "depth " << (data.depth ? std::to_string(*data.depth) : "undefined") << "\n";
  return 0;
}

struct BoundArgs {
  int K = 0;
  int d = 0;
  std::string E;
  std::string engine = "lp";
  std::string mode = "strict";
  double tol = kSdpTolerance;
  std::string expect;
};

inline DetectionMode parse_mode(const std::string &m) {
  if (m == "strict") return DetectionMode::Strict;
  if (m == "vanishing") return DetectionMode::Vanishing;
  throw ParseError("--mode must be strict or vanishing");
}

inline std::vector<std::size_t> detected_from(const BoundArgs &a, const std::vector<IrrepLabel> &labels,
                                              const std::vector<int> &depths) {
  if ((a.d > 0) == !a.E.empty()) throw ParseError("give exactly one of --d or --E");
  return a.d > 0 ? detected_below_depth(depths, a.d) : parse_sector_list(a.E, labels);
}

inline int expectation_code(Context &ctx, const std::string &expect, bool feasible) {
  if (expect.empty()) return 0;
  if (expect != "feasible" && expect != "infeasible") throw ParseError("--expect must be feasible or infeasible");
  const bool met = (expect == "feasible") == feasible;
  if (!ctx.json) ctx.out << "expected " << expect << ": " << (met ? "met" : "NOT met") << "\n";
  return met ? 0 : 1;
}

inline MacWilliamsMatrix lp_transform(const Rep &rep, bool use_cache) {
  try {
    return cached_macwilliams(rep, use_cache);
  } catch (const MultiplicityPresent &) {
    throw MultiplicityPresent(rep.key + " has repeated sectors; the LP needs a multiplicity-free rep, use --engine sdp");
  }
}

inline int cmd_bound(Context &ctx, const Ambient &amb, const BoundArgs &a) {
  if (a.K < 1) throw ParseError("--K must be a positive integer");
  Rep rep = amb.make_rep();
  if (a.engine == "lp") {
    auto m = lp_transform(rep, ctx.use_cache);
    auto lp = build_lp(m, a.K, detected_from(a, m.labels, m.depths));
    auto res = solve(lp);
    std::optional<Uniqueness> u;
    if (res.feasible()) u = check_uniqueness(lp);
    if (ctx.json) {
      Json j = {{"engine", "lp"}, {"rep", rep.key}, {"problem", to_json(lp)}, {"result", to_json(res)}};
      if (u) j["uniqueness"] = to_json(*u);
      else j["certificate_verified"] = verify_farkas(lp, res.farkas);
      ctx.out << j.dump(2) << "\n";
    } else {
      ctx.out << "LP for " << rep.key << ", K = " << a.K << ", detected {";
      for (std::size_t i = 0; i < lp.detected.size(); ++i) ctx.out << (i ? ", " : "") << lp.labels[lp.detected[i]].str();
      ctx.out << "}\n";
      if (res.feasible()) {
        ctx.out << "feasible, point A~ = " << join(res.point) << "\n";
        if (u->unique) {
          ctx.out << "unique feasible point\n";
        } else {
          ctx.out << "not unique; coordinate ranges:\n";
          for (std::size_t i = 0; i < u->ranges.size(); ++i)
            ctx.out << "  " << pad(lp.labels[i].str(), 8) << "[" << u->ranges[i].first << ", " << u->ranges[i].second
                    << "]\n";
        }
      } else {
        ctx.out << "infeasible; Farkas certificate (verified exactly):\n";
        for (std::size_t i = 0; i < lp.constraints.size(); ++i)
          if (!res.farkas[i].is_zero()) ctx.out << "  " << pad(lp.constraints[i].name, 16) << res.farkas[i] << "\n";
      }
    }
    return expectation_code(ctx, a.expect, res.feasible());
  }
  if (a.engine != "sdp") throw ParseError("--engine must be lp or sdp");
  auto b = cached_block_macwilliams(rep, ctx.use_cache);
  auto p = build_sdp(b, a.K, detected_from(a, b.labels, b.depths), parse_mode(a.mode));
  auto res = solve_feasibility(p, a.tol);
  if (ctx.json) {
    ctx.out << Json{{"engine", "sdp"}, {"rep", rep.key}, {"K", a.K}, {"mode", mode_name(p.mode)}, {"result", to_json(res)}}
                   .dump(2)
            << "\n";
  } else {
    ctx.out << "SDP for " << rep.key << ", K = " << a.K << ", " << mode_name(p.mode) << " detection of {";
    for (std::size_t i = 0; i < p.detected.size(); ++i) ctx.out << (i ? ", " : "") << p.labels[p.detected[i]].str();
    ctx.out << "}\n";
    ctx.out << (res.feasible() ? "ApproxFeasible" : "LikelyInfeasible") << " at tol " << res.tol << "\n";
    ctx.out << "  min eigenvalue " << res.min_eigenvalue << ", max residual " << res.max_residual
            << ", infeasibility " << res.infeasibility_measure << ", iterations " << res.iterations
            << (res.max_iterations ? " (iteration limit hit)" : "") << "\n";
  }
  return expectation_code(ctx, a.expect, res.feasible());
}

inline int cmd_scan_k(Context &ctx, const Ambient &amb, const BoundArgs &a, int kmin, int kmax) {
  Rep rep = amb.make_rep();
  if (kmax <= 0) kmax = static_cast<int>(rep.dim);
  std::optional<int> best;
  std::vector<std::pair<int, bool>> rows;
  if (a.engine == "lp") {
    auto m = lp_transform(rep, ctx.use_cache);
    auto det = detected_from(a, m.labels, m.depths);
    for (int K = kmin; K <= kmax; ++K) {
      bool f = solve(build_lp(m, K, det)).feasible();
      rows.emplace_back(K, f);
      if (f) best = K;
    }
  } else if (a.engine == "sdp") {
    auto b = cached_block_macwilliams(rep, ctx.use_cache);
    auto det = detected_from(a, b.labels, b.depths);
    for (int K = kmin; K <= kmax; ++K) {
      bool f = solve_feasibility(build_sdp(b, K, det, parse_mode(a.mode)), a.tol).feasible();
      rows.emplace_back(K, f);
      if (f) best = K;
    }
  } else {
    throw ParseError("--engine must be lp or sdp");
  }
  if (ctx.json) {
    Json r = Json::array();
    for (auto [K, f] : rows) r.push_back({{"K", K}, {"feasible", f}});
    ctx.out << Json{{"rep", rep.key}, {"engine", a.engine}, {"scan", r}, {"max_K", best ? Json(*best) : Json()}}.dump(2)
            << "\n";
  } else {
    for (auto [K, f] : rows) ctx.out << "K = " << K << ": " << (f ? "feasible" : "infeasible") << "\n";
    ctx.out << "largest feasible K: " << (best ? std::to_string(*best) : "none") << "\n";
  }
  return best ? 0 : 1;
}

inline int cmd_scan_d(Context &ctx, const Ambient &amb, const BoundArgs &a) {
  if (a.K < 1) throw ParseError("--K must be a positive integer");
  Rep rep = amb.make_rep();
  std::vector<std::pair<int, bool>> rows;
  std::optional<int> best;
  auto run = [&](const std::vector<int> &depths, auto feasible_at) {
    const int top = *std::max_element(depths.begin(), depths.end()) + 1;
    for (int d = 1; d <= top; ++d) {
      bool f = feasible_at(detected_below_depth(depths, d));
      rows.emplace_back(d, f);
      if (!f) break;
      best = d;
    }
  };
  if (a.engine == "lp") {
    auto m = lp_transform(rep, ctx.use_cache);
    run(m.depths, [&](const auto &det) { return solve(build_lp(m, a.K, det)).feasible(); });
  } else if (a.engine == "sdp") {
    auto b = cached_block_macwilliams(rep, ctx.use_cache);
    run(b.depths, [&](const auto &det) {
      return solve_feasibility(build_sdp(b, a.K, det, parse_mode(a.mode)), a.tol).feasible();
    });
  } else {
    throw ParseError("--engine must be lp or sdp");
  }
  if (ctx.json) {
    Json r = Json::array();
    for (auto [d, f] : rows) r.push_back({{"d", d}, {"feasible", f}});
    ctx.out << Json{{"rep", rep.key}, {"engine", a.engine}, {"K", a.K}, {"scan", r}, {"max_d", best ? Json(*best) : Json()}}
                   .dump(2)
            << "\n";
  } else {
    for (auto [d, f] : rows) ctx.out << "d = " << d << ": " << (f ? "feasible" : "infeasible") << "\n";
    ctx.out << "largest feasible d: " << (best ? std::to_string(*best) : "none") << "\n";
  }
  return best ? 0 : 1;
}

inline Json to_json(const CriterionReport &r) {
  return {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"notes", r.notes}, {"seconds", r.seconds}};
}

inline int cmd_reproduce(Context &ctx, ReproduceOptions opt, const std::vector<int> &only) {
  opt.use_cache = ctx.use_cache;
  Reproduction suite(opt);
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= Reproduction::kCriteria; ++i) ids.push_back(i);
  bool all = true;
  Json reports = Json::array();
  for (int id : ids) {
    if (id < 1 || id > Reproduction::kCriteria) throw ParseError("no criterion " + std::to_string(id));
    auto r = suite.run(id);
    all &= r.passed;
    if (ctx.json) {
      reports.push_back(to_json(r));
    } else {
      ctx.out << "criterion " << std::setw(2) << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << " ("
              << std::fixed << std::setprecision(2) << r.seconds << " s)\n"
              << std::defaultfloat << std::setprecision(6);
      for (const auto &n : r.notes) ctx.out << "    " << n << "\n";
      ctx.out.flush();
    }
  }
  if (ctx.json)
    ctx.out << Json{{"passed", all}, {"include_slow", opt.include_slow}, {"criteria", reports}}.dump(2) << "\n";
  else
    ctx.out << (all ? "all requested criteria pass" : "some criteria FAILED") << "\n";
  return all ? 0 : 1;
}

/// Entry point of the imw command. Returns the process exit code:
/// 0 when every requested check passes, 1 when a check fails, 2 on usage or input errors.
inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Intrinsic MacWilliams transforms, enumerators and LP/SDP bounds for symmetric codes"};
  app.require_subcommand(1, 1);
  bool json = false, no_cache = false;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--no-cache", no_cache, "recompute transforms instead of using the cache");

  RepSelector rep_t, rep_b, rep_k, rep_d;
  auto *transform = app.add_subcommand("transform", "print the MacWilliams transform of a representation");
  rep_t.add_to(transform);

  std::string catalog, code_file;
  auto *enumerate = app.add_subcommand("enumerate", "enumerators, depth and detected sectors of a code");
  enumerate->add_option("--catalog", catalog, "built-in code name, e.g. 5-2-2");
  enumerate->add_option("--code", code_file, "code specification JSON file");

  BoundArgs bound_args, scan_k_args, scan_d_args;
  auto add_bound_opts = [](CLI::App *c, BoundArgs &a, bool with_K, bool with_detect) {
    if (with_K) c->add_option("--K", a.K, "code dimension")->required();
    if (with_detect) {
      c->add_option("--d", a.d, "detect every sector of depth below d");
      c->add_option("--E", a.E, "comma-separated sector labels to detect");
    }
    c->add_option("--engine", a.engine, "lp or sdp")->capture_default_str();
    c->add_option("--mode", a.mode, "SDP detection: strict (A = K B) or vanishing (A = 0)")->capture_default_str();
    c->add_option("--tol", a.tol, "SDP tolerance")->capture_default_str();
  };
  auto *bound = app.add_subcommand("bound", "LP or SDP feasibility of a code with given K and detected sectors");
  rep_b.add_to(bound);
  add_bound_opts(bound, bound_args, true, true);
  bound->add_option("--expect", bound_args.expect, "exit nonzero unless the verdict is feasible/infeasible");

  int kmin = 1, kmax = 0;
  auto *scan_k = app.add_subcommand("scan-k", "largest feasible K for fixed detected sectors");
  rep_k.add_to(scan_k);
  add_bound_opts(scan_k, scan_k_args, false, true);
  scan_k->add_option("--kmin", kmin, "smallest K")->capture_default_str();
  scan_k->add_option("--kmax", kmax, "largest K (default N)");

  auto *scan_d = app.add_subcommand("scan-d", "largest feasible d for fixed K");
  rep_d.add_to(scan_d);
  add_bound_opts(scan_d, scan_d_args, true, false);

  ReproduceOptions ropt;
  std::vector<int> only;
  auto *reproduce = app.add_subcommand("reproduce", "run the reproduction criteria");
  reproduce->add_flag("--include-slow", ropt.include_slow, "larger samples and tolerance sweeps");
  reproduce->add_option("--only", only, "criterion numbers to run")->delimiter(',');
  reproduce->add_option("--seed", ropt.seed, "sampling seed")->capture_default_str();

  for (auto *sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  Context ctx{out, json, !no_cache};
  try {
    if (*transform) return cmd_transform(ctx, rep_t.ambient());
    if (*enumerate) return cmd_enumerate(ctx, catalog, code_file);
    if (*bound) return cmd_bound(ctx, rep_b.ambient(), bound_args);
    if (*scan_k) return cmd_scan_k(ctx, rep_k.ambient(), scan_k_args, kmin, kmax);
    if (*scan_d) return cmd_scan_d(ctx, rep_d.ambient(), scan_d_args);
    if (*reproduce) return cmd_reproduce(ctx, ropt, only);
  } catch (const Error &e) {
    err << "imw: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace imw::cli
