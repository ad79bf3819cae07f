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
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "imw/rational.hpp"

namespace imw {

/// Irreducible representation of SU(q) by Dynkin labels (a_1..a_{q-1}).
/// SU(2) uses the single label 2j.
struct IrrepLabel {
  int q = 2;
  std::vector<int> dynkin{0};

  static IrrepLabel su2(int two_j) { return {2, {two_j}}; }
  static IrrepLabel su(int q, std::vector<int> labels) {
    if (q < 2 || static_cast<int>(labels.size()) != q - 1) throw Error("Dynkin label length must be q-1");
    for (int a : labels)
      if (a < 0) throw Error("Dynkin labels must be nonnegative");
    return {q, std::move(labels)};
  }
  static IrrepLabel trivial(int q) { return {q, std::vector<int>(q - 1, 0)}; }
  /// Adjoint representation: spin 1 for SU(2), (1,0,..,0,1) otherwise.
  static IrrepLabel adjoint(int q) {
    if (q == 2) return su2(2);
    std::vector<int> a(q - 1, 0);
    a.front() = 1;
    a.back() = 1;
    return {q, a};
  }

  bool is_trivial() const {
    return std::all_of(dynkin.begin(), dynkin.end(), [](int a) { return a == 0; });
  }
  int level() const { return std::accumulate(dynkin.begin(), dynkin.end(), 0); }

  /// Partition form (lambda_1 >= .. >= lambda_q = 0).
  std::vector<int> partition() const {
    std::vector<int> p(q, 0);
    for (int i = q - 2; i >= 0; --i) p[i] = p[i + 1] + dynkin[i];
    return p;
  }
  static IrrepLabel from_partition(const std::vector<int> &p) {
    IrrepLabel l;
    l.q = static_cast<int>(p.size());
    l.dynkin.assign(l.q - 1, 0);
    for (int i = 0; i + 1 < l.q; ++i) l.dynkin[i] = p[i] - p[i + 1];
    return l;
  }

  /// SU(2): spin as "k" or "k/2"; SU(q): "(a1,a2,..)".
  std::string str() const {
    if (q == 2) {
      int t = dynkin[0];
      return t % 2 == 0 ? std::to_string(t / 2) : std::to_string(t) + "/2";
    }
    std::string s = "(";
    for (std::size_t i = 0; i < dynkin.size(); ++i) s += (i ? "," : "") + std::to_string(dynkin[i]);
    return s + ")";
  }

  friend bool operator==(const IrrepLabel &, const IrrepLabel &) = default;
  friend auto operator<=>(const IrrepLabel &, const IrrepLabel &) = default;
};

/// Display order for sector lists: trivial first, then by total level, larger
/// extreme label first, then lexicographically descending.
inline bool sector_order_less(const IrrepLabel &a, const IrrepLabel &b) {
  if (a.level() != b.level()) return a.level() < b.level();
  int ma = *std::max_element(a.dynkin.begin(), a.dynkin.end());
  int mb = *std::max_element(b.dynkin.begin(), b.dynkin.end());
  if (ma != mb) return ma > mb;
  return a.dynkin > b.dynkin;
}

/// Weyl dimension formula on partition coordinates.
inline std::uint64_t weyl_dimension(const IrrepLabel &l) {
  auto p = l.partition();
  Rational d = 1;
  for (int i = 0; i < l.q; ++i)
    for (int j = i + 1; j < l.q; ++j) d *= Rational(p[i] - p[j] + j - i, j - i);
  if (!d.is_integer()) throw InternalInconsistency("non-integral Weyl dimension");
  return d.numerator().get_ui();
}

namespace detail {

/// Kostka number K_{lambda,mu} by peeling horizontal strips of size mu_last.
inline std::uint64_t kostka_rec(const std::vector<int> &lambda, std::vector<int> mu,
                                std::map<std::pair<std::vector<int>, std::vector<int>>, std::uint64_t> &memo) {
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  int total = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (mu.empty()) return total == 0 ? 1 : 0;
  int nonzero = static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [](int x) { return x > 0; }));
  if (nonzero > static_cast<int>(mu.size())) return 0;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int strip = mu.back();
  mu.pop_back();
  std::uint64_t count = 0;
  std::vector<int> child(lambda.size());
  // Remove a horizontal strip: lambda_{i+1} <= child_i <= lambda_i, total removed = strip.
  auto rec = [&](auto &&self, std::size_t i, int left) -> void {
    if (i == lambda.size()) {
      if (left == 0) count += kostka_rec(child, mu, memo);
      return;
    }
    int lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int c = lambda[i]; c >= lo; --c) {
      int removed = lambda[i] - c;
      if (removed > left) break;
      child[i] = c;
      self(self, i + 1, left - removed);
    }
  };
  rec(rec, 0, strip);
  memo[key] = count;
  return count;
}

inline void compositions(int total, int parts, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur.push_back(v);
    compositions(total - v, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::uint64_t kostka(const std::vector<int> &lambda, std::vector<int> mu) {
  std::sort(mu.begin(), mu.end(), std::greater<>());
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::uint64_t> memo;
  return detail::kostka_rec(lambda, mu, memo);
}

/// Weights of an irrep in partition coordinates (compositions of |lambda|), with multiplicities.
inline std::map<std::vector<int>, std::uint64_t> weight_multiplicities(const IrrepLabel &l) {
  auto lambda = l.partition();
  int total = std::accumulate(lambda.begin(), lambda.end(), 0);
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  detail::compositions(total, l.q, cur, comps);
  std::map<std::vector<int>, std::uint64_t> out;
  std::map<std::vector<int>, std::uint64_t> by_sorted;
  for (auto &c : comps) {
    auto s = c;
    std::sort(s.begin(), s.end(), std::greater<>());
    auto it = by_sorted.find(s);
    std::uint64_t k = it != by_sorted.end() ? it->second : (by_sorted[s] = kostka(lambda, s));
    if (k) out[c] = k;
  }
  return out;
}

/// Tensor product multiplicities via Brauer-Klimyk in partition coordinates.
inline std::map<IrrepLabel, int> tensor_decompose(const IrrepLabel &a, const IrrepLabel &b) {
  if (a.q != b.q) throw Error("tensor_decompose needs labels of the same group");
  const int q = a.q;
  // Enumerate weights of the smaller factor.
  auto boxes = [](const IrrepLabel &l) {
    auto p = l.partition();
    return std::accumulate(p.begin(), p.end(), 0);
  };
  const bool a_small = boxes(a) <= boxes(b);
  const IrrepLabel &big = a_small ? b : a;
  const IrrepLabel &small = a_small ? a : b;
  auto lambda = big.partition();
  std::map<IrrepLabel, long> acc;
  for (const auto &[nu, mult] : weight_multiplicities(small)) {
    std::vector<int> v(q);
    for (int i = 0; i < q; ++i) v[i] = lambda[i] + nu[i] + (q - 1 - i);
    // Sort descending, tracking permutation parity; repeated entries cancel.
    int sign = 1;
    for (int i = 0; i < q; ++i)
      for (int j = 0; j + 1 < q - i; ++j)
        if (v[j] < v[j + 1]) {
          std::swap(v[j], v[j + 1]);
          sign = -sign;
        }
    bool repeated = false;
    for (int i = 0; i + 1 < q; ++i) repeated |= v[i] == v[i + 1];
    if (repeated) continue;
    std::vector<int> p(q);
    for (int i = 0; i < q; ++i) p[i] = v[i] - (q - 1 - i);
    int shift = p[q - 1];
    for (auto &x : p) x -= shift;
    acc[IrrepLabel::from_partition(p)] += sign * static_cast<long>(mult);
  }
  std::map<IrrepLabel, int> out;
  for (const auto &[l, m] : acc) {
    if (m < 0) throw InternalInconsistency("negative tensor multiplicity");
    if (m > 0) out[l] = static_cast<int>(m);
  }
  return out;
}

/// Smallest t such that xi occurs in Ad^{(x)t}.
inline int adjoint_depth(const IrrepLabel &xi, int cap = 12) {
  std::set<IrrepLabel> layer{IrrepLabel::trivial(xi.q)};
  const IrrepLabel ad = IrrepLabel::adjoint(xi.q);
  for (int t = 0; t <= cap; ++t) {
    if (layer.count(xi)) return t;
    std::set<IrrepLabel> next;
    for (const auto &l : layer)
      for (const auto &[r, m] : tensor_decompose(l, ad)) next.insert(r);
    layer = std::move(next);
  }
  throw DepthBoundExceeded("label " + xi.str() + " not reached within " + std::to_string(cap) +
                           " adjoint factors");
}

}  // namespace imw
