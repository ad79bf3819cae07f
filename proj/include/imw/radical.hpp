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
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "imw/rational.hpp"

namespace imw {

/// Trial-division bound used when extracting square factors. Inputs whose
/// cofactor is not certified prime below this bound raise FactorizationBoundExceeded.
inline std::uint64_t &squarefree_trial_bound() {
  static std::uint64_t bound = 1000000;
  return bound;
}

/// Writes n = s^2 * m with m squarefree. Returns {s, m}.
inline std::pair<mpz_class, mpz_class> split_square(const mpz_class &n) {
  if (n <= 0) {
    throw Error("split_square expects a positive integer");
  }
  mpz_class rest = n, s = 1, m = 1;
  const std::uint64_t bound = squarefree_trial_bound();
  for (std::uint64_t p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
    mpz_class pp(static_cast<unsigned long>(p));
    if (pp * pp > rest) {
      break;
    }
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= pp;
    if (e % 2) m *= pp;
    if (p == bound && pp * pp <= rest) {
      throw FactorizationBoundExceeded("cannot certify square-free part of " + n.get_str());
    }
  }
  if (rest > 1) {
    mpz_class b(static_cast<unsigned long>(bound));
    if (rest > b * b) {
      throw FactorizationBoundExceeded("cannot certify square-free part of " + n.get_str());
    }
    m *= rest;
  }
  return {s, m};
}

/// Finite sum of c_m * sqrt(m) over squarefree keys m (m = 1 is the rational part).
class Radical {
 public:
  using Key = std::uint64_t;
  using Term = std::pair<Key, Rational>;

  Radical() = default;
  Radical(const Rational &r) {  // NOLINT(google-explicit-constructor)
    if (!r.is_zero()) terms_.emplace_back(1, r);
  }
  Radical(int v) : Radical(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Radical(long v) : Radical(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  /// c * sqrt(m) for any positive integer m; the square part of m is extracted.
  static Radical term(const Rational &c, const mpz_class &m) {
    if (m < 0) throw Error("sqrt of a negative integer");
    if (m == 0 || c.is_zero()) return {};
    auto [s, f] = split_square(m);
    if (!f.fits_ulong_p()) throw Error("radical key exceeds 64 bits");
    Radical out;
    out.terms_.emplace_back(f.get_ui(), c * Rational(s));
    return out;
  }
  static Radical term(const Rational &c, std::uint64_t m) {
    return term(c, mpz_class(static_cast<unsigned long>(m)));
  }

  /// sqrt(r) for a nonnegative rational r.
  static Radical sqrt(const Rational &r) {
    if (r.sign() < 0) throw Error("sqrt of a negative rational");
    if (r.is_zero()) return {};
    mpz_class den = r.denominator();
    return term(Rational(mpz_class(1), den), r.numerator() * den);
  }

  /// Builds from raw (coefficient, key) pairs; keys are re-normalized.
  static Radical from_terms(const std::vector<std::pair<Rational, mpz_class>> &raw) {
    Radical out;
    for (const auto &[c, m] : raw) out += term(c, m);
    return out;
  }

  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  Rational rational_part() const {
    return (!terms_.empty() && terms_[0].first == 1) ? terms_[0].second : Rational();
  }
  Rational to_rational() const {
    if (!is_rational()) throw NonRationalResult("value " + str() + " is not rational");
    return rational_part();
  }
  /// True for c*sqrt(m), a single term.
  bool is_pure() const { return terms_.size() <= 1; }

  double to_double() const {
    double v = 0;
    for (const auto &[m, c] : terms_) v += c.to_double() * std::sqrt(static_cast<double>(m));
    return v;
  }

  /// Exact sign. Two or fewer keys are decided by squaring; longer sums use a
  /// 1024-bit evaluation, which is safe because nonzero radicals are bounded away from 0.
  int sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return terms_[0].second.sign();
    if (terms_.size() == 2) {
      // a*sqrt(m1) + b*sqrt(m2); compare squares when signs differ.
      const auto &[m1, a] = terms_[0];
      const auto &[m2, b] = terms_[1];
      if (a.sign() == b.sign()) return a.sign();
      Rational lhs = a * a * Rational(static_cast<unsigned long>(m1));
      Rational rhs = b * b * Rational(static_cast<unsigned long>(m2));
      return lhs > rhs ? a.sign() : b.sign();
    }
    mpf_class acc(0, 1024);
    for (const auto &[m, c] : terms_) {
      mpf_class r(static_cast<unsigned long>(m), 1024);
      r = ::sqrt(r);
      mpf_class cf(c.value(), 1024);
      acc += cf * r;
    }
    return sgn(acc);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto &[m, c] = terms_[i];
      if (i > 0) s += c.sign() < 0 ? " - " : " + ";
      Rational a = i > 0 ? abs(c) : c;
      if (m == 1) {
        s += a.str();
      } else {
        s += (a == Rational(1) ? "" : (a == Rational(-1) ? "-" : a.str() + "*")) + "sqrt(" + std::to_string(m) + ")";
      }
    }
    return s;
  }

  Radical operator-() const {
    Radical out = *this;
    for (auto &t : out.terms_) t.second = -t.second;
    return out;
  }
  Radical &operator+=(const Radical &o) {
    merge(o, 1);
    return *this;
  }
  Radical &operator-=(const Radical &o) {
    merge(o, -1);
    return *this;
  }
  Radical &operator*=(const Rational &r) {
    if (r.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &t : terms_) t.second *= r;
    return *this;
  }
  Radical &operator*=(const Radical &o) {
    *this = *this * o;
    return *this;
  }
  Radical &operator/=(const Rational &r) {
    if (r.is_zero()) throw DivisionByZero("radical division by zero");
    for (auto &t : terms_) t.second /= r;
    return *this;
  }

  friend Radical operator+(Radical a, const Radical &b) { return a += b; }
  friend Radical operator-(Radical a, const Radical &b) { return a -= b; }
  friend Radical operator*(Radical a, const Rational &r) { return a *= r; }
  friend Radical operator*(const Rational &r, Radical a) { return a *= r; }
  friend Radical operator/(Radical a, const Rational &r) { return a /= r; }
  friend Radical operator/(const Radical &a, const Radical &b) {
    if (!b.is_rational()) throw UnsupportedDivision("division by an irrational radical");
    return a / b.rational_part();
  }
  friend Radical operator*(const Radical &a, const Radical &b) {
    Radical out;
    for (const auto &[ma, ca] : a.terms_) {
      for (const auto &[mb, cb] : b.terms_) {
        Key g = std::gcd(ma, mb);
        unsigned __int128 key = static_cast<unsigned __int128>(ma / g) * (mb / g);
        if (key > UINT64_MAX) throw Error("radical key exceeds 64 bits");
        Radical t;
        t.terms_.emplace_back(static_cast<Key>(key), ca * cb * Rational(static_cast<unsigned long>(g)));
        out += t;
      }
    }
    return out;
  }
  friend bool operator==(const Radical &a, const Radical &b) { return a.terms_ == b.terms_; }
  friend std::ostream &operator<<(std::ostream &os, const Radical &r) { return os << r.str(); }

 private:
  void merge(const Radical &o, int sgn_o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.emplace_back(o.terms_[j].first, sgn_o > 0 ? o.terms_[j].second : -o.terms_[j].second);
        ++j;
      } else {
        Rational c = sgn_o > 0 ? terms_[i].second + o.terms_[j].second : terms_[i].second - o.terms_[j].second;
        if (!c.is_zero()) out.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;  // sorted by key, no zero coefficients
};

inline bool is_zero(const Radical &r) { return r.is_zero(); }
inline double to_double(const Radical &r) { return r.to_double(); }

/// Term-wise division of a radical by a nonzero rational.
inline Radical divide_radical_by_rational(const Radical &x, const Rational &q) { return x / q; }

}  // namespace imw
