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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "imw/errors.hpp"

namespace imw {

/// Arbitrary precision fraction, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(mpz_class(std::to_string(v))) {}  // NOLINT
  Rational(unsigned long v) : v_(v) {}  // NOLINT
  Rational(const mpz_class &v) : v_(v) {}  // NOLINT
  explicit Rational(const mpq_class &v) : v_(v) { v_.canonicalize(); }
  Rational(const mpz_class &num, const mpz_class &den) {
    if (den == 0) {
      throw DivisionByZero("Rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  /// Parses "p/q" or "p" (optional sign, no spaces).
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
      throw ParseError("empty rational");
    }
    auto slash = s.find('/');
    mpz_class num, den(1);
    auto valid = [](const std::string &part) {
      if (part.empty()) return false;
      std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') return false;
      }
      return true;
    };
    std::string a = s.substr(0, slash);
    std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(a) || !valid(b) || b[0] == '-' || b[0] == '+') {
      throw ParseError("malformed rational '" + s + "'");
    }
    if (a[0] == '+') a.erase(0, 1);
    num.set_str(a, 10);
    den.set_str(b, 10);
    return Rational(num, den);
  }

  const mpq_class &value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational &operator+=(const Rational &o) {
    v_ += o.v_;
    return *this;
  }
  Rational &operator-=(const Rational &o) {
    v_ -= o.v_;
    return *this;
  }
  Rational &operator*=(const Rational &o) {
    v_ *= o.v_;
    return *this;
  }
  Rational &operator/=(const Rational &o) {
    if (o.is_zero()) {
      throw DivisionByZero("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
  }
  /// this += a * b without a named temporary at the call site.
  void add_product(const Rational &a, const Rational &b) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
  }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }
inline bool is_zero(const Rational &r) { return r.is_zero(); }
inline bool is_zero(double d) { return d == 0.0; }
inline double to_double(const Rational &r) { return r.to_double(); }
inline double to_double(double d) { return d; }

inline mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace imw
