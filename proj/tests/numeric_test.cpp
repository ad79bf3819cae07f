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


#include <gtest/gtest.h>

#include "imw/matrix.hpp"
#include "imw/radical.hpp"

using imw::Matrix;
using imw::Radical;
using imw::Rational;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-3").str(), "-3");
  EXPECT_EQ(Rational::parse("0/7"), Rational(0));
  EXPECT_THROW(Rational::parse("1/0"), imw::DivisionByZero);
  EXPECT_THROW(Rational::parse("1/-2"), imw::ParseError);
  EXPECT_THROW(Rational::parse("x"), imw::ParseError);
  EXPECT_THROW(Rational::parse(""), imw::ParseError);
}

TEST(Rational, Arithmetic) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_LT(b, a);
  EXPECT_EQ(imw::abs(Rational(-2, 5)), Rational(2, 5));
}

TEST(Radical, SquareFreeNormalization) {
  auto r = Radical::term(Rational(1), std::uint64_t{12});
  ASSERT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(r.terms()[0].first, 3u);
  EXPECT_EQ(r.terms()[0].second, Rational(2));
  EXPECT_EQ(Radical::sqrt(Rational(9, 4)), Radical(Rational(3, 2)));
}

TEST(Radical, ProductsCollapseToRationals) {
  auto s2 = Radical::sqrt(Rational(2)), s3 = Radical::sqrt(Rational(3));
  EXPECT_EQ(s2 * s2, Radical(2));
  EXPECT_EQ((s2 * s3) * (s2 * s3), Radical(6));
  EXPECT_TRUE((s2 - s2).is_zero());
  EXPECT_FALSE((s2 + s3).is_rational());
  EXPECT_THROW((s2 + s3).to_rational(), imw::NonRationalResult);
}

TEST(Radical, SignOfMixedTerms) {
  const Radical root = Radical::term(Rational(1, 84), std::uint64_t{3189});
  const Radical lo = Radical(Rational(117, 84)) - root;
  EXPECT_GT(lo.sign(), 0);  // 117^2 > 3189
  EXPECT_LT((Radical(Rational(56, 84)) - root).sign(), 0);
  EXPECT_EQ((Radical::sqrt(Rational(2)) - Radical::sqrt(Rational(3))).sign(), -1);
  EXPECT_NEAR(lo.to_double(), (117 - std::sqrt(3189.0)) / 84, 1e-14);
}

TEST(Matrix, InvertRankDeterminant) {
  Matrix<Rational> m(3, 3);
  int v[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  EXPECT_EQ(m * imw::invert(m), Matrix<Rational>::identity(3));
  EXPECT_EQ(imw::determinant(m), Rational(18));
  EXPECT_EQ(imw::rank(m), 3u);
  Matrix<Rational> s(2, 2);
  s(0, 0) = 1, s(0, 1) = 2, s(1, 0) = 2, s(1, 1) = 4;
  EXPECT_EQ(imw::rank(s), 1u);
  EXPECT_THROW(imw::invert(s), imw::Error);
}

TEST(Matrix, ExactPsdUsesAllPrincipalMinors) {
  Matrix<Rational> m(2, 2);
  m(1, 1) = -1;  // leading minors are 0 and 0, but the matrix is not PSD
  EXPECT_FALSE(imw::is_psd_exact(m));
  m(1, 1) = 1;
  EXPECT_TRUE(imw::is_psd_exact(m));
  Matrix<Radical> r(2, 2);
  r(0, 0) = Radical(Rational(117, 84)) + Radical::term(Rational(1, 84), std::uint64_t{3189});
  r(1, 1) = Radical(Rational(117, 84)) - Radical::term(Rational(1, 84), std::uint64_t{3189});
  EXPECT_TRUE(imw::is_psd_exact(r));
  r(0, 1) = r(1, 0) = Radical(1);
  EXPECT_TRUE(imw::is_psd_exact(r));  // det = 10500/7056 - 1
  r(0, 1) = r(1, 0) = Radical(2);
  EXPECT_FALSE(imw::is_psd_exact(r));
}
