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

#include "imw/codes.hpp"
#include "imw/random.hpp"

using namespace imw;

namespace {

std::vector<Rational> rationals(std::initializer_list<const char *> v) {
  std::vector<Rational> out;
  for (const char *x : v) out.push_back(Rational::parse(x));
  return out;
}

}  // namespace

TEST(Enumerators, CatalogCodes) {
  struct Case {
    const char *name;
    std::vector<Rational> A, B;
    int depth;
  };
  for (const auto &c : {Case{"5-2-2", rationals({"1", "0", "0", "0", "3/2"}), rationals({"1", "0", "20/7", "5/2", "51/14"}), 2},
                        Case{"10-2-2", rationals({"1", "0", "0", "4"}), rationals({"1", "0", "45/7", "88/7"}), 2}}) {
    auto spec = catalog_code(c.name);
    auto rep = spec.ambient.make_rep();
    auto set = conjugation_sectors(rep);
    auto p = projector_from_spec(spec, rep);
    auto [A, B] = normalized_enumerators(p, set);
    EXPECT_EQ(A, c.A) << c.name;
    EXPECT_EQ(B, c.B) << c.name;
    EXPECT_EQ(code_depth(p, set), c.depth) << c.name;
  }
}

TEST(Enumerators, RankOneCodeNormalization) {
  auto spec = catalog_code("top-state-j2");
  auto rep = spec.ambient.make_rep();
  auto [A, B] = normalized_enumerators(projector_from_spec(spec, rep), conjugation_sectors(rep));
  EXPECT_EQ(A[0], Rational(1));
  Rational sum;
  for (const auto &a : A) sum += a;
  EXPECT_EQ(sum, Rational(5));
}

TEST(Enumerators, FullSpaceDetectsOnlyTheTrivialSector) {
  // PFP = F is not proportional to P for traceless F.
  auto spec = catalog_code("full-j2");
  auto rep = spec.ambient.make_rep();
  auto set = conjugation_sectors(rep);
  auto d = compute_enumerators(projector_from_spec(spec, rep), set);
  for (const auto &s : d.sectors) EXPECT_EQ(*s.detected, s.depth == 0) << s.label.str();
  EXPECT_EQ(*d.depth, 1);
}

TEST(Enumerators, KlFlagsAgreeWithOperatorTest) {
  auto rep = su2_irrep(4);
  auto set = conjugation_sectors(rep);
  auto p = projector_from_spec(catalog_code("5-2-2"), rep);
  for (const auto &s : set.sectors) EXPECT_EQ(kl_detects(p, s), detects_by_operators(p, s)) << s.label.str();
}

TEST(Enumerators, ParsevalForRandomOperators) {
  RationalSampler rng(7);
  auto rep = sym_power_rep(3, 3);
  auto set = conjugation_sectors(rep);
  for (int t = 0; t < 5; ++t) {
    auto X = random_operator(rep, rng);
    Rational sa, sb, norm2;
    for (std::size_t i = 0; i < rep.dim; ++i)
      for (std::size_t j = 0; j < rep.dim; ++j) norm2 += X(i, j) * X(i, j) * rep.metric[i] / rep.metric[j];
    for (const auto &s : set.sectors) {
      sa += projector_enumerator(X, s, set.metric)(0, 0);
      sb += twirl_enumerator(X, s, set.metric)(0, 0);
    }
    EXPECT_EQ(sa, norm2);
    EXPECT_EQ(sb, X.trace() * X.trace());
  }
}

TEST(Enumerators, BasisRecombinationLeavesValuesUnchanged) {
  RationalSampler rng(11);
  auto rep = su2_irrep(3);
  auto set = conjugation_sectors(rep);
  auto X = random_operator(rep, rng);
  for (const auto &s : set.sectors) {
    auto s2 = recombine_basis(s, rng.full_rank(s.dim, s.dim), set.metric);
    EXPECT_EQ(projector_enumerator(X, s, set.metric), projector_enumerator(X, s2, set.metric));
    EXPECT_EQ(twirl_enumerator(X, s, set.metric), twirl_enumerator(X, s2, set.metric));
  }
}

TEST(Enumerators, RejectsNonProjectors) {
  auto rep = su2_irrep(2);
  auto m = Matrix<Rational>::identity(3);
  m(0, 0) = 2;
  EXPECT_THROW(make_code_projector(rep, m), InvalidSpec);
  EXPECT_THROW(make_code_projector(rep, Matrix<Rational>::identity(4)), DimensionMismatch);
}

TEST(Enumerators, BlocksArePsdInMultiplicitySectors) {
  RationalSampler rng(3);
  auto rep = build_irrep_by_highest_weight(IrrepLabel::su(3, {1, 1}));
  auto set = conjugation_sectors(rep);
  for (int K : {1, 3}) {
    auto d = compute_enumerators(random_projector(rep, K, rng), set, false);
    for (const auto &s : d.sectors) {
      auto kb = s.B;
      kb.scale(Rational(K));
      EXPECT_TRUE(block_is_psd(s.A));
      EXPECT_TRUE(block_is_psd(s.B));
      EXPECT_TRUE(block_is_psd(kb - s.A)) << s.label.str();
    }
  }
}
