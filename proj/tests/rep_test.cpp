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

#include "imw/sectors.hpp"

using namespace imw;

TEST(Lie, WeylDimensions) {
  EXPECT_EQ(weyl_dimension(IrrepLabel::su2(7)), 8u);
  EXPECT_EQ(weyl_dimension(IrrepLabel::su(3, {1, 1})), 8u);
  EXPECT_EQ(weyl_dimension(IrrepLabel::su(3, {2, 2})), 27u);
  EXPECT_EQ(weyl_dimension(IrrepLabel::su(3, {4, 4})), 125u);
  EXPECT_EQ(weyl_dimension(IrrepLabel::su(4, {2, 0, 0})), 10u);
}

TEST(Lie, TensorDecompositionPreservesDimension) {
  auto a = IrrepLabel::su(3, {1, 1});
  auto d = tensor_decompose(a, a);
  std::uint64_t total = 0;
  for (auto [l, m] : d) total += m * weyl_dimension(l);
  EXPECT_EQ(total, 64u);
  EXPECT_EQ(d.at(IrrepLabel::su(3, {1, 1})), 2);
  EXPECT_EQ(d.at(IrrepLabel::su(3, {0, 0})), 1);
}

TEST(Lie, AdjointDepth) {
  EXPECT_EQ(adjoint_depth(IrrepLabel::su2(0)), 0);
  EXPECT_EQ(adjoint_depth(IrrepLabel::su2(6)), 3);
  EXPECT_EQ(adjoint_depth(IrrepLabel::su(3, {1, 1})), 1);
  EXPECT_EQ(adjoint_depth(IrrepLabel::su(3, {3, 0})), 2);
  EXPECT_EQ(adjoint_depth(IrrepLabel::su(3, {2, 2})), 2);
}

TEST(Rep, GeneratorsSatisfyLieRelations) {
  for (int tj : {0, 1, 4, 7}) EXPECT_TRUE(check_lie_relations(su2_irrep(tj))) << tj;
  EXPECT_TRUE(check_lie_relations(sym_power_rep(3, 3)));
  EXPECT_TRUE(check_lie_relations(sym_power_rep(4, 2)));
  auto r = build_irrep_by_highest_weight(IrrepLabel::su(3, {1, 1}));
  EXPECT_EQ(r.dim, 8u);
  EXPECT_TRUE(check_lie_relations(r));
}

TEST(Rep, SymmetricPowerMatchesHighestWeight) {
  auto r = sym_power_rep(3, 3);
  EXPECT_EQ(r.dim, 10u);
  EXPECT_EQ(r.label, IrrepLabel::su(3, {3, 0}));
}

TEST(Sectors, SpinDecomposition) {
  auto set = conjugation_sectors(su2_irrep(4));
  ASSERT_EQ(set.sectors.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_EQ(set.sectors[k].label, IrrepLabel::su2(2 * static_cast<int>(k)));
    EXPECT_EQ(set.sectors[k].depth, static_cast<int>(k));
    EXPECT_EQ(set.sectors[k].dim, 2 * k + 1);
  }
  EXPECT_TRUE(set.multiplicity_free());
  EXPECT_EQ(check_sector_invariants(set, su2_irrep(4)), "");
}

TEST(Sectors, SymmetricPowersAreMultiplicityFree) {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
    auto rep = sym_power_rep(q, n);
    auto set = conjugation_sectors(rep);
    EXPECT_TRUE(set.multiplicity_free()) << q << " " << n;
    std::size_t total = 0;
    for (const auto &s : set.sectors) total += s.dim;
    EXPECT_EQ(total, rep.dim * rep.dim);
    EXPECT_EQ(check_sector_invariants(set, rep), "");
  }
}

TEST(Sectors, AdjointOfSu3HasAlignedCopies) {
  auto rep = build_irrep_by_highest_weight(IrrepLabel::su(3, {1, 1}));
  auto set = conjugation_sectors(rep);
  EXPECT_FALSE(set.multiplicity_free());
  const auto &s = set.sectors[set.index_of(IrrepLabel::su(3, {1, 1}))];
  EXPECT_EQ(s.multiplicity, 2);
  EXPECT_EQ(s.copy_norms[0], Rational(1));
  EXPECT_TRUE(check_copy_alignment(s, set, rep));
  EXPECT_EQ(check_sector_invariants(set, rep), "");
}
