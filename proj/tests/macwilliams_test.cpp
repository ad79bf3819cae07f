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

#include "imw/macwilliams.hpp"

using namespace imw;

TEST(MacWilliams, QubitTransform) {
  auto m = macwilliams_from_sectors(conjugation_sectors(su2_irrep(1)));
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.M(0, 0), Rational(1, 2));
  EXPECT_EQ(m.M(0, 1), Rational(1, 2));
  EXPECT_EQ(m.M(1, 0), Rational(3, 2));
  EXPECT_EQ(m.M(1, 1), Rational(-1, 2));
}

TEST(MacWilliams, TrivialRep) {
  auto m = macwilliams_from_sectors(conjugation_sectors(su2_irrep(0)));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.M(0, 0), Rational(1));
}

TEST(MacWilliams, SixjValues) {
  for (int tj = 0; tj <= 6; ++tj)
    for (int k = 0; k <= tj; ++k) {
      Rational expect(1, tj + 1);
      if ((tj + k) % 2) expect = -expect;
      EXPECT_EQ(su2_sixj_symmetric(tj, 0, k), expect);
    }
  EXPECT_EQ(su2_sixj_symmetric(1, 1, 1), Rational(1, 6));
  EXPECT_EQ(su2_sixj_symmetric(4, 4, 4), Rational(1, 630));
  EXPECT_THROW(su2_sixj_symmetric(2, 3, 0), TriangleViolation);
}

TEST(MacWilliams, ClosedFormMatchesSectors) {
  for (int tj = 1; tj <= 6; ++tj)
    EXPECT_EQ(su2_macwilliams_closed(tj).M, macwilliams_from_sectors(conjugation_sectors(su2_irrep(tj))).M) << tj;
}

TEST(MacWilliams, WeightedOrthogonalityAndFirstRow) {
  for (auto rep : {su2_irrep(5), sym_power_rep(3, 2), sym_power_rep(4, 2)}) {
    auto m = macwilliams_from_sectors(conjugation_sectors(rep));
    EXPECT_TRUE(verify_weighted_orthogonality(m)) << rep.key;
    EXPECT_TRUE(verify_first_row(m)) << rep.key;
  }
}

TEST(MacWilliams, TwirlScalarMatchesClosedForm) {
  auto set = conjugation_sectors(su2_irrep(5));
  for (int k1 = 0; k1 <= 5; ++k1)
    for (int k2 = 0; k2 <= 5; ++k2) {
      auto c = twirl_scalar_action(set, k2, k1);
      ASSERT_TRUE(c.has_value());
      EXPECT_EQ(*c, su2_twirl_scalar_closed(5, k1, k2));
    }
}

TEST(MacWilliams, MultiplicityNeedsBlockForm) {
  auto set = conjugation_sectors(build_irrep_by_highest_weight(IrrepLabel::su(3, {1, 1})));
  EXPECT_THROW(macwilliams_from_sectors(set), MultiplicityPresent);
  auto b = block_macwilliams(set);
  EXPECT_TRUE(verify_weighted_orthogonality(b));
  EXPECT_THROW(scalar_from_block(b), MultiplicityPresent);
}

TEST(MacWilliams, BlockReducesToScalarWithoutMultiplicity) {
  auto set = conjugation_sectors(sym_power_rep(3, 3));
  EXPECT_EQ(scalar_from_block(block_macwilliams(set)).M, macwilliams_from_sectors(set).M);
}
