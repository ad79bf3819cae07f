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

#include "imw/lp.hpp"

using namespace imw;

namespace {

MacWilliamsMatrix transform(const Rep &rep) { return macwilliams_from_sectors(conjugation_sectors(rep)); }

LPProblem lp_for(const MacWilliamsMatrix &m, int K, int d) { return build_lp(m, K, detected_below_depth(m.depths, d)); }

}  // namespace

TEST(LP, DetectedSectors) {
  EXPECT_EQ(detected_below_depth({0, 1, 2, 3}, 3), (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(detected_below_depth({0, 1, 2}, 1).empty());
}

TEST(LP, UniquePointForSpin2) {
  auto lp = lp_for(transform(su2_irrep(4)), 2, 2);
  auto res = solve(lp);
  ASSERT_TRUE(res.feasible());
  EXPECT_TRUE(verify_point(lp, res.point));
  auto u = check_uniqueness(lp);
  ASSERT_TRUE(u.unique);
  std::vector<Rational> expect = {1, 0, 0, 0, Rational(3, 2)};
  EXPECT_EQ(*u.point, expect);
}

TEST(LP, NonUniqueWithoutDetection) {
  auto lp = lp_for(transform(su2_irrep(4)), 1, 1);
  EXPECT_TRUE(solve(lp).feasible());
  EXPECT_FALSE(check_uniqueness(lp).unique);
}

TEST(LP, InfeasibleWithVerifiedCertificate) {
  for (auto [tj, K, d] : std::vector<std::tuple<int, int, int>>{{3, 2, 2}, {4, 3, 2}, {6, 2, 3}}) {
    auto lp = lp_for(transform(su2_irrep(tj)), K, d);
    auto res = solve(lp);
    ASSERT_FALSE(res.feasible());
    EXPECT_TRUE(verify_farkas(lp, res.farkas));
  }
}

TEST(LP, TamperedCertificateIsRejected) {
  auto lp = lp_for(transform(su2_irrep(3)), 2, 2);
  auto res = solve(lp);
  ASSERT_FALSE(res.feasible());
  auto y = res.farkas;
  for (auto &v : y) v = -v;
  EXPECT_FALSE(verify_farkas(lp, y));
}

TEST(LP, Scans) {
  auto m = transform(su2_irrep(7));
  EXPECT_EQ(scan_max_K(m, detected_below_depth(m.depths, 3), 1, 8), 2);
  EXPECT_EQ(scan_max_d(m, 2, m.depths), 3);
  auto s = transform(sym_power_rep(3, 3));
  EXPECT_EQ(scan_max_d(s, 2, s.depths), 2);
}

TEST(LP, UniquenessOfInfeasibleProblemThrows) {
  auto lp = lp_for(transform(su2_irrep(2)), 2, 2);
  EXPECT_THROW(check_uniqueness(lp), InfeasibleInput);
}

TEST(LP, RejectsBadInput) {
  auto m = transform(su2_irrep(2));
  EXPECT_THROW(build_lp(m, 0, {}), Error);
  EXPECT_THROW(build_lp(m, 1, {7}), Error);
}
