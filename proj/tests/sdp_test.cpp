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
#include "imw/lp.hpp"
#include "imw/random.hpp"
#include "imw/sdp.hpp"

using namespace imw;

TEST(SDP, AgreesWithLPWithoutMultiplicity) {
  for (int tj : {3, 4, 7}) {
    auto set = conjugation_sectors(su2_irrep(tj));
    auto m = macwilliams_from_sectors(set);
    auto b = block_macwilliams(set);
    for (int K : {1, 2, 3})
      for (int d : {1, 2, 3}) {
        auto det = detected_below_depth(m.depths, d);
        const bool lp = solve(build_lp(m, K, det)).feasible();
        auto res = solve_feasibility(build_sdp(b, K, det));
        EXPECT_EQ(res.feasible(), lp) << tj << " " << K << " " << d;
        if (!lp) {
          EXPECT_GT(res.infeasibility_measure, 1e-4);
        }
      }
  }
}

TEST(SDP, TrueEnumeratorsAreExactlyFeasible) {
  auto spec = catalog_code("5-2-2");
  auto rep = spec.ambient.make_rep();
  auto set = conjugation_sectors(rep);
  auto d = compute_enumerators(projector_from_spec(spec, rep), set);
  auto p = build_sdp(block_macwilliams(set), 2, detected_below_depth(set.depths(), 2));
  auto res = check_point(p, candidate_from_enumerators(p, d));
  EXPECT_TRUE(res.feasible());
  for (const auto &r : res.residuals) {
    ASSERT_TRUE(r.exact.has_value()) << r.name;
    EXPECT_TRUE(r.exact->is_zero()) << r.name;
  }
}

TEST(SDP, RandomProjectorsWithMultiplicity) {
  RationalSampler rng(5);
  auto rep = build_irrep_by_highest_weight(IrrepLabel::su(3, {1, 1}));
  auto set = conjugation_sectors(rep);
  auto b = block_macwilliams(set);
  auto d = compute_enumerators(random_projector(rep, 2, rng), set);
  std::vector<std::size_t> det;
  for (std::size_t s = 0; s < d.sectors.size(); ++s)
    if (*d.sectors[s].detected) det.push_back(s);
  auto p = build_sdp(b, 2, det);
  EXPECT_TRUE(check_point(p, candidate_from_enumerators(p, d)).feasible());
}

TEST(SDP, PerturbedPointIsFlagged) {
  auto spec = catalog_code("5-2-2");
  auto rep = spec.ambient.make_rep();
  auto set = conjugation_sectors(rep);
  auto d = compute_enumerators(projector_from_spec(spec, rep), set);
  auto p = build_sdp(block_macwilliams(set), 2, detected_below_depth(set.depths(), 2));
  auto c = candidate_from_enumerators(p, d);
  c.A[1](0, 0) += Radical(Rational(1, 100));
  EXPECT_FALSE(check_point(p, c).feasible());
}

TEST(SDP, VanishingModeIsWeaker) {
  auto set = conjugation_sectors(su2_irrep(4));
  auto b = block_macwilliams(set);
  auto det = detected_below_depth(set.depths(), 2);
  EXPECT_FALSE(solve_feasibility(build_sdp(b, 3, det, DetectionMode::Strict)).feasible());
  EXPECT_TRUE(solve_feasibility(build_sdp(b, 5, det, DetectionMode::Vanishing)).feasible());
}
