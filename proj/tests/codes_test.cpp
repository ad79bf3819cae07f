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

using namespace imw;

TEST(Codes, CatalogProjectorsHaveExpectedRank) {
  for (auto [name, K] : std::vector<std::pair<std::string, int>>{{"5-2-2", 2}, {"8-2-3", 2}, {"10-2-2", 2}, {"full-j2", 5}})
    EXPECT_EQ(projector_from_spec(catalog_code(name)).K, K) << name;
  EXPECT_THROW(catalog_code("nope"), InvalidSpec);
}

TEST(Codes, DickeEmbeddingIsIsometric) {
  auto r = sym_power_rep(3, 2);
  for (std::size_t a = 0; a < r.dim; ++a)
    for (std::size_t b = 0; b < r.dim; ++b) {
      std::vector<Radical> u(r.dim), v(r.dim);
      u[a] = Radical(1);
      v[b] = Radical(1);
      EXPECT_EQ(dot(dicke_embed(3, 2, u), dicke_embed(3, 2, v)), Radical(a == b ? 1 : 0));
    }
}

TEST(Codes, SpecValidation) {
  CodeSpec c{"bad", Ambient::su2(1), {{Radical(1), Radical(1)}, {Radical(1), Radical(0)}}};
  EXPECT_THROW(projector_from_spec(c), NonOrthogonalCodewords);
  c.codewords = {{Radical(1)}};
  EXPECT_THROW(projector_from_spec(c), InvalidSpec);
  c.codewords = {{Radical(0), Radical(0)}};
  EXPECT_THROW(projector_from_spec(c), InvalidSpec);
  c.codewords = {{Radical::sqrt(Rational(2)) + Radical(1), Radical(0)}};
  EXPECT_THROW(projector_from_spec(c), InvalidSpec);
}

TEST(Codes, PhysicalDistanceMatchesDepth) {
  for (auto [name, d] : std::vector<std::pair<std::string, int>>{{"5-2-2", 2}, {"10-2-2", 2}}) {
    auto spec = catalog_code(name);
    const bool qubit = spec.ambient.kind == Ambient::Kind::SU2;
    auto pd = physical_distance_bruteforce(embedded_codewords(spec), qubit ? 2 : 3, qubit ? spec.ambient.two_j : 3, 3);
    EXPECT_EQ(pd.distance, d) << name;
    auto rep = spec.ambient.make_rep();
    EXPECT_EQ(code_depth(projector_from_spec(spec, rep), conjugation_sectors(rep)), d) << name;
  }
}

TEST(Codes, PhysicalDistanceRefusesLargeSpaces) {
  EXPECT_THROW(physical_distance_bruteforce({{1.0}}, 2, 12, 1), TooLarge);
}
