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

#include <cstdlib>
#include <filesystem>

#include "imw/cache.hpp"

using namespace imw;

TEST(Serialize, RationalsAlwaysCarryADenominator) {
  EXPECT_EQ(to_json(Rational(3)), Json("3/1"));
  EXPECT_EQ(to_json(Rational(-1, 2)), Json("-1/2"));
  EXPECT_EQ(rational_from_json(Json("3/1")), Rational(3));
  EXPECT_EQ(rational_from_json(Json(4)), Rational(4));
  EXPECT_THROW(rational_from_json(Json(0.5)), ParseError);
}

TEST(Serialize, RadicalTriples) {
  Radical r = Radical(Rational(117, 84)) - Radical::term(Rational(1, 84), std::uint64_t{3189});
  Json j = to_json(r);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(radical_from_json(j), r);
  EXPECT_EQ(radical_from_json(Json::array({1, 2, 8})), Radical::sqrt(Rational(2)));
}

TEST(Serialize, CodeSpecRoundTrip) {
  for (const auto &c : builtin_catalog()) {
    auto back = code_spec_from_json(Json::parse(to_json(c).dump()));
    EXPECT_EQ(back.name, c.name);
    EXPECT_EQ(back.codewords, c.codewords);
    EXPECT_EQ(to_json(back.ambient), to_json(c.ambient));
  }
}

TEST(Serialize, UnknownFieldsRejected) {
  EXPECT_THROW(ambient_from_json(Json::parse(R"({"type":"su2","two_j":4,"extra":1})")), ParseError);
  EXPECT_THROW(code_spec_from_json(Json::parse(R"({"ambient":{"type":"su2","two_j":1},"codewords":[],"x":0})")),
               ParseError);
  EXPECT_THROW(parse_irrep_label("su3:2,x"), ParseError);
  EXPECT_EQ(parse_irrep_label("su3:2,2"), IrrepLabel::su(3, {2, 2}));
}

TEST(Serialize, TransformRoundTrip) {
  auto set = conjugation_sectors(sym_power_rep(3, 2));
  auto m = macwilliams_from_sectors(set);
  auto back = macwilliams_from_json(Json::parse(to_json(m).dump()));
  EXPECT_EQ(back.M, m.M);
  EXPECT_EQ(back.labels, m.labels);
  auto b = block_macwilliams(set);
  auto bb = block_macwilliams_from_json(Json::parse(to_json(b).dump()));
  EXPECT_EQ(bb.M, b.M);
  EXPECT_EQ(bb.index, b.index);
  EXPECT_EQ(to_json(m)["provenance"]["basis_convention_version"], kBasisConventionVersion);
}

TEST(Cache, StoresAndReusesVersionedFiles) {
  auto dir = std::filesystem::temp_directory_path() / "imw-cache-test";
  std::filesystem::remove_all(dir);
  ::setenv(kCacheDirEnv, dir.c_str(), 1);
  auto rep = su2_irrep(3);
  int computed = 0;
  auto compute = [&] {
    ++computed;
    return macwilliams_from_sectors(conjugation_sectors(rep));
  };
  auto first = cached<MacWilliamsMatrix>("scalar", rep.key, true, compute, macwilliams_from_json);
  auto second = cached<MacWilliamsMatrix>("scalar", rep.key, true, compute, macwilliams_from_json);
  EXPECT_EQ(computed, 1);
  EXPECT_EQ(first.M, second.M);
  const auto path = cache_path("scalar", rep.key);
  EXPECT_EQ(path.parent_path(), dir);
  EXPECT_NE(path.filename().string().find(".v1."), std::string::npos);

  // A file with another format version is ignored and rewritten.
  Json j = Json::parse(std::ifstream(path));
  j["format_version"] = 999;
  std::ofstream(path) << j.dump();
  cached<MacWilliamsMatrix>("scalar", rep.key, true, compute, macwilliams_from_json);
  EXPECT_EQ(computed, 2);
  // use_cache = false always recomputes.
  cached<MacWilliamsMatrix>("scalar", rep.key, false, compute, macwilliams_from_json);
  EXPECT_EQ(computed, 3);
  std::filesystem::remove_all(dir);
  ::unsetenv(kCacheDirEnv);
}
