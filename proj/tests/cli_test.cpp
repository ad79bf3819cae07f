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
#include <sstream>

#include "imw/cli.hpp"

using namespace imw;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "imw");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / "imw-cli-test";
    ::setenv(kCacheDirEnv, dir_.c_str(), 1);
  }
  void TearDown() override {
    std::filesystem::remove_all(dir_);
    ::unsetenv(kCacheDirEnv);
  }
  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, TransformJson) {
  auto r = run({"--json", "transform", "--su2", "2j=4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["M"][4][4], "1/70");
  EXPECT_EQ(j["M"][2][0], "1/1");
  EXPECT_EQ(j["provenance"]["rep"], "su2:4");
  EXPECT_TRUE(j["checks"]["weighted_orthogonality"].get<bool>());
  EXPECT_EQ(macwilliams_from_json(j).M, su2_macwilliams_closed(4).M);
}

TEST_F(Cli, TransformSymmetricPowerAndTrivial) {
  auto r = run({"transform", "--sym", "q=3", "n=3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["M"][3][3], "-1/35");
  auto t = run({"transform", "--su2", "2j=0", "--json"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(Json::parse(t.out)["M"], Json::parse(R"([["1/1"]])"));
  EXPECT_EQ(run({"transform", "--sym", "q=3 n=3"}).code, 0);
}

TEST_F(Cli, EnumerateCatalogAndFile) {
  auto r = run({"enumerate", "--catalog", "10-2-2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["sectors"][3]["B_tilde"], "88/7");
  EXPECT_EQ(j["sectors"][2]["B_tilde"], "45/7");
  EXPECT_EQ(j["depth"], 2);

  auto path = dir_ / "code.json";
  std::filesystem::create_directories(dir_);
  std::ofstream(path) << to_json(catalog_code("top-state-j2")).dump();
  auto f = run({"enumerate", "--code", path.string(), "--json"});
  ASSERT_EQ(f.code, 0) << f.err;
  Rational sum;
  const auto fj = Json::parse(f.out);
  for (const auto &s : fj["sectors"]) sum += rational_from_json(s["A_tilde"]);
  EXPECT_EQ(sum, Rational(5));
  auto text = run({"enumerate", "--catalog", "5-2-2"});
  EXPECT_NE(text.out.find("A~ = (1, 0, 0, 0, 3/2)"), std::string::npos);
}

TEST_F(Cli, BoundLp) {
  auto r = run({"bound", "--su2", "2j=7", "--K", "2", "--d", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_TRUE(j["uniqueness"]["unique"].get<bool>());
  EXPECT_EQ(j["uniqueness"]["point"][6], "3/1");

  auto inf = run({"bound", "--su2", "2j=3", "--K", "2", "--d", "2", "--expect", "infeasible"});
  EXPECT_EQ(inf.code, 0) << inf.err;
  EXPECT_NE(inf.out.find("Farkas"), std::string::npos);
  EXPECT_EQ(run({"bound", "--su2", "2j=3", "--K", "2", "--d", "2", "--expect", "feasible"}).code, 1);
  EXPECT_EQ(run({"bound", "--su2", "2j=4", "--K", "2", "--E", "1"}).code, 0);
}

TEST_F(Cli, BoundSdp) {
  auto r = run({"bound", "--su2", "2j=4", "--K", "3", "--d", "2", "--engine", "sdp", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["result"]["verdict"], "likely_infeasible");
}

TEST_F(Cli, Scans) {
  auto k = run({"scan-k", "--su2", "2j=7", "--d", "3", "--json"});
  ASSERT_EQ(k.code, 0) << k.err;
  EXPECT_EQ(Json::parse(k.out)["max_K"], 2);
  auto d = run({"scan-d", "--sym", "q=3", "n=3", "--K", "2", "--json"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(Json::parse(d.out)["max_d"], 2);
}

TEST_F(Cli, ReproduceSubset) {
  auto r = run({"reproduce", "--only", "1,5", "--json"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  auto j = Json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["criteria"].size(), 2u);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"transform"}).code, 2);
  EXPECT_EQ(run({"transform", "--su2", "j=4"}).code, 2);
  EXPECT_EQ(run({"transform", "--su2", "2j=4", "--sym", "q=3", "n=2"}).code, 2);
  EXPECT_EQ(run({"transform", "--hw", "su3:2"}).code, 2);
  EXPECT_EQ(run({"bound", "--su2", "2j=4", "--K", "2"}).code, 2);
  EXPECT_EQ(run({"bound", "--su2", "2j=4", "--K", "2", "--d", "2", "--engine", "qp"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--catalog", "nope"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
