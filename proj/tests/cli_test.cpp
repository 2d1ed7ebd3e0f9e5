// Copyright 2026 The mwl Authors.
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

#include "mwl/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "mwl/zmod_codes.hpp"
#include "test_util.hpp"

namespace mwl {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mwl");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("mwl_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, CheckZSixCounterexample) {
  const auto code = write("z6_c.txt", "modulus 6\nlength 1\ngen 3\n");
  const auto r = run({"check", "--code", code, "--weight", "lee", "--m", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "verdict=Fails reason=Verified discrepancy=deg 3; 2:1\n");
}

TEST_F(CliTest, CheckHoldsAndConditions) {
  const auto code = write("z4.txt", "modulus 4\nlength 1\ngen 2\n");
  const auto r = run({"check", "--code", code, "--weight", "lee", "--conditions"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "verdict=Holds reason=Verified discrepancy=none\n"
            "bijective_gray=true transform_is_enumerator=true dual_match=true\n");
}

TEST_F(CliTest, CheckWithoutAdmissibleMultiplier) {
  const auto code = write("z6.txt", "modulus 6\nlength 1\ngen 3\n");
  const auto r = run({"check", "--code", code, "--weight", "lee"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "verdict=StructurallyImpossible reason=NoBijectiveGrayMap discrepancy=none\n");
}

TEST_F(CliTest, Shiromoto) {
  const auto code = write("z6.txt", "modulus 6\nlength 1\ngen 3\n");
  auto r = run({"shiromoto", "--code", code, "--weight", "lee"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "verdict=NotWellFormed reason=MultiplierNotIntegral discrepancy=none\n");
  const auto z4 = write("z4.txt", "modulus 4\nlength 2\ngen 1 1\n");
  r = run({"shiromoto", "--code", z4, "--weight", "lee"});
  EXPECT_EQ(r.code, 0);
}

TEST_F(CliTest, Scan) {
  auto r = run({"scan", "--weight", "lee", "--max", "1000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2 2\n3 3\n4 2\n");
  r = run({"scan", "--weight", "euclidean", "--max", "1000"});
  EXPECT_EQ(r.out, "2 2\n3 3\n");
}

TEST_F(CliTest, GrayTables) {
  auto r = run({"gray", "--modulus", "6", "--m", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 : 0 0 0\n1 : 0 0 1\n2 : 0 1 1\n3 : 1 1 1\n4 : 1 1 0\n5 : 1 0 0\n");
  r = run({"gray", "--modulus", "4", "--m", "2"});
  EXPECT_EQ(r.out, "0 : 0 0\n1 : 0 1\n2 : 1 1\n3 : 1 0\n");
  const auto table = write("bad.txt", "0 : 0 0\n1 : 1 1\n2 : 1 1\n3 : 1 0\n");
  r = run({"gray", "--m", "2", "--table", table});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "weight_preserving=false bijective=false\n");
  r = run({"gray", "--modulus", "6", "--m", "6"});
  EXPECT_EQ(r.code, 3);
}

TEST_F(CliTest, WenumAndEnumerate) {
  const auto code = write("z4.txt", "modulus 4\nlength 2\ngen 1 1\n");
  auto r = run({"wenum", "--code", code, "--weight", "lee"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "deg 4; 0:1 2:2 4:1\n|C| = 4\n");
  r = run({"enumerate", "--code", code});
  EXPECT_EQ(r.out, "0 0\n1 1\n2 2\n3 3\n");
  r = run({"enumerate", "--modulus", "6", "--length", "1"});
  EXPECT_EQ(r.out, "0\n0 1 2 3 4 5\n0 2 4\n0 3\ncodes = 4\n");
}

TEST_F(CliTest, Kraw) {
  auto r = run({"kraw", "--q", "2", "--n", "2", "--table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\t1\t1\n2\t0\t-2\n1\t-1\t1\n");
  r = run({"kraw", "--q", "3", "--n", "4", "--check"});
  EXPECT_EQ(r.out, "orthogonal=true\n");
}

TEST_F(CliTest, Transform) {
  auto r = run({"transform", "--poly", "deg 3; 0:1 3:1", "--m", "2", "--scale", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "deg 3; 0:1 2:3\n");
  const auto code = write("z6.txt", "modulus 6\nlength 1\ngen 3\n");
  r = run({"transform", "--code", code, "--weight", "lee", "--m", "3"});
  EXPECT_EQ(r.out, "deg 3; 0:1 1:3/2 2:15/2 3:7/2\n");
}

TEST_F(CliTest, Search) {
  auto r = run({"search", "--modulus", "4", "--weight", "lee", "--m", "2", "--max-length", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "none\n");
  r = run({"search", "--modulus", "8", "--weight", "lee", "--m", "2", "--max-length", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("discrepancy=deg 4;"), std::string::npos);
}

TEST_F(CliTest, DualRoundTrip) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t ell = 2 + rng() % 7;
    const std::size_t n = 1 + rng() % 3;
    const auto code = testing::random_code(rng, ell, n);
    const auto path = write("c.txt", format_code_spec(code));
    const auto once = run({"dual", "--code", path});
    ASSERT_EQ(once.code, 0);
    const auto dual_path = write("d.txt", once.out);
    const auto twice = run({"dual", "--code", dual_path});
    ASSERT_EQ(twice.code, 0);
    EXPECT_EQ(parse_code_spec(twice.out), code);
  }
}

TEST_F(CliTest, DeterministicOutput) {
  const auto code = write("z6.txt", "modulus 6\nlength 2\ngen 2 0\ngen 0 3\n");
  const auto a = run({"dual", "--code", code});
  const auto b = run({"dual", "--code", code});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, UsageErrorsExitThree) {
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({"scan", "--weight", "lee"}).code, 3);
  EXPECT_EQ(run({"scan", "--weight", "chebyshev", "--max", "10"}).code, 3);
  EXPECT_EQ(run({"check", "--code", "/nonexistent", "--weight", "lee"}).code, 3);
  const auto r = run({"wenum", "--code", write("bad.txt", "modulus 4\n"), "--weight", "lee"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST_F(CliTest, BudgetFlagAndEnvironment) {
  const auto code = write("big.txt", "modulus 10\nlength 4\ngen 1 0 0 0\n");
  EXPECT_EQ(run({"--budget", "100", "wenum", "--code", code, "--weight", "lee"}).code, 3);
  EXPECT_EQ(run({"wenum", "--code", code, "--weight", "lee"}).code, 0);
  ::setenv("MWL_BUDGET", "50", 1);
  EXPECT_EQ(run({"wenum", "--code", code, "--weight", "lee"}).code, 3);
  EXPECT_EQ(run({"--budget", "100000", "wenum", "--code", code, "--weight", "lee"}).code, 0);
  ::unsetenv("MWL_BUDGET");
  EXPECT_EQ(enumeration_budget(), kDefaultEnumerationBudget);
}

}  // namespace
}  // namespace mwl
