// Copyright 2026 The dpcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpcc/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>

namespace dpcc {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("dpcc_cli_test_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::size_t Count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(CliRateTableTest, WritesDecimalAndExactFiles) {
  const std::string path = TempPath("r22.csv");
  const Result r = Invoke({"rate-table", "--n", "2", "--k", "2", "--out", path});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto rows = ReadLines(path);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[3].substr(0, 17), "1,0.666666666667,");
  const auto exact = ReadLines(path + ".exact");
  ASSERT_EQ(exact.size(), 6u);
  EXPECT_EQ(exact[3].substr(0, 6), "1,2/3,");
  EXPECT_NE(r.out.find("rows=5"), std::string::npos);
  std::filesystem::remove(path);
  std::filesystem::remove(path + ".exact");
}

TEST(CliRateTableTest, GridSizesAndDeterminism) {
  const std::string a = TempPath("a.csv");
  const std::string b = TempPath("b.csv");
  ASSERT_EQ(Invoke({"rate-table", "--n", "5", "--k", "10", "--out", a}).code, 0);
  ASSERT_EQ(Invoke({"rate-table", "--n", "5", "--k", "10", "--out", b}).code, 0);
  EXPECT_EQ(ReadLines(a).size(), 52u);
  EXPECT_EQ(ReadLines(a), ReadLines(b));
  ASSERT_EQ(Invoke({"rate-table", "--n", "20", "--k", "10", "--out", a}).code, 0);
  EXPECT_EQ(ReadLines(a).size(), 202u);
  for (const auto& p : {a, b}) {
    std::filesystem::remove(p);
    std::filesystem::remove(p + ".exact");
  }
}

TEST(CliRateTableTest, UnwritablePathIsAnIoError) {
  const Result r = Invoke({"rate-table", "--out", "/nonexistent-dir/x.csv"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("cannot write"), std::string::npos);
}

TEST(CliVerifyTest, ExhaustiveExampleShapePasses) {
  const Result r = Invoke({"verify", "--n", "2", "--k", "2", "--t", "2",
                        "--worlds", "exhaustive"});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  EXPECT_NE(r.out.find("(exactly zero)"), std::string::npos);
  EXPECT_NE(r.out.find("rate: 2/3 (constant)"), std::string::npos);
}

TEST(CliVerifyTest, SampledWorldsBeyondTheExample) {
  const Result r = Invoke({"verify", "--n", "2", "--k", "3", "--t", "3",
                        "--worlds", "sampled:64", "--seed", "7"});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  EXPECT_NE(r.out.find("sampled (64)"), std::string::npos);
}

TEST(CliVerifyTest, NegativeControlsExitWithViolations) {
  const Result cleartext = Invoke({"verify", "--negative-control", "cleartext"});
  EXPECT_EQ(cleartext.code, kExitViolation);
  EXPECT_NE(cleartext.out.find("privacy_violation"), std::string::npos);
  EXPECT_NE(cleartext.out.find("mutual information: 1.000000000000 bits"),
            std::string::npos);
  const Result dropped = Invoke({"verify", "--negative-control", "drop-block",
                              "--drop-index", "2", "--worlds", "sampled:4"});
  EXPECT_EQ(dropped.code, kExitViolation);
  EXPECT_NE(dropped.out.find("decode_failure"), std::string::npos);
}

TEST(CliVerifyTest, BudgetAndFallback) {
  const std::vector<std::string> base{"verify", "--n", "2", "--k", "3", "--t", "3"};
  EXPECT_EQ(Invoke(base).code, kExitUsage);
  auto fallback = base;
  fallback.push_back("--allow-sampled-fallback");
  const Result r = Invoke(fallback);
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("using sampled"), std::string::npos);

  ::setenv(kBudgetEnvVar, "11", 1);
  EXPECT_EQ(Invoke({"verify", "--t", "2"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"verify", "--t", "2", "--budget", "12"}).code, kExitPass);
  ::unsetenv(kBudgetEnvVar);
}

TEST(CliExample1Test, FixtureAndConstructionAgree) {
  const Result r = Invoke({"example1"});
  EXPECT_EQ(r.code, kExitPass) << r.out;
  EXPECT_NE(r.out.find("example1: fixture rate 2/3, general rate 2/3, PASS"),
            std::string::npos);
}

TEST(CliBoundsTest, ReportsAndExitCodes) {
  const Result big = Invoke({"bounds", "--n", "5", "--k", "10"});
  EXPECT_EQ(big.code, kExitPass);
  EXPECT_NE(big.out.find("result: PASS"), std::string::npos);
  const Result small = Invoke({"bounds", "--n", "2", "--k", "2"});
  EXPECT_EQ(small.code, kExitPass);
  EXPECT_NE(small.out.find("R_private(3/2) = 1/4"), std::string::npos);
  const Result wide = Invoke({"bounds", "--n", "20", "--k", "10"});
  EXPECT_EQ(wide.code, kExitPass);
  EXPECT_NE(wide.out.find("[PASS] iv:"), std::string::npos);
}

TEST(CliSimulateTest, RatesMatchClosedForm) {
  const Result r = Invoke({"simulate", "--n", "2", "--k", "2", "--t", "2",
                        "--trials", "100", "--seed", "1"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(Count(r.out, "rate=2/3 decoded=1,1"), 100u);
  const Result full = Invoke({"simulate", "--t", "4", "--trials", "3"});
  EXPECT_EQ(Count(full.out, "payload_bits=0 rate=0"), 3u);
  const Result three = Invoke({"simulate", "--n", "3", "--k", "2", "--t", "2",
                            "--trials", "10"});
  EXPECT_EQ(Count(three.out, "rate=19/15 decoded"), 10u);
  EXPECT_EQ(Invoke({"simulate", "--t", "2", "--seed", "5"}).out,
            Invoke({"simulate", "--t", "2", "--seed", "5"}).out);
}

TEST(CliSimulateTest, MemoryAsFraction) {
  EXPECT_EQ(Invoke({"simulate", "--m", "1/2", "--trials", "1"}).code, kExitPass);
  EXPECT_NE(Invoke({"simulate", "--m", "2/4", "--trials", "1"}).out.find("t=1"),
            std::string::npos);
  EXPECT_EQ(Invoke({"simulate", "--m", "1/3"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"simulate", "--m", "1/2", "--t", "2"}).code, kExitUsage);
}

TEST(CliConfigTest, FlagsOverrideConfigFile) {
  const std::string path = TempPath("run.cfg");
  {
    std::ofstream cfg(path);
    cfg << "# shape\nn = 3\nk=2\nt=2\ntrials=4\n";
  }
  const Result r = Invoke({"simulate", "--config", path, "--trials", "2"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(Count(r.out, "rate=19/15 decoded"), 2u);
  EXPECT_EQ(Invoke({"simulate", "--config", TempPath("missing.cfg")}).code,
            kExitUsage);
  std::filesystem::remove(path);
}

TEST(CliUsageTest, BadInvocations) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"bounds", "--n", "0"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"verify", "--worlds", "everything"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"verify", "--negative-control", "other"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"verify", "--negative-control", "drop-block", "--drop-index",
                    "9"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitPass);
}

}  // namespace
}  // namespace dpcc
