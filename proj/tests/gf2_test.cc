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

#include "dpcc/gf2.h"

#include <vector>

#include <gtest/gtest.h>

namespace dpcc {
namespace {

Block Bit(bool value) {
  Block b(1);
  b[0] = value;
  return b;
}

TEST(Gf2SolveTest, SolvesSmallTriangularSystem) {
  // x0 = 1, x0 + x1 = 0, x1 + x2 = 1  ->  x = (1, 1, 0)
  std::vector<gf2::XorEquation> eqs{
      {{0}, Bit(true)}, {{0, 1}, Bit(false)}, {{1, 2}, Bit(true)}};
  const std::vector<std::uint64_t> wanted{2, 0, 1};
  const auto solved = gf2::Solve(eqs, wanted, 1);
  ASSERT_TRUE(solved);
  EXPECT_EQ((*solved)[0], Bit(false));
  EXPECT_EQ((*solved)[1], Bit(true));
  EXPECT_EQ((*solved)[2], Bit(true));
}

TEST(Gf2SolveTest, UndeterminedSymbolIsReported) {
  std::vector<gf2::XorEquation> eqs{{{0, 1}, Bit(true)}};
  const std::vector<std::uint64_t> wanted{0};
  EXPECT_FALSE(gf2::Solve(eqs, wanted, 1));
  const std::vector<std::uint64_t> absent{7};
  EXPECT_FALSE(gf2::Solve(eqs, absent, 1));
}

TEST(Gf2SolveTest, RepeatedSymbolCancels) {
  std::vector<gf2::XorEquation> eqs{{{3, 3, 4}, Bit(true)}};
  const std::vector<std::uint64_t> wanted{4};
  const auto solved = gf2::Solve(eqs, wanted, 1);
  ASSERT_TRUE(solved);
  EXPECT_EQ((*solved)[0], Bit(true));
}

TEST(Gf2SolveTest, WideBlocksAreSolvedBitwise) {
  Block a(70), b(70);
  a[3] = a[69] = true;
  b[0] = b[3] = true;
  std::vector<gf2::XorEquation> eqs{{{0, 1}, a ^ b}, {{1}, b}};
  const std::vector<std::uint64_t> wanted{0};
  const auto solved = gf2::Solve(eqs, wanted, 70);
  ASSERT_TRUE(solved);
  EXPECT_EQ((*solved)[0], a);
}

// Oracle: a symbol is determined iff it takes the same value in every
// assignment of the unknowns that satisfies all equations.
TEST(Gf2SolveTest, AgreesWithBruteForceOnRandomSystems) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int m = static_cast<int>(rng() % 7);
    const std::uint32_t truth = static_cast<std::uint32_t>(rng() % (1u << n));
    std::vector<std::uint32_t> masks;
    std::vector<gf2::XorEquation> eqs;
    for (int e = 0; e < m; ++e) {
      const std::uint32_t mask = static_cast<std::uint32_t>(rng() % (1u << n));
      masks.push_back(mask);
      gf2::XorEquation eq{{}, Bit(std::popcount(mask & truth) % 2 == 1)};
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) eq.symbols.push_back(static_cast<std::uint64_t>(i));
      }
      eqs.push_back(eq);
    }
    for (int w = 0; w < n; ++w) {
      bool determined = true;
      for (std::uint32_t x = 0; x < (1u << n); ++x) {
        bool ok = true;
        for (int e = 0; e < m; ++e) {
          ok = ok && (std::popcount(masks[e] & x) % 2) ==
                         (std::popcount(masks[e] & truth) % 2);
        }
        if (ok && ((x >> w) & 1u) != ((truth >> w) & 1u)) determined = false;
      }
      const std::vector<std::uint64_t> wanted{static_cast<std::uint64_t>(w)};
      const auto solved = gf2::Solve(eqs, wanted, 1);
      ASSERT_EQ(solved.has_value(), determined) << "trial " << trial;
      if (solved) ASSERT_EQ((*solved)[0], Bit(((truth >> w) & 1u) != 0));
    }
  }
}

}  // namespace
}  // namespace dpcc
