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

#include "dpcc/verifier.h"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "dpcc/fixture.h"

namespace dpcc {
namespace {

BigRational Q(long long p, long long q) { return BigRational(BigInt(p), BigInt(q)); }

WorldPolicy Exhaustive() {
  WorldPolicy policy;
  policy.mode = WorldMode::kExhaustive;
  return policy;
}

WorldPolicy Sampled(int count, std::uint64_t seed) {
  WorldPolicy policy;
  policy.mode = WorldMode::kSampled;
  policy.sample_count = count;
  policy.seed = seed;
  return policy;
}

TEST(WorldPolicyTest, ParsesAllForms) {
  EXPECT_EQ(WorldPolicy::Parse("exhaustive").mode, WorldMode::kExhaustive);
  EXPECT_EQ(WorldPolicy::Parse("fixed").mode, WorldMode::kFixed);
  EXPECT_EQ(WorldPolicy::Parse("sampled").mode, WorldMode::kSampled);
  const WorldPolicy p = WorldPolicy::Parse("sampled:12");
  EXPECT_EQ(p.mode, WorldMode::kSampled);
  EXPECT_EQ(p.sample_count, 12);
  EXPECT_THROW(WorldPolicy::Parse("sampled:0"), std::invalid_argument);
  EXPECT_THROW(WorldPolicy::Parse("sampled:x"), std::invalid_argument);
  EXPECT_THROW(WorldPolicy::Parse("all"), std::invalid_argument);
}

TEST(FixtureTest, TablesAreLiteral) {
  const auto& caches = FixtureCacheTable();
  EXPECT_EQ(caches[0].content, "A1 A2 A3 B1 B2 B3");
  EXPECT_EQ(caches[3].content, "A3 A5 A6 B3 B5 B6");
  const auto& rows = FixtureTransmissionTable();
  EXPECT_EQ(rows.size(), 16u);
  std::map<int, int> per_transmission;
  for (const auto& row : rows) ++per_transmission[row.transmission];
  for (int t = 1; t <= 4; ++t) EXPECT_EQ(per_transmission[t], 4);
}

TEST(FixtureTest, TransmissionDependsOnlyOnShiftPair) {
  std::map<int, std::set<std::pair<int, int>>> shifts_per_transmission;
  for (const auto& row : FixtureTransmissionTable()) {
    const int c1 = ((row.s1 - row.d1) % 2 + 2) % 2;
    const int c2 = ((row.s2 - row.d2) % 2 + 2) % 2;
    shifts_per_transmission[row.transmission].insert({c1, c2});
  }
  std::set<std::pair<int, int>> all;
  for (const auto& [t, shifts] : shifts_per_transmission) {
    EXPECT_EQ(shifts.size(), 1u) << "T" << t;
    all.insert(shifts.begin(), shifts.end());
  }
  EXPECT_EQ(all.size(), 4u);
}

TEST(FixtureTest, PassesExhaustiveSuiteAtTwoThirds) {
  const VerificationReport report = RunFixture();
  EXPECT_TRUE(report.passed()) << RenderReport(report);
  EXPECT_EQ(report.worlds_checked, 4096u);
  EXPECT_EQ(report.decode_failure_count, 0u);
  EXPECT_EQ(report.privacy_violation_count, 0u);
  ASSERT_EQ(report.realized_rates.size(), 1u);
  EXPECT_EQ(report.realized_rates[0], Q(2, 3));
  ASSERT_TRUE(report.mutual_information);
  EXPECT_TRUE(report.mutual_information->exact_zero);
}

TEST(PrivateConstructionTest, ExampleShapeIsExhaustivelyPrivate) {
  const PrivateConstruction scheme(ValidateParams(2, 2, 2, 1));
  VerificationReport report = Verify(scheme, Exhaustive());
  report.mutual_information = ComputeMutualInformation(scheme);
  EXPECT_TRUE(report.passed()) << RenderReport(report);
  EXPECT_EQ(report.decode_checks, 4096u * 16u * 2u);
  ASSERT_EQ(report.realized_rates.size(), 1u);
  EXPECT_EQ(report.realized_rates[0], Q(2, 3));
  EXPECT_TRUE(report.mutual_information->exact_zero);
  EXPECT_EQ(report.mutual_information->bits, 0.0);
}

TEST(PrivateConstructionTest, EveryCacheIndexPassesExhaustively) {
  for (int t = 0; t <= 4; ++t) {
    const PrivateConstruction scheme(ValidateParams(2, 2, t, 1));
    WorldPolicy policy = Exhaustive();
    policy.budget_bits = 24;
    const VerificationReport report = Verify(scheme, policy);
    EXPECT_TRUE(report.passed()) << "t=" << t << "\n" << RenderReport(report);
  }
}

TEST(PrivateConstructionTest, SampledAndExhaustiveAgree) {
  const PrivateConstruction scheme(ValidateParams(2, 2, 1, 1));
  const VerificationReport full = Verify(scheme, Exhaustive());
  const VerificationReport sampled = Verify(scheme, Sampled(16, 3));
  const VerificationReport fixed = Verify(scheme, WorldPolicy::Parse("fixed"));
  EXPECT_TRUE(full.passed());
  EXPECT_TRUE(sampled.passed());
  EXPECT_TRUE(fixed.passed());
  EXPECT_EQ(full.worlds_checked, 256u);
  EXPECT_EQ(sampled.worlds_checked, 16u);
  EXPECT_EQ(fixed.worlds_checked, 1u);
  EXPECT_EQ(full.realized_rates, sampled.realized_rates);
  EXPECT_EQ(sampled.decode_checks, 16u * 16u * 2u);
}

TEST(PrivateConstructionTest, ExhaustiveRespectsBudget) {
  const PrivateConstruction scheme(ValidateParams(2, 3, 3, 1));
  EXPECT_THROW(Verify(scheme, Exhaustive()), BudgetExceededError);
  EXPECT_THROW(ComputeMutualInformation(scheme), BudgetExceededError);
  EXPECT_TRUE(Verify(scheme, Sampled(4, 1)).passed());
}

TEST(NegativeControlTest, CleartextDemandsLeakOneBit) {
  const CleartextDemandScheme scheme(ValidateParams(2, 2, 2, 1));
  VerificationReport report = Verify(scheme, Exhaustive());
  report.mutual_information = ComputeMutualInformation(scheme);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.decode_failure_count, 0u);
  EXPECT_GT(report.privacy_violation_count, 0u);
  EXPECT_TRUE(report.uniformity_matches_mi);
  ASSERT_TRUE(report.mutual_information);
  EXPECT_FALSE(report.mutual_information->exact_zero);
  EXPECT_DOUBLE_EQ(report.mutual_information->bits, 1.0);
  ASSERT_FALSE(report.privacy_violations.empty());
  const PrivacyWitness& w = report.privacy_violations.front();
  EXPECT_EQ(w.expected, Q(1, 2));
  std::set<BigRational> values(w.conditional.begin(), w.conditional.end());
  EXPECT_EQ(values, (std::set<BigRational>{BigRational(0), BigRational(1)}));
}

TEST(NegativeControlTest, DroppingAnyBlockBreaksDecoding) {
  const SchemeParams params = ValidateParams(2, 2, 2, 1);
  for (std::size_t j = 0; j < 4; ++j) {
    const DroppedBlockScheme scheme(params, j);
    const VerificationReport report = Verify(scheme, Sampled(8, j));
    EXPECT_GT(report.decode_failure_count, 0u) << "block " << j;
    EXPECT_FALSE(report.passed());
    EXPECT_FALSE(report.decode_failures.empty());
  }
}

TEST(NegativeControlTest, DropIndexMustExist) {
  EXPECT_THROW(DroppedBlockScheme(ValidateParams(2, 2, 2, 1), 4),
               std::invalid_argument);
  EXPECT_THROW(DroppedBlockScheme(ValidateParams(2, 2, 4, 1), 0),
               std::invalid_argument);
}

TEST(NegativeControlTest, CorruptedPayloadIsCaught) {
  const CorruptedPayloadScheme scheme(ValidateParams(2, 2, 2, 1), 0);
  const VerificationReport report = Verify(scheme, Sampled(4, 1));
  EXPECT_GT(report.decode_failure_count, 0u);
  EXPECT_FALSE(report.passed());
}

TEST(TrivialSchemeTest, UncodedDeliveryIsPrivate) {
  const TrivialScheme scheme(2, 2, 1, 2, 1);
  VerificationReport report = Verify(scheme, Exhaustive());
  report.mutual_information = ComputeMutualInformation(scheme);
  EXPECT_TRUE(report.passed()) << RenderReport(report);
  ASSERT_EQ(report.realized_rates.size(), 1u);
  EXPECT_EQ(report.realized_rates[0], BigRational(1));
}

TEST(ReportTest, RendersVerdictAndWitnesses) {
  const CleartextDemandScheme scheme(ValidateParams(2, 2, 2, 1));
  const VerificationReport report = Verify(scheme, Sampled(1, 0));
  EXPECT_NE(RenderReport(report).find("verdict: FAIL"), std::string::npos);
  EXPECT_NE(RenderWitnessLines(report).find("privacy_violation"), std::string::npos);
  EXPECT_LE(report.privacy_violations.size(), kMaxWitnesses);
}

}  // namespace
}  // namespace dpcc
