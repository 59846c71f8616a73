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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dpcc/fixture.h"
#include "dpcc/private_scheme.h"
#include "dpcc/rates.h"
#include "dpcc/verifier.h"

namespace dpcc {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      if (passed) detail << "first failure: ";
      else detail << "; ";
      detail << what;
      passed = false;
    }
  }
};

BigRational Q(long long p, long long q) { return BigRational(BigInt(p), BigInt(q)); }

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

WorldPolicy Exhaustive() {
  WorldPolicy policy;
  policy.mode = WorldMode::kExhaustive;
  return policy;
}

void Criterion1(Outcome& o) {
  const auto start = Clock::now();
  const SchemeParams params = ValidateParams(2, 2, 2, 1);
  const PrivateEpisode episode = RunEpisode(params, 0);
  o.Require(episode.broadcast.payload_bits() == 4, "payload is not 4 bits");
  o.Require(episode.realized_rate == Q(2, 3), "episode rate is not 2/3");
  const PrivateConstruction scheme(params);
  VerificationReport report = Verify(scheme, Exhaustive());
  report.mutual_information = ComputeMutualInformation(scheme);
  o.Require(report.worlds_checked == 4096, "world count is not 2^12");
  o.Require(report.decode_checks == 4096u * 16u * 2u,
            "not every (world, keys, demands, user) was decoded");
  o.Require(report.decode_failure_count == 0, "decode failures");
  o.Require(report.privacy_violation_count == 0, "privacy violations");
  o.Require(report.mutual_information->exact_zero, "MI not exactly zero");
  o.Require(report.realized_rates == std::vector<BigRational>{Q(2, 3)},
            "verified rate is not constant 2/3");
  const double elapsed = Seconds(start);
  o.Require(elapsed < 60.0, "runtime over 60 s");
  o.detail << (o.passed ? "" : "; ") << "payload_bits=4 rate="
           << episode.realized_rate << " worlds=" << report.worlds_checked
           << " decodes=" << report.decode_checks
           << " failures=" << report.decode_failure_count
           << " MI=" << (report.mutual_information->exact_zero ? "0 (exact)" : "nonzero")
           << " time=" << elapsed << "s";
}

void Criterion2(Outcome& o) {
  const VerificationReport report = RunFixture();
  o.Require(report.passed(), "fixture verification failed");
  o.Require(report.worlds_checked == 4096, "world count is not 2^12");
  o.Require(report.realized_rates == std::vector<BigRational>{Q(2, 3)},
            "fixture rate is not constant 2/3");
  o.Require(report.mutual_information && report.mutual_information->exact_zero,
            "fixture MI not exactly zero");
  o.detail << "worlds=" << report.worlds_checked
           << " failures=" << report.decode_failure_count
           << " violations=" << report.privacy_violation_count << " rate="
           << (report.realized_rates.empty() ? std::string("?")
                                             : report.realized_rates[0].ToString());
}

void Criterion3(Outcome& o) {
  const std::vector<BigRational> expected{BigRational(2), Q(5, 4), Q(2, 3),
                                          Q(1, 4), BigRational(0)};
  for (int t = 0; t <= 4; ++t) {
    const BigRational got = RatePrivate(2, 2, t);
    o.Require(got == expected[t], "t=" + std::to_string(t) + " gives " + got.ToString());
    o.detail << (t ? "," : "R(t=0..4)=") << got;
  }
}

void Criterion4(Outcome& o) {
  const int shapes[][2] = {{2, 2}, {2, 3}, {3, 2}, {5, 10}};
  for (const auto& s : shapes) {
    const int n = s[0], k = s[1];
    const BigRational m = Q(n * k - 1, k);
    const BigRational rate = RatePrivate(n, k, n * k - 1);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    o.Require(rate == Q(1, n * k), tag + " R != 1/NK");
    o.Require(CutsetBound(n, m) == rate, tag + " R != cutset");
    o.Require(BigRational(1) - m / BigRational(n) == rate, tag + " R != 1 - M/N");
    o.Require(RatePrivate(n, k, n * k).IsZero(), tag + " R(N) != 0");
    o.detail << tag << ":R(" << m << ")=" << rate << " ";
  }
}

void RequireCheck(Outcome& o, const GapReport& report, const std::string& id) {
  const GapCheck* c = report.Find(id);
  const std::string tag = "(" + std::to_string(report.n_files) + "," +
                          std::to_string(report.n_users) + ") " + id;
  if (c == nullptr) {
    o.Require(false, tag + " missing");
    return;
  }
  o.Require(c->applicable, tag + " not applicable");
  o.Require(c->passed, tag + ": " + c->detail);
}

void Criterion5(Outcome& o) {
  for (const auto& [n, k] : {std::pair{5, 10}, std::pair{2, 4}}) {
    const GapReport report = RateGapReport(n, k);
    for (const char* id : {"i", "ii", "iii", "iii-cases"}) RequireCheck(o, report, id);
    o.Require(report.mn_ratios.size() == static_cast<std::size_t>(k + 1),
              "ratio grid size");
    o.detail << "(" << n << "," << k << ") max ratio " << *report.max_mn_ratio() << "; ";
  }
  const GapReport wide = RateGapReport(20, 10);
  for (const char* id : {"iv", "iv-chain"}) RequireCheck(o, wide, id);
  o.Require(wide.private_ratios.front().memory == BigRational(2),
            "part-2 grid does not start at M = N/K = 2");
  const BigRational best = *wide.max_private_ratio();
  o.Require(best <= BigRational(2), "part-2 ratio above 2");
  o.detail << "(20,10) M>=2 max ratio " << best.ToDouble();
}

void Criterion6(Outcome& o) {
  for (const auto& [n, k] : {std::pair{5, 10}, std::pair{2, 4}}) {
    const GapReport report = RateGapReport(n, k);
    RequireCheck(o, report, "vi-monotone");
    RequireCheck(o, report, "vi-convex");
    o.Require(report.Find("vi-monotone")->points == kDenseGridIntervals,
              "dense grid does not have 1000 intervals");
    o.detail << "(" << n << "," << k << ") first-diff "
             << report.Find("vi-monotone")->points << " second-diff "
             << report.Find("vi-convex")->points << "; ";
  }
}

void Criterion7(Outcome& o) {
  const int shapes[][2] = {{2, 2}, {2, 3}, {3, 3}, {5, 10}};
  for (const auto& s : shapes) {
    const RateCurve grid = PrivateRateGrid(s[0], s[1]);
    const RateCurve env = Envelope(grid.points());
    bool equal = true;
    for (const auto& p : grid.points()) equal = equal && env.Evaluate(p.memory) == p.rate;
    o.Require(equal, "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) +
                         ") envelope differs from interpolation");
    o.detail << "(" << s[0] << "," << s[1] << "):" << grid.points().size()
             << " points, " << env.points().size() << " vertices ";
  }
}

void Criterion8(Outcome& o) {
  const auto start = Clock::now();
  std::uint64_t decodes = 0, groups = 0;
  for (const auto& [n, k] : {std::pair{2, 3}, std::pair{3, 2}}) {
    for (int t = 0; t <= 6; ++t) {
      const PrivateConstruction scheme(ValidateParams(n, k, t, 1));
      WorldPolicy policy;
      policy.mode = WorldMode::kSampled;
      policy.sample_count = 64;
      policy.seed = static_cast<std::uint64_t>(100 * n + t);
      const VerificationReport report = Verify(scheme, policy);
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) +
                              ",t=" + std::to_string(t) + ")";
      o.Require(report.worlds_checked == 64, tag + " not 64 worlds");
      o.Require(report.decode_failure_count == 0, tag + " decode failures");
      o.Require(report.privacy_violation_count == 0, tag + " privacy violations");
      o.Require(report.uniformity_matches_mi, tag + " uniformity/MI disagree");
      o.Require(report.realized_rates ==
                    std::vector<BigRational>{RatePrivate(n, k, t)},
                tag + " rate differs from closed form");
      decodes += report.decode_checks;
      groups += report.privacy_groups;
    }
  }
  const double elapsed = Seconds(start);
  o.Require(elapsed < 300.0, "runtime over 5 min");
  o.detail << "14 configurations, decodes=" << decodes << " view groups=" << groups
           << " time=" << elapsed << "s";
}

void Criterion9(Outcome& o) {
  const SchemeParams params = ValidateParams(2, 2, 2, 1);
  const CleartextDemandScheme cleartext(params);
  VerificationReport leak = Verify(cleartext, Exhaustive());
  const MutualInformation mi = ComputeMutualInformation(cleartext);
  o.Require(leak.privacy_violation_count > 0, "cleartext header passes privacy");
  o.Require(!mi.exact_zero && std::abs(mi.bits - 1.0) < 1e-12,
            "cleartext MI is not 1 bit");
  const std::size_t blocks = RunEpisode(params, 0).broadcast.payload.size();
  for (std::size_t j = 0; j < blocks; ++j) {
    const DroppedBlockScheme dropped(params, j);
    const VerificationReport report = Verify(dropped, Exhaustive());
    o.Require(report.decode_failure_count > 0,
              "dropping block " + std::to_string(j) + " is harmless");
    o.detail << "drop " << j << ": " << report.decode_failure_count << " failures; ";
  }
  o.detail << "cleartext MI=" << mi.bits << " bits, violations="
           << leak.privacy_violation_count;
}

}  // namespace
}  // namespace dpcc

int main() {
  using Run = std::function<void(dpcc::Outcome&)>;
  const std::vector<std::pair<std::string, Run>> criteria{
      {"general construction N=2 K=2 t=2: rate 2/3, exhaustive pass, MI = 0",
       dpcc::Criterion1},
      {"hand-built fixture: exhaustive pass at rate 2/3", dpcc::Criterion2},
      {"private rate grid for N=K=2", dpcc::Criterion3},
      {"top-of-range exactness R((NK-1)/K) = 1/NK = cutset, R(N) = 0",
       dpcc::Criterion4},
      {"rate-gap chain and ratio bounds", dpcc::Criterion5},
      {"interpolated uncoded rate monotone and convex on dense grids",
       dpcc::Criterion6},
      {"lower convex envelope equals interpolation", dpcc::Criterion7},
      {"sampled validity for (2,3,t) and (3,2,t), t = 0..6", dpcc::Criterion8},
      {"negative controls: cleartext leaks 1 bit, dropped blocks fail",
       dpcc::Criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    dpcc::Outcome outcome;
    try {
      criteria[i].second(outcome);
    } catch (const std::exception& e) {
      outcome.Require(false, std::string("exception: ") + e.what());
    }
    if (!outcome.passed) ++failures;
    std::cout << (outcome.passed ? "[PASS]" : "[FAIL]") << " criterion " << i + 1
              << ": " << criteria[i].first << " -- " << outcome.detail.str()
              << std::endl;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << " ("
            << criteria.size() - failures << "/" << criteria.size() << ")"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
