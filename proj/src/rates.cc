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

#include "dpcc/rates.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "dpcc/yma_scheme.h"

namespace dpcc {

namespace {

void RequirePositive(int n_files, int n_users) {
  if (n_files <= 0 || n_users <= 0) {
    throw std::invalid_argument("N and K must be positive");
  }
}

void RequireMemoryRange(int n_files, const BigRational& memory) {
  if (memory.Sign() < 0 || memory > BigRational(n_files)) {
    throw std::invalid_argument("memory " + memory.ToString() +
                                " outside [0, " + std::to_string(n_files) +
                                "]");
  }
}

// K M / N as an integer, or nullopt when M is off the K-user grid.
std::optional<int> KUserGridIndex(int n_files, int n_users,
                                  const BigRational& memory) {
  const BigRational r = memory * BigRational(n_users) / BigRational(n_files);
  if (!r.IsInteger()) return std::nullopt;
  return static_cast<int>(r.numerator());
}

// K M as an integer, or nullopt when M is off the private grid.
std::optional<int> PrivateGridIndex(int n_users, const BigRational& memory) {
  const BigRational t = memory * BigRational(n_users);
  if (!t.IsInteger()) return std::nullopt;
  return static_cast<int>(t.numerator());
}

BigRational Frac(long long p, long long q) {
  return BigRational(BigInt(p), BigInt(q));
}

// a <= 2 b, which also accepts 0/0.
bool RatioAtMostTwo(const BigRational& a, const BigRational& b) {
  return a <= BigRational(2) * b;
}

std::optional<BigRational> SafeRatio(const BigRational& a,
                                     const BigRational& b) {
  if (b.IsZero()) return std::nullopt;
  return a / b;
}

std::vector<BigRational> DenseGrid(int n_files) {
  std::vector<BigRational> grid;
  grid.reserve(kDenseGridIntervals + 1);
  for (int i = 0; i <= kDenseGridIntervals; ++i) {
    grid.push_back(Frac(static_cast<long long>(n_files) * i,
                        kDenseGridIntervals));
  }
  return grid;
}

class CheckBuilder {
 public:
  CheckBuilder(std::string id, std::string description) {
    check_.id = std::move(id);
    check_.description = std::move(description);
  }

  void Expect(bool ok, const std::function<std::string()>& witness) {
    ++check_.points;
    if (!ok && check_.passed) {
      check_.passed = false;
      check_.detail = witness();
    }
  }

  GapCheck NotApplicable(std::string why) {
    check_.applicable = false;
    check_.detail = std::move(why);
    return check_;
  }

  GapCheck Finish(std::string summary = {}) {
    if (check_.passed && check_.detail.empty()) check_.detail = std::move(summary);
    return check_;
  }

 private:
  GapCheck check_;
};

std::string At(const BigRational& memory) { return "M=" + memory.ToString(); }

}  // namespace

RateCurve::RateCurve(std::string label, std::vector<RatePoint> points)
    : label_(std::move(label)), points_(std::move(points)) {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].memory < points_[i].memory)) {
      throw std::invalid_argument("curve " + label_ +
                                  ": memories must strictly increase");
    }
  }
}

BigRational RateCurve::Evaluate(const BigRational& memory) const {
  if (points_.empty() || memory < points_.front().memory ||
      memory > points_.back().memory) {
    throw std::out_of_range("curve " + label_ + " undefined at " +
                            memory.ToString());
  }
  const auto upper = std::lower_bound(
      points_.begin(), points_.end(), memory,
      [](const RatePoint& p, const BigRational& m) { return p.memory < m; });
  if (upper->memory == memory) return upper->rate;
  const RatePoint& hi = *upper;
  const RatePoint& lo = *(upper - 1);
  const BigRational weight = (memory - lo.memory) / (hi.memory - lo.memory);
  return lo.rate + weight * (hi.rate - lo.rate);
}

BigRational RatePrivate(int n_files, int n_users, int cache_index) {
  RequirePositive(n_files, n_users);
  const long long virtual_users =
      static_cast<long long>(n_files) * n_users;
  if (cache_index < 0 || cache_index > virtual_users) {
    throw std::invalid_argument("t = " + std::to_string(cache_index) +
                                " outside [0, NK]");
  }
  return BigRational(Binomial(virtual_users, cache_index + 1) -
                         Binomial(virtual_users - n_files, cache_index + 1),
                     Binomial(virtual_users, cache_index));
}

RateCurve PrivateRateGrid(int n_files, int n_users) {
  RequirePositive(n_files, n_users);
  std::vector<RatePoint> points;
  const int top = n_files * n_users;
  for (int t = 0; t <= top; ++t) {
    points.push_back({Frac(t, n_users), RatePrivate(n_files, n_users, t)});
  }
  return RateCurve("R_private", std::move(points));
}

RateCurve Envelope(std::vector<RatePoint> points, std::string label) {
  if (points.size() < 2) {
    throw std::invalid_argument("envelope needs at least two points");
  }
  std::sort(points.begin(), points.end(),
            [](const RatePoint& a, const RatePoint& b) {
              return a.memory < b.memory;
            });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].memory == points[i - 1].memory) {
      throw std::invalid_argument("envelope points must have distinct M");
    }
  }
  std::vector<RatePoint> hull;
  for (const RatePoint& p : points) {
    while (hull.size() >= 2) {
      const RatePoint& a = hull[hull.size() - 2];
      const RatePoint& b = hull.back();
      const BigRational cross = (b.memory - a.memory) * (p.rate - a.rate) -
                                (b.rate - a.rate) * (p.memory - a.memory);
      if (cross.Sign() > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return RateCurve(std::move(label), std::move(hull));
}

BigRational RateYmaAt(int n_files, int n_users, const BigRational& memory) {
  RequirePositive(n_files, n_users);
  RequireMemoryRange(n_files, memory);
  const auto r = KUserGridIndex(n_files, n_users, memory);
  if (!r) {
    throw std::invalid_argument("memory " + memory.ToString() +
                                " is not on the N/K grid");
  }
  return YmaRate(n_files, n_users, *r);
}

BigRational RateMn(int n_files, int n_users, const BigRational& memory) {
  RequirePositive(n_files, n_users);
  RequireMemoryRange(n_files, memory);
  const auto r = KUserGridIndex(n_files, n_users, memory);
  if (!r) {
    throw std::invalid_argument("memory " + memory.ToString() +
                                " is not on the N/K grid");
  }
  const BigRational k(n_users);
  const BigRational fraction = memory / BigRational(n_files);
  return k * (BigRational(1) - fraction) *
         Min(BigRational(1) / (BigRational(1) + BigRational(*r)),
             Frac(n_files, n_users));
}

BigRational RateMnLin(int n_files, int n_users, const BigRational& memory) {
  RequirePositive(n_files, n_users);
  RequireMemoryRange(n_files, memory);
  const BigRational position =
      memory * BigRational(n_users) / BigRational(n_files);
  const BigInt floor_index = position.numerator() / position.denominator();
  const int lo = static_cast<int>(floor_index);
  const BigRational lo_memory = Frac(static_cast<long long>(n_files) * lo,
                                     n_users);
  if (lo_memory == memory) return RateMn(n_files, n_users, memory);
  const BigRational hi_memory =
      Frac(static_cast<long long>(n_files) * (lo + 1), n_users);
  const BigRational lo_rate = RateMn(n_files, n_users, lo_memory);
  const BigRational hi_rate = RateMn(n_files, n_users, hi_memory);
  const BigRational weight = position - BigRational(lo);
  return lo_rate + weight * (hi_rate - lo_rate);
}

BigRational CutsetBound(int n_files, const BigRational& memory) {
  return Max(BigRational(0),
             BigRational(1) - memory / BigRational(n_files));
}

BigRational F1Bound(int n_files, const BigRational& memory) {
  if (memory.IsZero()) throw std::invalid_argument("f1 undefined at M = 0");
  return BigRational(n_files) / memory - Frac(1, 2);
}

BigRational F2Bound(int n_files, const BigRational& memory) {
  return BigRational(2) * (BigRational(1) - memory / BigRational(n_files));
}

bool GapReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const GapCheck& c) {
    return !c.applicable || c.passed;
  });
}

namespace {

std::optional<BigRational> MaxRatio(const std::vector<GridRatio>& ratios) {
  std::optional<BigRational> best;
  for (const auto& r : ratios) {
    if (r.ratio && (!best || *r.ratio > *best)) best = r.ratio;
  }
  return best;
}

}  // namespace

std::optional<BigRational> GapReport::max_mn_ratio() const {
  return MaxRatio(mn_ratios);
}

std::optional<BigRational> GapReport::max_private_ratio() const {
  return MaxRatio(private_ratios);
}

const GapCheck* GapReport::Find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

GapReport RateGapReport(int n_files, int n_users) {
  RequirePositive(n_files, n_users);
  const int n = n_files;
  const int k = n_users;
  const long long nk = static_cast<long long>(n) * k;
  GapReport report;
  report.n_files = n;
  report.n_users = k;

  const RateCurve grid = PrivateRateGrid(n, k);
  const RateCurve envelope = Envelope(grid.points(), "R_private_env");

  // (i) Envelope equals interpolation, and the private rate equals the
  // NK-user leader-based rate, at every grid point.
  {
    CheckBuilder check("i", "envelope = interpolation = R_yma(N,NK,M) on M = t/K");
    for (int t = 0; t <= nk; ++t) {
      const RatePoint& p = grid.points()[t];
      const BigRational yma = YmaRate(n, static_cast<int>(nk), t);
      const BigRational env = envelope.Evaluate(p.memory);
      check.Expect(env == p.rate && yma == p.rate, [&] {
        return At(p.memory) + " R_private=" + p.rate.ToString() +
               " envelope=" + env.ToString() + " R_yma_NK=" + yma.ToString();
      });
    }
    report.checks.push_back(check.Finish());
  }

  // (ii) R_yma(N,NK,M) <= R_mn(N,NK,M) on the NK-user grid.
  {
    CheckBuilder check("ii", "R_yma(N,NK,M) <= R_mn(N,NK,M) on M = t/K");
    for (int t = 0; t <= nk; ++t) {
      const BigRational m = Frac(t, k);
      const BigRational yma = YmaRate(n, static_cast<int>(nk), t);
      const BigRational mn = RateMn(n, static_cast<int>(nk), m);
      check.Expect(yma <= mn, [&] {
        return At(m) + " R_yma_NK=" + yma.ToString() +
               " R_mn_NK=" + mn.ToString();
      });
    }
    report.checks.push_back(check.Finish());
  }

  // (iii) R_mn(N,NK,M) / R_mn(N,K,M) <= 2 on M in {0, N/K, ..., N}.
  {
    CheckBuilder ratio_check(
        "iii", "R_mn(N,NK,M) / R_mn(N,K,M) <= 2 on M = iN/K (N <= K)");
    CheckBuilder case_check(
        "iii-cases", "case closed forms 1, N/K+M, (N+KM)/(1+KM) (N <= K)");
    if (n > k) {
      report.checks.push_back(ratio_check.NotApplicable("requires N <= K"));
      report.checks.push_back(case_check.NotApplicable("requires N <= K"));
    } else {
      const BigRational case1_end = BigRational(1) - Frac(n, k);
      const BigRational case3_start = BigRational(1) - Frac(1, k);
      for (int i = 0; i <= k; ++i) {
        const BigRational m = Frac(static_cast<long long>(n) * i, k);
        GridRatio row;
        row.memory = m;
        row.numerator = RateMn(n, static_cast<int>(nk), m);
        row.denominator = RateMn(n, k, m);
        row.ratio = SafeRatio(row.numerator, row.denominator);
        row.passed = RatioAtMostTwo(row.numerator, row.denominator);
        ratio_check.Expect(row.passed, [&] {
          return At(m) + " ratio " + row.numerator.ToString() + " / " +
                 row.denominator.ToString();
        });
        std::vector<std::string> tags;
        if (m <= case1_end) {
          tags.push_back("case1");
          if (row.ratio) {
            case_check.Expect(*row.ratio == BigRational(1), [&] {
              return At(m) + " case 1 ratio " + row.ratio->ToString();
            });
          }
        }
        if (m >= case1_end && m <= case3_start) {
          tags.push_back("case2");
          if (row.ratio) {
            const BigRational expected = Frac(n, k) + m;
            case_check.Expect(*row.ratio == expected, [&] {
              return At(m) + " case 2 ratio " + row.ratio->ToString() +
                     " expected " + expected.ToString();
            });
          }
        }
        if (m >= case3_start) {
          tags.push_back("case3");
          if (row.ratio) {
            const BigRational km = BigRational(k) * m;
            const BigRational expected =
                (BigRational(n) + km) / (BigRational(1) + km);
            case_check.Expect(*row.ratio == expected, [&] {
              return At(m) + " case 3 ratio " + row.ratio->ToString() +
                     " expected " + expected.ToString();
            });
          }
        }
        for (std::size_t j = 0; j < tags.size(); ++j) {
          row.tag += (j ? "," : "") + tags[j];
        }
        report.mn_ratios.push_back(std::move(row));
      }
      report.checks.push_back(ratio_check.Finish());
      report.checks.push_back(case_check.Finish());
    }
  }

  // (iv) R_private(M) / R_yma(N,K,M) <= 2 for M in {N/K, ..., N}, with the
  // intermediate bounds through r1 = KM and r2 = KM/N.
  {
    CheckBuilder ratio_check(
        "iv", "R_private(M) / R_yma(N,K,M) <= 2 on M = r2 N/K, r2 >= 1 (N >= K)");
    CheckBuilder chain_check(
        "iv-chain",
        "R_private <= (NK-r1)/(r1+1) and N(r2+1)/(N r2+1) <= 2 (N >= K)");
    if (n < k) {
      report.checks.push_back(ratio_check.NotApplicable("requires N >= K"));
      report.checks.push_back(chain_check.NotApplicable("requires N >= K"));
    } else {
      for (int r2 = 1; r2 <= k; ++r2) {
        const BigRational m = Frac(static_cast<long long>(n) * r2, k);
        const long long r1 = static_cast<long long>(n) * r2;
        GridRatio row;
        row.memory = m;
        row.numerator = RatePrivate(n, k, static_cast<int>(r1));
        row.denominator = RateYmaAt(n, k, m);
        row.ratio = SafeRatio(row.numerator, row.denominator);
        row.passed = RatioAtMostTwo(row.numerator, row.denominator);
        row.tag = "r2=" + std::to_string(r2);
        ratio_check.Expect(row.passed, [&] {
          return At(m) + " ratio " + row.numerator.ToString() + " / " +
                 row.denominator.ToString();
        });
        const BigRational upper = Frac(nk - r1, r1 + 1);
        chain_check.Expect(row.numerator <= upper, [&] {
          return At(m) + " R_private=" + row.numerator.ToString() +
                 " exceeds (NK-r1)/(r1+1)=" + upper.ToString();
        });
        const BigRational bound = Frac(static_cast<long long>(n) * (r2 + 1),
                                       static_cast<long long>(n) * r2 + 1);
        chain_check.Expect(bound <= BigRational(2), [&] {
          return At(m) + " N(r2+1)/(N r2+1)=" + bound.ToString();
        });
        if (r2 < k) {
          const BigRational product =
              Frac((nk - r1) * (r2 + 1), (r1 + 1) * (k - r2));
          chain_check.Expect(product <= bound, [&] {
            return At(m) + " (NK-r1)(r2+1)/((r1+1)(K-r2))=" +
                   product.ToString() + " exceeds " + bound.ToString();
          });
        }
        report.private_ratios.push_back(std::move(row));
      }
      report.checks.push_back(ratio_check.Finish());
      report.checks.push_back(chain_check.Finish());
    }
  }

  // (v) Exactness at the top of the memory range.
  {
    CheckBuilder check("v", "R_private((NK-1)/K) = 1/(NK) = cutset, R_private(N) = 0");
    const BigRational m = Frac(nk - 1, k);
    const BigRational rate = RatePrivate(n, k, static_cast<int>(nk - 1));
    const BigRational cut = CutsetBound(n, m);
    const BigRational target = Frac(1, nk);
    check.Expect(rate == target && cut == target, [&] {
      return At(m) + " R_private=" + rate.ToString() +
             " cutset=" + cut.ToString() + " 1/(NK)=" + target.ToString();
    });
    const BigRational top = RatePrivate(n, k, static_cast<int>(nk));
    check.Expect(top.IsZero(), [&] {
      return "R_private(N)=" + top.ToString();
    });
    report.checks.push_back(check.Finish(
        "R_private(" + m.ToString() + ") = " + rate.ToString() +
        " = cutset(" + m.ToString() + ") = " + cut.ToString() +
        "; R_private(" + std::to_string(n) + ") = " + top.ToString()));
  }

  // (vi) Monotonicity and convexity of R_mn_lin on the dense grid.
  const std::vector<BigRational> dense = DenseGrid(n);
  std::vector<BigRational> lin;
  lin.reserve(dense.size());
  for (const auto& m : dense) lin.push_back(RateMnLin(n, k, m));
  {
    CheckBuilder check("vi-monotone", "R_mn_lin(N,K,M) non-increasing on [0, N]");
    for (std::size_t i = 1; i < dense.size(); ++i) {
      check.Expect(lin[i] <= lin[i - 1], [&] {
        return At(dense[i]) + " R_mn_lin=" + lin[i].ToString() +
               " exceeds previous " + lin[i - 1].ToString();
      });
    }
    report.checks.push_back(check.Finish());
  }
  {
    const BigRational start = Max(BigRational(0), BigRational(1) - Frac(n, k));
    CheckBuilder check("vi-convex", "R_mn_lin(N,K,M) convex on [max(0, 1-N/K), N]");
    for (std::size_t i = 1; i + 1 < dense.size(); ++i) {
      if (dense[i - 1] < start) continue;
      const BigRational second = lin[i + 1] - BigRational(2) * lin[i] + lin[i - 1];
      check.Expect(second.Sign() >= 0, [&] {
        return At(dense[i]) + " second difference " + second.ToString();
      });
    }
    report.checks.push_back(check.Finish());
  }

  // Region bounds on the same dense grid.
  {
    CheckBuilder region1("region-I", "R_mn_lin <= N on [0, 1] (N <= K)");
    CheckBuilder region2(
        "region-II", "R_mn_lin <= R_mn(N t0/K) <= f1 on [1, N/2] (N <= K)");
    CheckBuilder region3(
        "region-III",
        "R_mn_lin <= lambda R_mn(N t0/K) <= f2 on [N/2, N] (N <= K)");
    std::uint64_t count1 = 0, count2 = 0, count3 = 0;
    if (n > k) {
      report.checks.push_back(region1.NotApplicable("requires N <= K"));
      report.checks.push_back(region2.NotApplicable("requires N <= K"));
      report.checks.push_back(region3.NotApplicable("requires N <= K"));
    } else {
      const BigRational half = Frac(n, 2);
      const int t0_high = k / 2;
      const BigRational anchor_high = Frac(static_cast<long long>(n) * t0_high, k);
      const BigRational rate_high = RateMn(n, k, anchor_high);
      for (std::size_t i = 0; i < dense.size(); ++i) {
        const BigRational& m = dense[i];
        if (m <= BigRational(1)) {
          ++count1;
          region1.Expect(lin[i] <= BigRational(n), [&] {
            return At(m) + " R_mn_lin=" + lin[i].ToString();
          });
        }
        if (m >= BigRational(1) && m <= half) {
          ++count2;
          const BigRational position = m * BigRational(k) / BigRational(n);
          const int t0 = static_cast<int>(position.numerator() /
                                          position.denominator());
          const BigRational anchor = RateMn(
              n, k, Frac(static_cast<long long>(n) * t0, k));
          const BigRational f1 = F1Bound(n, m);
          region2.Expect(lin[i] <= anchor && anchor <= f1, [&] {
            return At(m) + " R_mn_lin=" + lin[i].ToString() +
                   " R_mn(N t0/K)=" + anchor.ToString() + " f1=" + f1.ToString();
          });
        }
        if (m >= half) {
          ++count3;
          const BigRational lambda =
              (BigRational(1) - m / BigRational(n)) /
              (BigRational(1) - Frac(t0_high, k));
          const BigRational scaled = lambda * rate_high;
          const BigRational f2 = F2Bound(n, m);
          region3.Expect(lin[i] <= scaled && scaled <= f2, [&] {
            return At(m) + " R_mn_lin=" + lin[i].ToString() +
                   " lambda R_mn(N t0/K)=" + scaled.ToString() +
                   " f2=" + f2.ToString();
          });
        }
      }
      report.checks.push_back(region1.Finish());
      report.checks.push_back(region2.Finish());
      report.checks.push_back(region3.Finish());
    }
    report.region_counts = {{"region-I", count1},
                            {"region-II", count2},
                            {"region-III", count3}};
  }

  // Sanity relations between the private curve and the simple bounds.
  {
    CheckBuilder check("sandwich",
                       "cutset(M) <= R_private(M) <= N - M, non-increasing in t");
    for (int t = 0; t <= nk; ++t) {
      const RatePoint& p = grid.points()[t];
      const BigRational cut = CutsetBound(n, p.memory);
      const BigRational trivial = BigRational(n) - p.memory;
      check.Expect(cut <= p.rate && p.rate <= trivial, [&] {
        return At(p.memory) + " R_private=" + p.rate.ToString() +
               " cutset=" + cut.ToString() + " N-M=" + trivial.ToString();
      });
      if (t > 0) {
        check.Expect(p.rate <= grid.points()[t - 1].rate, [&] {
          return At(p.memory) + " R_private increases";
        });
      }
    }
    report.checks.push_back(check.Finish());
  }
  return report;
}

std::string RenderGapReport(const GapReport& report) {
  std::ostringstream out;
  out << "bounds N=" << report.n_files << " K=" << report.n_users << "\n";
  for (const auto& c : report.checks) {
    const char* verdict = !c.applicable ? "SKIP" : (c.passed ? "PASS" : "FAIL");
    out << "[" << verdict << "] " << c.id << ": " << c.description;
    if (c.applicable) out << " (" << c.points << " points)";
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << "\n";
  }
  for (const auto& r : report.mn_ratios) {
    out << "ratio-mn " << At(r.memory) << " " << r.tag << " "
        << (r.ratio ? r.ratio->ToString() : std::string("0/0")) << "\n";
  }
  for (const auto& r : report.private_ratios) {
    out << "ratio-private " << At(r.memory) << " " << r.tag << " "
        << (r.ratio ? r.ratio->ToString() : std::string("0/0")) << "\n";
  }
  if (auto best = report.max_mn_ratio()) {
    out << "max ratio R_mn(N,NK,M)/R_mn(N,K,M) = " << *best << " ("
        << best->ToDouble() << ")\n";
  }
  if (auto best = report.max_private_ratio()) {
    out << "max ratio R_private/R_yma(N,K,M) = " << *best << " ("
        << best->ToDouble() << ")\n";
  }
  for (const auto& [name, count] : report.region_counts) {
    out << name << " dense points: " << count << "\n";
  }
  out << "reference: region-I lower bound N/4 = "
      << BigRational(BigInt(report.n_files), BigInt(4))
      << " (not checked)\n";
  out << (report.passed() ? "result: PASS" : "result: FAIL") << "\n";
  return out.str();
}

CurveTable EmitCurveTable(int n_files, int n_users, int resolution) {
  RequirePositive(n_files, n_users);
  if (resolution <= 0) throw std::invalid_argument("resolution must be positive");
  const int n = n_files;
  const int k = n_users;
  CurveTable table;
  table.n_files = n;
  table.n_users = k;
  table.columns = {"R_private", "R_private_env", "R_yma_K", "R_yma_NK",
                   "R_mn_K",    "R_mn_lin_K",    "cutset",  "f1",
                   "f2",        "trivial"};
  const RateCurve envelope = Envelope(PrivateRateGrid(n, k).points(),
                                      "R_private_env");
  const long long steps = static_cast<long long>(n) * k * resolution;
  const long long denominator = static_cast<long long>(k) * resolution;
  const int nk = n * k;
  for (long long j = 0; j <= steps; ++j) {
    const BigRational m = Frac(j, denominator);
    std::vector<std::optional<BigRational>> row;
    const auto t = PrivateGridIndex(k, m);
    const auto r = KUserGridIndex(n, k, m);
    row.push_back(t ? std::optional(RatePrivate(n, k, *t)) : std::nullopt);
    row.push_back(envelope.Evaluate(m));
    row.push_back(r ? std::optional(YmaRate(n, k, *r)) : std::nullopt);
    row.push_back(t ? std::optional(YmaRate(n, nk, *t)) : std::nullopt);
    row.push_back(r ? std::optional(RateMn(n, k, m)) : std::nullopt);
    row.push_back(RateMnLin(n, k, m));
    row.push_back(CutsetBound(n, m));
    row.push_back(m.IsZero() ? std::nullopt : std::optional(F1Bound(n, m)));
    row.push_back(F2Bound(n, m));
    row.push_back(BigRational(n) - m);
    table.memory.push_back(m);
    table.cells.push_back(std::move(row));
  }
  return table;
}

std::vector<RateCurve> EmitCurves(int n_files, int n_users, int resolution) {
  const CurveTable table = EmitCurveTable(n_files, n_users, resolution);
  std::vector<RateCurve> curves;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    std::vector<RatePoint> points;
    for (std::size_t row = 0; row < table.memory.size(); ++row) {
      if (table.cells[row][c]) {
        points.push_back({table.memory[row], *table.cells[row][c]});
      }
    }
    curves.emplace_back(table.columns[c], std::move(points));
  }
  const BigRational quarter(BigInt(n_files), BigInt(4));
  const BigRational end = Min(BigRational(1), BigRational(n_files));
  curves.emplace_back("region1_reference",
                      std::vector<RatePoint>{{BigRational(0), quarter},
                                             {end, quarter}});
  return curves;
}

void WriteCurveCsv(const CurveTable& table, std::ostream& decimal,
                   std::ostream& exact) {
  decimal << "M";
  exact << "M";
  for (const auto& name : table.columns) {
    decimal << ',' << name;
    exact << ',' << name;
  }
  decimal << '\n';
  exact << '\n';
  auto format = [](const BigRational& value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value.ToDouble());
    return std::string(buffer);
  };
  for (std::size_t row = 0; row < table.memory.size(); ++row) {
    decimal << format(table.memory[row]);
    exact << table.memory[row].ToString();
    for (const auto& cell : table.cells[row]) {
      decimal << ',';
      exact << ',';
      if (cell) {
        decimal << format(*cell);
        exact << cell->ToString();
      }
    }
    decimal << '\n';
    exact << '\n';
  }
}

}  // namespace dpcc
