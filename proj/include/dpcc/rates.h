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

// Exact memory-rate curves and bounds. Every value is a BigRational; floats
// appear only when curves are written out as decimals.

#ifndef DPCC_RATES_H_
#define DPCC_RATES_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dpcc/combinatorics.h"

namespace dpcc {

struct RatePoint {
  BigRational memory;
  BigRational rate;
  friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

// Piecewise-linear curve through points with strictly increasing memory.
class RateCurve {
 public:
  RateCurve() = default;
  // Throws std::invalid_argument unless memories strictly increase.
  RateCurve(std::string label, std::vector<RatePoint> points);

  const std::string& label() const { return label_; }
  const std::vector<RatePoint>& points() const { return points_; }

  // Linear interpolation; throws std::out_of_range outside the covered span.
  BigRational Evaluate(const BigRational& memory) const;

 private:
  std::string label_;
  std::vector<RatePoint> points_;
};

// Private scheme at t = K M: (C(NK, t+1) - C(NK-N, t+1)) / C(NK, t).
// Throws std::invalid_argument for t outside [0, NK].
BigRational RatePrivate(int n_files, int n_users, int cache_index);

// The grid (t/K, RatePrivate) for t = 0..NK.
RateCurve PrivateRateGrid(int n_files, int n_users);

// Lower convex envelope, keeping only hull vertices. Throws
// std::invalid_argument for fewer than two points or repeated memories.
RateCurve Envelope(std::vector<RatePoint> points, std::string label = "envelope");

// Non-private leader-based scheme for K users at memory M, defined when
// K M / N is an integer in [0, K]. Throws std::invalid_argument otherwise.
BigRational RateYmaAt(int n_files, int n_users, const BigRational& memory);

// Uncoded-placement scheme K (1 - M/N) min(1 / (1 + K M / N), N / K) on the
// grid M in {0, N/K, ..., N}. Throws std::invalid_argument off the grid.
BigRational RateMn(int n_files, int n_users, const BigRational& memory);

// RateMn linearly interpolated between adjacent grid points, M in [0, N].
BigRational RateMnLin(int n_files, int n_users, const BigRational& memory);

// max(0, 1 - M/N).
BigRational CutsetBound(int n_files, const BigRational& memory);

// N/M - 1/2; throws std::invalid_argument at M = 0.
BigRational F1Bound(int n_files, const BigRational& memory);
// 2 (1 - M/N).
BigRational F2Bound(int n_files, const BigRational& memory);

// One internally checkable inequality family and its outcome.
struct GapCheck {
  std::string id;
  std::string description;
  bool applicable = true;
  bool passed = true;
  std::uint64_t points = 0;
  std::string detail;  // first counterexample, or a summary
};

// Ratio numerator/denominator at a memory point, tagged with the proof
// case or region it falls in.
struct GridRatio {
  BigRational memory;
  BigRational numerator;
  BigRational denominator;
  std::optional<BigRational> ratio;  // unset when the denominator is 0
  std::string tag;
  bool passed = true;
};

struct GapReport {
  int n_files = 0;
  int n_users = 0;
  std::vector<GapCheck> checks;
  std::vector<GridRatio> mn_ratios;        // N <= K, Cases 1-3
  std::vector<GridRatio> private_ratios;   // N >= K, M >= N/K
  std::vector<std::pair<std::string, std::uint64_t>> region_counts;

  bool passed() const;
  std::optional<BigRational> max_mn_ratio() const;
  std::optional<BigRational> max_private_ratio() const;
  const GapCheck* Find(const std::string& id) const;
};

// Resolution of the dense grids used for the monotonicity, convexity and
// region checks: M = N i / kDenseGridIntervals.
inline constexpr int kDenseGridIntervals = 1000;

GapReport RateGapReport(int n_files, int n_users);
std::string RenderGapReport(const GapReport& report);

// Rows M = j / (K resolution), j = 0..NK resolution.
struct CurveTable {
  int n_files = 0;
  int n_users = 0;
  std::vector<std::string> columns;
  std::vector<BigRational> memory;
  // cells[row][column]; unset where the curve is undefined.
  std::vector<std::vector<std::optional<BigRational>>> cells;
};

CurveTable EmitCurveTable(int n_files, int n_users, int resolution = 1);

// Named curves: the private grid and its envelope, the leader-based and
// uncoded-placement curves, cutset, f1, f2, the trivial N - M line and the
// constant N/4 reference line.
std::vector<RateCurve> EmitCurves(int n_files, int n_users, int resolution = 1);

// Decimal CSV (12 significant digits) and the matching fraction-string CSV.
void WriteCurveCsv(const CurveTable& table, std::ostream& decimal,
                   std::ostream& exact);

}  // namespace dpcc

#endif  // DPCC_RATES_H_
