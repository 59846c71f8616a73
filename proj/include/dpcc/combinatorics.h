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

#ifndef DPCC_COMBINATORICS_H_
#define DPCC_COMBINATORICS_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dpcc {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long long value);  // NOLINT(runtime/explicit)
  explicit BigRational(BigInt value);
  BigRational(BigInt numerator, BigInt denominator);

  // Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  // input or a zero denominator.
  static BigRational Parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool IsZero() const { return value_ == 0; }
  bool IsInteger() const { return denominator() == 1; }
  int Sign() const { return value_.sign(); }

  // "p" when integral, "p/q" otherwise.
  std::string ToString() const;
  double ToDouble() const;

  BigRational& operator+=(const BigRational& other);
  BigRational& operator-=(const BigRational& other);
  BigRational& operator*=(const BigRational& other);
  // Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& other);

  friend BigRational operator+(BigRational a, const BigRational& b) {
    return a += b;
  }
  friend BigRational operator-(BigRational a, const BigRational& b) {
    return a -= b;
  }
  friend BigRational operator*(BigRational a, const BigRational& b) {
    return a *= b;
  }
  friend BigRational operator/(BigRational a, const BigRational& b) {
    return a /= b;
  }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a,
                                          const BigRational& b);

 private:
  explicit BigRational(boost::multiprecision::cpp_rational value)
      : value_(std::move(value)) {}

  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

BigRational Min(const BigRational& a, const BigRational& b);
BigRational Max(const BigRational& a, const BigRational& b);

// C(n, k); zero when k < 0 or k > n.
BigInt Binomial(std::int64_t n, std::int64_t k);

// C(n, k) as a 64-bit value. Throws std::overflow_error when it does not fit.
std::uint64_t Binomial64(std::int64_t n, std::int64_t k);

// Position of a t-subset of {1..n} in colexicographic order.
struct SubsetIndex {
  int universe = 0;
  int cardinality = 0;
  std::uint64_t rank = 0;

  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;
};

// `subset` must be sorted ascending with distinct members in [1, n].
// Throws std::invalid_argument otherwise.
SubsetIndex RankSubset(int n, std::span<const int> subset);

// Inverse of RankSubset. Throws std::out_of_range if rank >= C(n, t).
std::vector<int> UnrankSubset(int n, int t, std::uint64_t rank);

// Precomputed 64-bit binomial table for repeated ranking in hot loops.
// Construction throws std::overflow_error if any C(i, j), i <= n, overflows.
class SubsetRanker {
 public:
  explicit SubsetRanker(int n);

  int universe() const { return n_; }
  std::uint64_t Choose(int n, int k) const;

  // Colex rank of a sorted subset of {1..n}; no validation.
  std::uint64_t Rank(std::span<const int> subset) const;
  // Colex rank of `subset` with the member at position `skip` removed.
  std::uint64_t RankWithout(std::span<const int> subset,
                            std::size_t skip) const;
  std::vector<int> Unrank(int t, std::uint64_t rank) const;

 private:
  int n_;
  std::vector<std::vector<std::uint64_t>> table_;
};

// Advances a sorted t-subset of {1..n} to its colex successor. Returns false
// (leaving `subset` unspecified) after the last subset.
bool NextColex(int n, std::vector<int>& subset);

}  // namespace dpcc

#endif  // DPCC_COMBINATORICS_H_
