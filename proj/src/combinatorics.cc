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

#include "dpcc/combinatorics.h"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dpcc {

namespace {

using boost::multiprecision::cpp_rational;

BigInt ParseInteger(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = 0;
  bool negative = false;
  if (digits[0] == '-' || digits[0] == '+') {
    negative = digits[0] == '-';
    start = 1;
  }
  if (start == digits.size()) throw std::invalid_argument("empty integer");
  BigInt value = 0;
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw std::invalid_argument("malformed rational: " + std::string(digits));
    }
    value = value * 10 + (digits[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

BigRational::BigRational(long long value) : value_(value) {}

BigRational::BigRational(BigInt value) : value_(std::move(value)) {}

BigRational::BigRational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = cpp_rational(std::move(numerator), std::move(denominator));
}

BigRational BigRational::Parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(ParseInteger(text));
  BigInt den = ParseInteger(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return BigRational(ParseInteger(text.substr(0, slash)), std::move(den));
}

BigInt BigRational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

BigInt BigRational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

std::string BigRational::ToString() const {
  if (IsInteger()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

double BigRational::ToDouble() const { return value_.convert_to<double>(); }

BigRational& BigRational::operator+=(const BigRational& other) {
  value_ += other.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& other) {
  value_ -= other.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& other) {
  value_ *= other.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& other) {
  if (other.value_ == 0) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(cpp_rational(-value_)); }

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
  return os << r.ToString();
}

BigRational Min(const BigRational& a, const BigRational& b) {
  return b < a ? b : a;
}

BigRational Max(const BigRational& a, const BigRational& b) {
  return a < b ? b : a;
}

BigInt Binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // Each partial product C(n-k+i, i) is integral.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t Binomial64(std::int64_t n, std::int64_t k) {
  const BigInt value = Binomial(n, k);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("C(" + std::to_string(n) + ", " +
                              std::to_string(k) + ") exceeds 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

SubsetIndex RankSubset(int n, std::span<const int> subset) {
  if (n < 0) throw std::invalid_argument("negative universe");
  if (subset.size() > static_cast<std::size_t>(n)) {
    throw std::invalid_argument("subset larger than universe");
  }
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const int member = subset[i];
    if (member < 1 || member > n) {
      throw std::invalid_argument("subset member " + std::to_string(member) +
                                  " outside [1, " + std::to_string(n) + "]");
    }
    if (i > 0 && member <= subset[i - 1]) {
      throw std::invalid_argument(
          "subset members must be distinct and ascending");
    }
    rank += Binomial64(member - 1, static_cast<std::int64_t>(i) + 1);
  }
  return {n, static_cast<int>(subset.size()), rank};
}

std::vector<int> UnrankSubset(int n, int t, std::uint64_t rank) {
  if (t < 0 || t > n) throw std::out_of_range("cardinality outside [0, n]");
  if (BigInt(rank) >= Binomial(n, t)) {
    throw std::out_of_range("rank " + std::to_string(rank) + " >= C(" +
                            std::to_string(n) + ", " + std::to_string(t) + ")");
  }
  std::vector<int> subset(t);
  int hi = n;
  for (int i = t; i >= 1; --i) {
    // Largest member c with C(c - 1, i) <= rank.
    int c = hi;
    while (BigInt(Binomial(c - 1, i)) > rank) --c;
    subset[i - 1] = c;
    rank -= Binomial64(c - 1, i);
    hi = c - 1;
  }
  return subset;
}

SubsetRanker::SubsetRanker(int n) : n_(n), table_(n + 1) {
  if (n < 0) throw std::invalid_argument("negative universe");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (int i = 0; i <= n; ++i) {
    table_[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) {
      const std::uint64_t a = table_[i - 1][j - 1];
      const std::uint64_t b = table_[i - 1][j];
      if (a > kMax - b) {
        throw std::overflow_error("binomial table overflows 64 bits at n=" +
                                  std::to_string(i));
      }
      table_[i][j] = a + b;
    }
  }
}

std::uint64_t SubsetRanker::Choose(int n, int k) const {
  if (n < 0 || k < 0 || k > n) return 0;
  return table_.at(n)[k];
}

std::uint64_t SubsetRanker::Rank(std::span<const int> subset) const {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    rank += Choose(subset[i] - 1, static_cast<int>(i) + 1);
  }
  return rank;
}

std::uint64_t SubsetRanker::RankWithout(std::span<const int> subset,
                                        std::size_t skip) const {
  std::uint64_t rank = 0;
  int position = 1;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i == skip) continue;
    rank += Choose(subset[i] - 1, position++);
  }
  return rank;
}

std::vector<int> SubsetRanker::Unrank(int t, std::uint64_t rank) const {
  if (t < 0 || t > n_ || rank >= Choose(n_, t)) {
    throw std::out_of_range("subset rank out of range");
  }
  std::vector<int> subset(t);
  int hi = n_;
  for (int i = t; i >= 1; --i) {
    int c = hi;
    while (Choose(c - 1, i) > rank) --c;
    subset[i - 1] = c;
    rank -= Choose(c - 1, i);
    hi = c - 1;
  }
  return subset;
}

bool NextColex(int n, std::vector<int>& subset) {
  const std::size_t t = subset.size();
  for (std::size_t i = 0; i < t; ++i) {
    const int limit = (i + 1 < t) ? subset[i + 1] : n + 1;
    if (subset[i] + 1 < limit) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<int>(j) + 1;
      return true;
    }
  }
  return false;
}

}  // namespace dpcc
