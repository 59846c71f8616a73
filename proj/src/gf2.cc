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

#include <unordered_map>

namespace dpcc::gf2 {

namespace {

struct Row {
  boost::dynamic_bitset<std::uint64_t> coeffs;
  Block rhs;
};

}  // namespace

std::optional<std::vector<Block>> Solve(std::span<const XorEquation> equations,
                                        std::span<const std::uint64_t> wanted,
                                        std::size_t block_bits) {
  std::unordered_map<std::uint64_t, std::size_t> column;
  for (const auto& eq : equations) {
    for (auto symbol : eq.symbols) column.try_emplace(symbol, column.size());
  }
  for (auto symbol : wanted) {
    if (!column.contains(symbol)) return std::nullopt;
  }
  const std::size_t n_cols = column.size();

  std::vector<Row> rows;
  rows.reserve(equations.size());
  for (const auto& eq : equations) {
    Row row{boost::dynamic_bitset<std::uint64_t>(n_cols), eq.rhs};
    if (row.rhs.size() != block_bits) row.rhs.resize(block_bits);
    for (auto symbol : eq.symbols) row.coeffs.flip(column[symbol]);
    rows.push_back(std::move(row));
  }

  // Gauss-Jordan to reduced row echelon form.
  std::vector<std::size_t> pivot_row(n_cols, rows.size());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_cols && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && !rows[r].coeffs.test(col)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    for (std::size_t other = 0; other < rows.size(); ++other) {
      if (other != rank && rows[other].coeffs.test(col)) {
        rows[other].coeffs ^= rows[rank].coeffs;
        rows[other].rhs ^= rows[rank].rhs;
      }
    }
    pivot_row[col] = rank++;
  }

  // In reduced form, e_x lies in the row space iff x is a pivot whose row
  // has no other nonzero coefficient.
  std::vector<Block> values;
  values.reserve(wanted.size());
  for (auto symbol : wanted) {
    const std::size_t col = column[symbol];
    const std::size_t r = pivot_row[col];
    if (r == rows.size() || rows[r].coeffs.count() != 1) return std::nullopt;
    values.push_back(rows[r].rhs);
  }
  return values;
}

}  // namespace dpcc::gf2
