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

#include "dpcc/fixture.h"

#include <stdexcept>
#include <string>
#include <utility>

#include "dpcc/gf2.h"
#include "dpcc/yma_scheme.h"

namespace dpcc {

namespace {

constexpr std::array<FixtureCacheRow, 4> kCaches = {{
    {1, 1, "A1 A2 A3 B1 B2 B3"},
    {1, 2, "A1 A4 A5 B1 B4 B5"},
    {2, 1, "A2 A4 A6 B2 B4 B6"},
    {2, 2, "A3 A5 A6 B3 B5 B6"},
}};

constexpr std::array<FixtureTransmissionRow, 16> kTransmissions = {{
    {1, 1, 1, 1, 1, "B2+A1+A4"},
    {1, 2, 1, 2, 1, "B4+B6+A5"},
    {2, 1, 2, 1, 1, "B2+A6+A3"},
    {2, 2, 2, 2, 1, "B1+A5+B3"},
    {1, 1, 1, 2, 2, "B1+A4+B2"},
    {1, 2, 1, 1, 2, "A4+B6+B5"},
    {2, 1, 2, 2, 2, "A2+A6+B3"},
    {2, 2, 2, 1, 2, "A1+A5+B3"},
    {1, 1, 2, 1, 3, "B4+A2+A1"},
    {1, 2, 2, 2, 3, "A6+A5+B4"},
    {2, 1, 1, 1, 3, "B6+A3+B2"},
    {2, 2, 1, 2, 3, "B5+A3+B1"},
    {1, 1, 2, 2, 4, "B4+A2+B1"},
    {1, 2, 2, 1, 4, "A6+B5+A4"},
    {2, 1, 1, 2, 4, "B6+B3+A2"},
    {2, 2, 1, 1, 4, "B5+A3+A1"},
}};

constexpr std::size_t kSubfiles = 6;

// "B4" -> (file 2, subfile 3).
std::pair<int, std::size_t> ParseSymbol(std::string_view token) {
  if (token.size() != 2 || (token[0] != 'A' && token[0] != 'B') ||
      token[1] < '1' || token[1] > '6') {
    throw std::logic_error("bad fixture symbol " + std::string(token));
  }
  return {token[0] == 'A' ? 1 : 2, static_cast<std::size_t>(token[1] - '1')};
}

std::vector<std::pair<int, std::size_t>> ParseSymbols(std::string_view text,
                                                      char separator) {
  std::vector<std::pair<int, std::size_t>> symbols;
  while (!text.empty()) {
    const auto end = text.find(separator);
    symbols.push_back(ParseSymbol(text.substr(0, end)));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return symbols;
}

std::uint64_t SymbolId(int file, std::size_t index) {
  return static_cast<std::uint64_t>(file - 1) * kSubfiles + index;
}

// The four XOR rows of transmission `index`, in table order.
std::vector<std::vector<std::pair<int, std::size_t>>> TransmissionRows(
    int index) {
  std::vector<std::vector<std::pair<int, std::size_t>>> rows;
  for (const auto& row : kTransmissions) {
    if (row.transmission == index) rows.push_back(ParseSymbols(row.bit, '+'));
  }
  return rows;
}

}  // namespace

const std::array<FixtureCacheRow, 4>& FixtureCacheTable() { return kCaches; }

const std::array<FixtureTransmissionRow, 16>& FixtureTransmissionTable() {
  return kTransmissions;
}

FixtureScheme::FixtureScheme(std::size_t subfile_bits) : bits_(subfile_bits) {
  if (subfile_bits == 0) throw std::invalid_argument("empty subfiles");
}

int FixtureScheme::TransmissionFor(const KeyVector& keys,
                                   const DemandVector& demands) {
  if (keys.s.size() != 2 || demands.d.size() != 2) {
    throw std::invalid_argument("fixture has two users");
  }
  for (const auto& row : kTransmissions) {
    if (row.s1 == keys.s[0] && row.s2 == keys.s[1] && row.d1 == demands.d[0] &&
        row.d2 == demands.d[1]) {
      return row.transmission;
    }
  }
  throw std::invalid_argument("keys or demands outside {1, 2}");
}

CacheContent FixtureScheme::Place(const FileLibrary& library, int user,
                                  int key) const {
  for (const auto& row : kCaches) {
    if (row.user != user || row.key != key) continue;
    CacheContent cache{user, key, {}};
    for (auto [file, index] : ParseSymbols(row.content, ' ')) {
      cache.store.push_back({file, index, library.subfile(file, index)});
    }
    return cache;
  }
  throw std::invalid_argument("fixture cache (user, key) outside {1, 2}");
}

BroadcastMessage FixtureScheme::Deliver(const FileLibrary& library,
                                        const DemandVector& demands,
                                        const KeyVector& keys) const {
  const int index = TransmissionFor(keys, demands);
  BroadcastMessage message;
  message.header = {index - 1};
  message.header_symbol_bits = 2;
  for (const auto& row : TransmissionRows(index)) {
    Block bits(bits_);
    for (auto [file, subfile] : row) bits ^= library.subfile(file, subfile);
    message.payload.push_back(std::move(bits));
  }
  return message;
}

std::vector<Block> FixtureScheme::Decode(int /*user*/,
                                         const CacheContent& cache,
                                         const BroadcastMessage& broadcast,
                                         int demand) const {
  if (broadcast.header.size() != 1 || broadcast.header[0] < 0 ||
      broadcast.header[0] > 3) {
    throw std::invalid_argument("fixture header must name T1..T4");
  }
  const auto rows = TransmissionRows(broadcast.header[0] + 1);
  if (rows.size() != broadcast.payload.size()) {
    throw std::invalid_argument("fixture payload must carry four blocks");
  }
  std::vector<const Block*> known(2 * kSubfiles, nullptr);
  for (const auto& entry : cache.store) {
    known.at(SymbolId(entry.file, entry.index)) = &entry.bits;
  }
  std::vector<gf2::XorEquation> equations;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    gf2::XorEquation eq{{}, broadcast.payload[i]};
    for (auto [file, subfile] : rows[i]) {
      const auto id = SymbolId(file, subfile);
      if (known[id] != nullptr) {
        eq.rhs ^= *known[id];
      } else {
        eq.symbols.push_back(id);
      }
    }
    equations.push_back(std::move(eq));
  }
  std::vector<std::uint64_t> wanted;
  for (std::size_t j = 0; j < kSubfiles; ++j) {
    if (known[SymbolId(demand, j)] == nullptr) {
      wanted.push_back(SymbolId(demand, j));
    }
  }
  auto solved = gf2::Solve(equations, wanted, bits_);
  if (!solved) {
    throw UndeterminedError("fixture transmission does not determine file " +
                            std::to_string(demand));
  }
  std::vector<Block> file(kSubfiles);
  std::size_t next = 0;
  for (std::size_t j = 0; j < kSubfiles; ++j) {
    const Block* cached = known[SymbolId(demand, j)];
    file[j] = cached != nullptr ? *cached : (*solved)[next++];
  }
  return file;
}

VerificationReport RunFixture() {
  const FixtureScheme scheme(1);
  WorldPolicy policy;
  policy.mode = WorldMode::kExhaustive;
  VerificationReport report = Verify(scheme, policy);
  report.mutual_information = ComputeMutualInformation(scheme);
  report.expected_rate = BigRational(BigInt(2), BigInt(3));
  return report;
}

}  // namespace dpcc
