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

// Hand-built private scheme for two files A, B of six bits and two users.
// Each user picks one of two caches with its key; the server picks one of
// four 4-bit transmissions T1..T4 from (keys, demands).

#ifndef DPCC_FIXTURE_H_
#define DPCC_FIXTURE_H_

#include <array>
#include <string_view>

#include "dpcc/verifier.h"

namespace dpcc {

// Cache rows Z_{user,key}, e.g. "A1 A2 A3 B1 B2 B3".
struct FixtureCacheRow {
  int user;
  int key;
  std::string_view content;
};

// (s1, s2, d1, d2) -> transmission index and the bit sent on that row,
// e.g. "B2+A1+A4".
struct FixtureTransmissionRow {
  int s1, s2, d1, d2;
  int transmission;
  std::string_view bit;
};

const std::array<FixtureCacheRow, 4>& FixtureCacheTable();
const std::array<FixtureTransmissionRow, 16>& FixtureTransmissionTable();

class FixtureScheme : public CachingScheme {
 public:
  explicit FixtureScheme(std::size_t subfile_bits = 1);

  std::string name() const override { return "example-fixture N=2 K=2 F=6"; }
  int n_files() const override { return 2; }
  int n_users() const override { return 2; }
  int key_alphabet() const override { return 2; }
  std::size_t subfiles_per_file() const override { return 6; }
  std::size_t subfile_bits() const override { return bits_; }

  CacheContent Place(const FileLibrary& library, int user,
                     int key) const override;
  // Header: transmission index minus one, 2 bits.
  BroadcastMessage Deliver(const FileLibrary& library,
                           const DemandVector& demands,
                           const KeyVector& keys) const override;
  std::vector<Block> Decode(int user, const CacheContent& cache,
                            const BroadcastMessage& broadcast,
                            int demand) const override;

  // The transmission index (1..4) the table assigns to (keys, demands).
  static int TransmissionFor(const KeyVector& keys,
                             const DemandVector& demands);

 private:
  std::size_t bits_;
};

}  // namespace dpcc

#endif  // DPCC_FIXTURE_H_
