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

// Demand-private delivery for N files and K users built on the non-private
// scheme with NK virtual users.
//
// User k holds a secret key s_k in [1, N] and is given the cache of virtual
// user (k-1)N + s_k. For demands d the server broadcasts the shifts
// c_k = (s_k - d_k) mod N followed by the non-private payload for the
// virtual demand whose k-th block is (1, ..., N) rotated right by c_k. Each
// block requests every file once, so the payload never depends on how many
// distinct files the real users asked for, and c is uniform whatever the
// other users' demands are.
//
// Conventions: users, files and keys are 1-based; shifts are residues in
// [0, N-1].

#ifndef DPCC_PRIVATE_SCHEME_H_
#define DPCC_PRIVATE_SCHEME_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dpcc/model.h"
#include "dpcc/yma_scheme.h"

namespace dpcc {

struct ShiftVector {
  std::vector<int> c;
  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
};

KeyVector SampleKeys(int n_files, int n_users, Rng& rng);
KeyVector SampleKeys(const SchemeParams& params, std::uint64_t seed);

// c_k = (s_k - d_k) mod N. Throws std::invalid_argument on length mismatch
// or out-of-range entries.
ShiftVector ComputeShifts(const KeyVector& keys, const DemandVector& demands,
                          int n_files);

// Block k is (1..N) rotated right by c_k: position (k-1)N + j holds
// ((j - 1 - c_k) mod N) + 1.
VirtualDemand LiftDemands(const ShiftVector& shifts, int n_files, int n_users);

// (k-1)N + s_k.
int VirtualUserFor(int user, int key, int n_files);

// The building-block configuration: N files, NK users, same t and b.
YmaConfig VirtualConfig(const SchemeParams& params);

CacheContent PrivatePlaceUser(const SchemeParams& params,
                              const FileLibrary& library, int user, int key);
std::vector<CacheContent> PrivatePlace(const SchemeParams& params,
                                       const FileLibrary& library,
                                       const KeyVector& keys);

// Broadcast for a given shift vector; the header is c, ceil(log2 N) bits per
// user.
BroadcastMessage DeliverForShifts(const SchemeParams& params,
                                  const FileLibrary& library,
                                  const ShiftVector& shifts);
BroadcastMessage PrivateDeliver(const SchemeParams& params,
                                const FileLibrary& library,
                                const DemandVector& demands,
                                const KeyVector& keys);

// Reads c from the header. Throws std::invalid_argument when malformed.
ShiftVector ShiftsFromHeader(const SchemeParams& params,
                             const BroadcastMessage& broadcast);

// Pairs the payload with the transmission plan implied by the header.
std::vector<DeliveredBlock> DeliveredBlocks(const SchemeParams& params,
                                            const BroadcastMessage& broadcast);

// Recovers W_{d_k} for the owner of `cache`. Throws UndeterminedError if the
// broadcast does not determine it.
std::vector<Block> PrivateDecode(const SchemeParams& params, int user,
                                 const CacheContent& cache,
                                 const BroadcastMessage& broadcast);

// Payload bits / F.
BigRational RealizedRate(const SchemeParams& params,
                         const BroadcastMessage& broadcast);

// Baseline: every user caches files 1..cached_files and the server sends the
// remaining files uncoded. The header is empty.
CacheContent TrivialPlace(const FileLibrary& library, int cached_files,
                          int user);
BroadcastMessage TrivialDeliver(const FileLibrary& library, int cached_files);
std::vector<Block> TrivialDecode(const CacheContent& cache,
                                 const BroadcastMessage& broadcast,
                                 std::size_t subfiles_per_file,
                                 int cached_files, int demand);
BigRational TrivialRate(int n_files, int cached_files);

// One full run: library, keys and demands drawn in that order from one
// generator seeded with `seed`.
struct PrivateEpisode {
  SchemeParams params;
  std::uint64_t seed = 0;
  FileLibrary library;
  KeyVector keys;
  DemandVector demands;
  ShiftVector shifts;
  BroadcastMessage broadcast;
  std::vector<std::vector<Block>> decoded;
  std::vector<bool> success;
  BigRational realized_rate;

  bool all_decoded() const;
};

PrivateEpisode RunEpisode(const SchemeParams& params, std::uint64_t seed);

// One-line record: params, seed, shifts, rate and per-user success flags.
std::string FormatEpisode(const PrivateEpisode& episode);

}  // namespace dpcc

#endif  // DPCC_PRIVATE_SCHEME_H_
