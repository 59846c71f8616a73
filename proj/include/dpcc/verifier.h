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

// Brute-force certification of caching schemes.
//
// Decodability: for every world (library), every key vector and every demand
// vector, each user's decoder must return its demanded file bit-for-bit.
//
// Privacy: keys and demands are uniform and independent of the library, so
// for a fixed world all (keys, demands) pairs are equiprobable. Grouping the
// pairs by what user k observes (its key, cache bits, the broadcast and its
// own demand) gives the exact conditional law of the other users' demands;
// privacy holds when that law is uniform in every group. Counts are integers
// and every comparison is exact.

#ifndef DPCC_VERIFIER_H_
#define DPCC_VERIFIER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpcc/combinatorics.h"
#include "dpcc/model.h"
#include "dpcc/private_scheme.h"

namespace dpcc {

// Placement, delivery and decoding of an N-file, K-user scheme with keys in
// [1, key_alphabet()].
class CachingScheme {
 public:
  virtual ~CachingScheme() = default;

  virtual std::string name() const = 0;
  virtual int n_files() const = 0;
  virtual int n_users() const = 0;
  virtual int key_alphabet() const = 0;
  virtual std::size_t subfiles_per_file() const = 0;
  virtual std::size_t subfile_bits() const = 0;

  virtual CacheContent Place(const FileLibrary& library, int user,
                             int key) const = 0;
  virtual BroadcastMessage Deliver(const FileLibrary& library,
                                   const DemandVector& demands,
                                   const KeyVector& keys) const = 0;
  // Throws UndeterminedError when the inputs do not determine the file.
  virtual std::vector<Block> Decode(int user, const CacheContent& cache,
                                    const BroadcastMessage& broadcast,
                                    int demand) const = 0;

  std::size_t file_bits() const { return subfiles_per_file() * subfile_bits(); }
};

// The key-shifted construction over NK virtual users.
class PrivateConstruction : public CachingScheme {
 public:
  explicit PrivateConstruction(SchemeParams params);

  const SchemeParams& params() const { return params_; }

  std::string name() const override;
  int n_files() const override { return params_.n_files; }
  int n_users() const override { return params_.n_users; }
  int key_alphabet() const override { return params_.n_files; }
  std::size_t subfiles_per_file() const override { return subfiles_; }
  std::size_t subfile_bits() const override {
    return static_cast<std::size_t>(params_.subfile_bits);
  }

  CacheContent Place(const FileLibrary& library, int user,
                     int key) const override;
  BroadcastMessage Deliver(const FileLibrary& library,
                           const DemandVector& demands,
                           const KeyVector& keys) const override;
  std::vector<Block> Decode(int user, const CacheContent& cache,
                            const BroadcastMessage& broadcast,
                            int demand) const override;

 private:
  SchemeParams params_;
  std::size_t subfiles_;
};

// Negative control: the private construction with the demand vector appended
// to the header in the clear.
class CleartextDemandScheme : public PrivateConstruction {
 public:
  using PrivateConstruction::PrivateConstruction;

  std::string name() const override;
  BroadcastMessage Deliver(const FileLibrary& library,
                           const DemandVector& demands,
                           const KeyVector& keys) const override;
  std::vector<Block> Decode(int user, const CacheContent& cache,
                            const BroadcastMessage& broadcast,
                            int demand) const override;
};

// Negative control: payload block `dropped` is never sent and decoders work
// from the remaining equations. Throws std::invalid_argument when the
// payload has no block `dropped`.
class DroppedBlockScheme : public PrivateConstruction {
 public:
  DroppedBlockScheme(SchemeParams params, std::size_t dropped);

  std::string name() const override;
  BroadcastMessage Deliver(const FileLibrary& library,
                           const DemandVector& demands,
                           const KeyVector& keys) const override;
  std::vector<Block> Decode(int user, const CacheContent& cache,
                            const BroadcastMessage& broadcast,
                            int demand) const override;

 private:
  std::size_t dropped_;
};

// Negative control: bit 0 of payload block `block` is flipped in transit.
class CorruptedPayloadScheme : public PrivateConstruction {
 public:
  CorruptedPayloadScheme(SchemeParams params, std::size_t block);

  std::string name() const override;
  BroadcastMessage Deliver(const FileLibrary& library,
                           const DemandVector& demands,
                           const KeyVector& keys) const override;

 private:
  std::size_t block_;
};

// Everyone caches the first `cached_files` files; the rest go out uncoded.
class TrivialScheme : public CachingScheme {
 public:
  TrivialScheme(int n_files, int n_users, int cached_files,
                std::size_t subfiles_per_file, std::size_t subfile_bits);

  std::string name() const override;
  int n_files() const override { return n_files_; }
  int n_users() const override { return n_users_; }
  int key_alphabet() const override { return 1; }
  std::size_t subfiles_per_file() const override { return subfiles_; }
  std::size_t subfile_bits() const override { return bits_; }

  CacheContent Place(const FileLibrary& library, int user,
                     int key) const override;
  BroadcastMessage Deliver(const FileLibrary& library,
                           const DemandVector& demands,
                           const KeyVector& keys) const override;
  std::vector<Block> Decode(int user, const CacheContent& cache,
                            const BroadcastMessage& broadcast,
                            int demand) const override;

 private:
  int n_files_;
  int n_users_;
  int cached_files_;
  std::size_t subfiles_;
  std::size_t bits_;
};

enum class WorldMode { kExhaustive, kFixed, kSampled };

std::string_view WorldModeName(WorldMode mode);

struct WorldPolicy {
  WorldMode mode = WorldMode::kSampled;
  int sample_count = 64;
  std::uint64_t seed = 0;
  int budget_bits = kDefaultEnumerationBudgetBits;

  // "exhaustive", "fixed", "sampled" or "sampled:<count>".
  static WorldPolicy Parse(std::string_view text);
};

struct DecodeWitness {
  std::uint64_t world = 0;
  KeyVector keys;
  DemandVector demands;
  int user = 0;
  std::string reason;
};

struct PrivacyWitness {
  std::uint64_t world = 0;
  int user = 0;
  int key = 0;
  int demand = 0;
  std::vector<int> header;
  // Conditional law of the other users' demands, indexed in lexicographic
  // order of the (K-1)-tuple.
  std::vector<BigRational> conditional;
  BigRational expected;
};

struct MutualInformation {
  bool exact_zero = true;
  // Largest value over users, in bits.
  double bits = 0.0;
  std::vector<double> per_user_bits;
};

struct VerificationReport {
  std::string scheme;
  WorldMode mode = WorldMode::kSampled;
  std::uint64_t worlds_checked = 0;

  bool decodability_checked = false;
  std::uint64_t decode_checks = 0;
  std::uint64_t decode_failure_count = 0;
  std::vector<DecodeWitness> decode_failures;  // first kMaxWitnesses

  bool privacy_checked = false;
  std::uint64_t privacy_groups = 0;
  std::uint64_t privacy_violation_count = 0;
  std::vector<PrivacyWitness> privacy_violations;  // first kMaxWitnesses
  // Per (world, user): uniformity verdict agrees with exact-zero conditional
  // mutual information.
  bool uniformity_matches_mi = true;
  double max_world_conditional_mi_bits = 0.0;

  // Distinct payload bits / F observed across all deliveries.
  std::vector<BigRational> realized_rates;
  // When set, passing also requires realized_rates == {*expected_rate}.
  std::optional<BigRational> expected_rate;

  std::optional<MutualInformation> mutual_information;

  bool rate_constant() const { return realized_rates.size() == 1; }
  bool passed() const;
};

inline constexpr std::size_t kMaxWitnesses = 100;

// Throws BudgetExceededError in exhaustive mode when N * P * b exceeds the
// policy's budget.
VerificationReport CheckDecodability(const CachingScheme& scheme,
                                     const WorldPolicy& policy);
VerificationReport CheckPrivacyUniform(const CachingScheme& scheme,
                                       const WorldPolicy& policy);
// Both checks over one pass of the worlds.
VerificationReport Verify(const CachingScheme& scheme,
                          const WorldPolicy& policy);

// I(D_{-k}; Z_k, X, D_k) under the uniform joint law of libraries, keys and
// demands, maximized over k. Throws BudgetExceededError when N * P * b
// exceeds `budget_bits`.
MutualInformation ComputeMutualInformation(
    const CachingScheme& scheme,
    int budget_bits = kDefaultEnumerationBudgetBits);

// Exhaustive decodability, privacy, mutual information and rate check of the
// hand-built N = K = 2 scheme with 6-bit files.
VerificationReport RunFixture();

// Human-readable summary.
std::string RenderReport(const VerificationReport& report);
// One machine-readable line per witness.
std::string RenderWitnessLines(const VerificationReport& report);

}  // namespace dpcc

#endif  // DPCC_VERIFIER_H_
