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

// Core value types shared by the caching schemes: files, demands, keys,
// caches and broadcasts, plus the seeded generator used to sample them.

#ifndef DPCC_MODEL_H_
#define DPCC_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "dpcc/combinatorics.h"

namespace dpcc {

// A fixed-width bit block; one subfile or one coded transmission.
using Block = boost::dynamic_bitset<std::uint64_t>;

// Default cap on N * P * b when enumerating every library.
inline constexpr int kDefaultEnumerationBudgetBits = 24;

class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validated (N, K, t, b). Memory per user is M = t / K files.
struct SchemeParams {
  int n_files = 0;
  int n_users = 0;
  int cache_index = 0;  // t = K * M
  int subfile_bits = 0;

  int virtual_users() const { return n_files * n_users; }
  // P = C(NK, t).
  BigInt subpacketization() const;
  // P as a size, throwing std::overflow_error when it cannot be materialized.
  std::size_t subfile_count() const;
  // F = P * b.
  BigInt file_bits() const;
  BigRational memory() const;
  // Subfiles of every file held by one user: C(NK - 1, t - 1).
  BigInt cached_subfiles_per_file() const;
};

// Throws std::invalid_argument for zero N, K, b or t outside [0, NK].
SchemeParams ValidateParams(int n_files, int n_users, int cache_index,
                            int subfile_bits);

// Documented generator: std::mt19937_64 seeded with the 64-bit seed.
// Bits are taken least-significant first from successive outputs; uniform
// integers use rejection sampling on full 64-bit outputs, so streams are
// identical on every conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextWord() { return engine_(); }
  // Uniform in [1, n].
  int UniformIndex(int n);
  // `bits` fresh uniform bits.
  Block NextBlock(std::size_t bits);

 private:
  std::mt19937_64 engine_;
};

// N files, each an ordered sequence of equal-width subfile blocks.
class FileLibrary {
 public:
  FileLibrary(int n_files, std::size_t subfiles_per_file,
              std::size_t subfile_bits);

  int n_files() const { return n_files_; }
  std::size_t subfiles_per_file() const { return subfiles_per_file_; }
  std::size_t subfile_bits() const { return subfile_bits_; }
  std::size_t total_bits() const {
    return static_cast<std::size_t>(n_files_) * subfiles_per_file_ *
           subfile_bits_;
  }

  // Files are 1-based, subfiles are 0-based ranks.
  const Block& subfile(int file, std::size_t index) const;
  Block& subfile(int file, std::size_t index);
  std::span<const Block> file(int file) const;

  friend bool operator==(const FileLibrary&, const FileLibrary&) = default;

 private:
  int n_files_;
  std::size_t subfiles_per_file_;
  std::size_t subfile_bits_;
  std::vector<Block> blocks_;  // file-major
};

// Same shape as `params` would produce: N files of C(NK, t) subfiles.
FileLibrary EmptyLibrary(const SchemeParams& params);

FileLibrary SampleLibrary(const SchemeParams& params, std::uint64_t seed);
void FillLibrary(FileLibrary& library, Rng& rng);

// Bit-packed form: file-major, subfile rank ascending, bit 0 of each block
// first; packed least-significant bit first into bytes, last byte
// zero-padded.
std::vector<std::uint8_t> SerializeLibrary(const FileLibrary& library);
FileLibrary DeserializeLibrary(int n_files, std::size_t subfiles_per_file,
                               std::size_t subfile_bits,
                               std::span<const std::uint8_t> bytes);

// Library number `index` in the enumeration order: bit j of the serialized
// stream equals bit j of `index`.
FileLibrary LibraryFromIndex(int n_files, std::size_t subfiles_per_file,
                             std::size_t subfile_bits, std::uint64_t index);

// Every library of a given shape exactly once.
class WorldRange {
 public:
  // Throws BudgetExceededError when N * P * b > budget_bits.
  WorldRange(int n_files, std::size_t subfiles_per_file,
             std::size_t subfile_bits,
             int budget_bits = kDefaultEnumerationBudgetBits);

  std::uint64_t size() const { return count_; }

  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FileLibrary;
    using difference_type = std::ptrdiff_t;
    using pointer = const FileLibrary*;
    using reference = const FileLibrary&;

    Iterator(const WorldRange* range, std::uint64_t index);
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    Iterator& operator++();
    std::uint64_t index() const { return index_; }
    friend bool operator==(const Iterator& a, const Iterator& b) {
      return a.index_ == b.index_;
    }

   private:
    const WorldRange* range_;
    std::uint64_t index_;
    FileLibrary current_;
  };

  Iterator begin() const { return Iterator(this, 0); }
  Iterator end() const { return Iterator(this, count_); }

 private:
  int n_files_;
  std::size_t subfiles_per_file_;
  std::size_t subfile_bits_;
  std::uint64_t count_;
};

WorldRange EnumerateWorlds(const SchemeParams& params,
                           int budget_bits = kDefaultEnumerationBudgetBits);

// d: K demands, each in [1, N].
struct DemandVector {
  std::vector<int> d;
  friend bool operator==(const DemandVector&, const DemandVector&) = default;
};

// s: K shared keys, each in [1, N].
struct KeyVector {
  std::vector<int> s;
  friend bool operator==(const KeyVector&, const KeyVector&) = default;
};

DemandVector SampleDemands(int n_files, int n_users, Rng& rng);

struct CachedSubfile {
  int file = 0;
  std::size_t index = 0;
  Block bits;
  friend bool operator==(const CachedSubfile&, const CachedSubfile&) = default;
};

// What user `owner` stores: its key and the cached subfiles sorted by
// (file, index).
struct CacheContent {
  int owner = 0;
  int key = 0;
  std::vector<CachedSubfile> store;

  std::size_t stored_bits() const;
  friend bool operator==(const CacheContent&, const CacheContent&) = default;
};

// Header symbols travel in the clear; payload blocks carry the coded data.
struct BroadcastMessage {
  std::vector<int> header;
  int header_symbol_bits = 0;
  std::vector<Block> payload;

  std::size_t header_bits() const {
    return header.size() * static_cast<std::size_t>(header_symbol_bits);
  }
  std::size_t payload_bits() const;
  friend bool operator==(const BroadcastMessage&,
                         const BroadcastMessage&) = default;
};

// Bits needed to carry one symbol of an alphabet of size n: ceil(log2 n).
int SymbolBits(int alphabet_size);

// Appends the bytes of `block` (LSB-first packing) to `out`.
void AppendBlockBytes(const Block& block, std::string& out);

}  // namespace dpcc

#endif  // DPCC_MODEL_H_
