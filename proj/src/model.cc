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

#include "dpcc/model.h"

#include <limits>
#include <string>

namespace dpcc {

namespace {

// Largest subpacketization we are willing to allocate.
constexpr std::uint64_t kMaxSubfiles = std::uint64_t{1} << 28;

void CheckFile(int file, int n_files) {
  if (file < 1 || file > n_files) {
    throw std::out_of_range("file " + std::to_string(file) + " outside [1, " +
                            std::to_string(n_files) + "]");
  }
}

}  // namespace

BigInt SchemeParams::subpacketization() const {
  return Binomial(virtual_users(), cache_index);
}

std::size_t SchemeParams::subfile_count() const {
  const BigInt p = subpacketization();
  if (p > kMaxSubfiles) {
    throw std::overflow_error("subpacketization C(" +
                              std::to_string(virtual_users()) + ", " +
                              std::to_string(cache_index) + ") = " + p.str() +
                              " is too large to materialize");
  }
  return p.convert_to<std::size_t>();
}

BigInt SchemeParams::file_bits() const {
  return subpacketization() * subfile_bits;
}

BigRational SchemeParams::memory() const {
  return BigRational(BigInt(cache_index), BigInt(n_users));
}

BigInt SchemeParams::cached_subfiles_per_file() const {
  return Binomial(virtual_users() - 1, cache_index - 1);
}

SchemeParams ValidateParams(int n_files, int n_users, int cache_index,
                            int subfile_bits) {
  if (n_files <= 0) throw std::invalid_argument("N must be positive");
  if (n_users <= 0) throw std::invalid_argument("K must be positive");
  if (subfile_bits <= 0) {
    throw std::invalid_argument("subfile bits must be positive");
  }
  const std::int64_t nk = std::int64_t{n_files} * n_users;
  if (nk > std::numeric_limits<int>::max()) {
    throw std::invalid_argument("N * K too large");
  }
  if (cache_index < 0 || cache_index > nk) {
    throw std::invalid_argument("t = " + std::to_string(cache_index) +
                                " outside [0, NK = " + std::to_string(nk) +
                                "]");
  }
  return {n_files, n_users, cache_index, subfile_bits};
}

int Rng::UniformIndex(int n) {
  if (n <= 0) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  // Largest multiple of span that fits in 2^64.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return static_cast<int>(x % span) + 1;
}

Block Rng::NextBlock(std::size_t bits) {
  Block block(bits);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < bits; ++i) {
    if (i % 64 == 0) word = engine_();
    block[i] = (word >> (i % 64)) & 1U;
  }
  return block;
}

FileLibrary::FileLibrary(int n_files, std::size_t subfiles_per_file,
                         std::size_t subfile_bits)
    : n_files_(n_files),
      subfiles_per_file_(subfiles_per_file),
      subfile_bits_(subfile_bits),
      blocks_(static_cast<std::size_t>(n_files) * subfiles_per_file,
              Block(subfile_bits)) {
  if (n_files <= 0) throw std::invalid_argument("library needs files");
}

const Block& FileLibrary::subfile(int file, std::size_t index) const {
  CheckFile(file, n_files_);
  return blocks_.at((file - 1) * subfiles_per_file_ + index);
}

Block& FileLibrary::subfile(int file, std::size_t index) {
  CheckFile(file, n_files_);
  return blocks_.at((file - 1) * subfiles_per_file_ + index);
}

std::span<const Block> FileLibrary::file(int file) const {
  CheckFile(file, n_files_);
  return std::span<const Block>(blocks_).subspan(
      (file - 1) * subfiles_per_file_, subfiles_per_file_);
}

FileLibrary EmptyLibrary(const SchemeParams& params) {
  return FileLibrary(params.n_files, params.subfile_count(),
                     static_cast<std::size_t>(params.subfile_bits));
}

void FillLibrary(FileLibrary& library, Rng& rng) {
  for (int i = 1; i <= library.n_files(); ++i) {
    for (std::size_t j = 0; j < library.subfiles_per_file(); ++j) {
      library.subfile(i, j) = rng.NextBlock(library.subfile_bits());
    }
  }
}

FileLibrary SampleLibrary(const SchemeParams& params, std::uint64_t seed) {
  FileLibrary library = EmptyLibrary(params);
  Rng rng(seed);
  FillLibrary(library, rng);
  return library;
}

std::vector<std::uint8_t> SerializeLibrary(const FileLibrary& library) {
  std::vector<std::uint8_t> bytes((library.total_bits() + 7) / 8, 0);
  std::size_t pos = 0;
  for (int i = 1; i <= library.n_files(); ++i) {
    for (const Block& block : library.file(i)) {
      for (std::size_t b = 0; b < block.size(); ++b, ++pos) {
        if (block[b]) bytes[pos / 8] |= static_cast<std::uint8_t>(1U << (pos % 8));
      }
    }
  }
  return bytes;
}

FileLibrary DeserializeLibrary(int n_files, std::size_t subfiles_per_file,
                               std::size_t subfile_bits,
                               std::span<const std::uint8_t> bytes) {
  FileLibrary library(n_files, subfiles_per_file, subfile_bits);
  if (bytes.size() != (library.total_bits() + 7) / 8) {
    throw std::invalid_argument("serialized library has wrong length");
  }
  std::size_t pos = 0;
  for (int i = 1; i <= n_files; ++i) {
    for (std::size_t j = 0; j < subfiles_per_file; ++j) {
      Block& block = library.subfile(i, j);
      for (std::size_t b = 0; b < subfile_bits; ++b, ++pos) {
        block[b] = (bytes[pos / 8] >> (pos % 8)) & 1U;
      }
    }
  }
  return library;
}

FileLibrary LibraryFromIndex(int n_files, std::size_t subfiles_per_file,
                             std::size_t subfile_bits, std::uint64_t index) {
  FileLibrary library(n_files, subfiles_per_file, subfile_bits);
  std::size_t pos = 0;
  for (int i = 1; i <= n_files; ++i) {
    for (std::size_t j = 0; j < subfiles_per_file; ++j) {
      Block& block = library.subfile(i, j);
      for (std::size_t b = 0; b < subfile_bits; ++b, ++pos) {
        block[b] = pos < 64 && ((index >> pos) & 1U);
      }
    }
  }
  return library;
}

WorldRange::WorldRange(int n_files, std::size_t subfiles_per_file,
                       std::size_t subfile_bits, int budget_bits)
    : n_files_(n_files),
      subfiles_per_file_(subfiles_per_file),
      subfile_bits_(subfile_bits) {
  const std::size_t total =
      static_cast<std::size_t>(n_files) * subfiles_per_file * subfile_bits;
  if (budget_bits > 62) budget_bits = 62;
  if (total > static_cast<std::size_t>(budget_bits)) {
    throw BudgetExceededError(
        "enumerating 2^" + std::to_string(total) +
        " libraries exceeds the budget of 2^" + std::to_string(budget_bits));
  }
  count_ = std::uint64_t{1} << total;
}

WorldRange::Iterator::Iterator(const WorldRange* range, std::uint64_t index)
    : range_(range),
      index_(index),
      current_(LibraryFromIndex(range->n_files_, range->subfiles_per_file_,
                                range->subfile_bits_,
                                index < range->count_ ? index : 0)) {}

WorldRange::Iterator& WorldRange::Iterator::operator++() {
  ++index_;
  if (index_ < range_->count_) {
    current_ = LibraryFromIndex(range_->n_files_, range_->subfiles_per_file_,
                                range_->subfile_bits_, index_);
  }
  return *this;
}

WorldRange EnumerateWorlds(const SchemeParams& params, int budget_bits) {
  const BigInt total = params.file_bits() * params.n_files;
  if (total > budget_bits) {
    throw BudgetExceededError("enumerating 2^" + total.str() +
                              " libraries exceeds the budget of 2^" +
                              std::to_string(budget_bits));
  }
  return WorldRange(params.n_files, params.subfile_count(),
                    static_cast<std::size_t>(params.subfile_bits),
                    budget_bits);
}

DemandVector SampleDemands(int n_files, int n_users, Rng& rng) {
  DemandVector demands;
  demands.d.reserve(n_users);
  for (int k = 0; k < n_users; ++k) demands.d.push_back(rng.UniformIndex(n_files));
  return demands;
}

std::size_t CacheContent::stored_bits() const {
  std::size_t bits = 0;
  for (const auto& entry : store) bits += entry.bits.size();
  return bits;
}

std::size_t BroadcastMessage::payload_bits() const {
  std::size_t bits = 0;
  for (const auto& block : payload) bits += block.size();
  return bits;
}

int SymbolBits(int alphabet_size) {
  int bits = 0;
  while ((1LL << bits) < alphabet_size) ++bits;
  return bits;
}

void AppendBlockBytes(const Block& block, std::string& out) {
  unsigned char byte = 0;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (block[i]) byte |= static_cast<unsigned char>(1U << (i % 8));
    if (i % 8 == 7) {
      out.push_back(static_cast<char>(byte));
      byte = 0;
    }
  }
  if (block.size() % 8 != 0) out.push_back(static_cast<char>(byte));
}

}  // namespace dpcc
