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

#include "dpcc/private_scheme.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dpcc {

namespace {

int Mod(int a, int n) { return ((a % n) + n) % n; }

void CheckRange(const std::vector<int>& values, int n, const char* what) {
  for (int v : values) {
    if (v < 1 || v > n) {
      throw std::invalid_argument(std::string(what) + " outside [1, N]");
    }
  }
}

template <typename T>
std::string Join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << values[i];
  }
  return out.str();
}

}  // namespace

KeyVector SampleKeys(int n_files, int n_users, Rng& rng) {
  KeyVector keys;
  keys.s.reserve(n_users);
  for (int k = 0; k < n_users; ++k) keys.s.push_back(rng.UniformIndex(n_files));
  return keys;
}

KeyVector SampleKeys(const SchemeParams& params, std::uint64_t seed) {
  Rng rng(seed);
  return SampleKeys(params.n_files, params.n_users, rng);
}

ShiftVector ComputeShifts(const KeyVector& keys, const DemandVector& demands,
                          int n_files) {
  if (keys.s.size() != demands.d.size()) {
    throw std::invalid_argument("keys and demands differ in length");
  }
  CheckRange(keys.s, n_files, "key");
  CheckRange(demands.d, n_files, "demand");
  ShiftVector shifts;
  shifts.c.reserve(keys.s.size());
  for (std::size_t k = 0; k < keys.s.size(); ++k) {
    shifts.c.push_back(Mod(keys.s[k] - demands.d[k], n_files));
  }
  return shifts;
}

VirtualDemand LiftDemands(const ShiftVector& shifts, int n_files,
                          int n_users) {
  if (shifts.c.size() != static_cast<std::size_t>(n_users)) {
    throw std::invalid_argument("shift vector has wrong length");
  }
  VirtualDemand demand;
  demand.d_np.reserve(static_cast<std::size_t>(n_files) * n_users);
  for (int c : shifts.c) {
    if (c < 0 || c >= n_files) {
      throw std::invalid_argument("shift outside [0, N-1]");
    }
    for (int j = 1; j <= n_files; ++j) {
      demand.d_np.push_back(Mod(j - 1 - c, n_files) + 1);
    }
  }
  return demand;
}

int VirtualUserFor(int user, int key, int n_files) {
  return (user - 1) * n_files + key;
}

YmaConfig VirtualConfig(const SchemeParams& params) {
  return MakeYmaConfig(params.n_files, params.virtual_users(),
                       params.cache_index,
                       static_cast<std::size_t>(params.subfile_bits));
}

CacheContent PrivatePlaceUser(const SchemeParams& params,
                              const FileLibrary& library, int user, int key) {
  if (user < 1 || user > params.n_users) {
    throw std::out_of_range("user out of range");
  }
  if (key < 1 || key > params.n_files) {
    throw std::invalid_argument("key outside [1, N]");
  }
  CacheContent cache = YmaPlaceUser(VirtualConfig(params), library,
                                    VirtualUserFor(user, key, params.n_files));
  cache.owner = user;
  cache.key = key;
  return cache;
}

std::vector<CacheContent> PrivatePlace(const SchemeParams& params,
                                       const FileLibrary& library,
                                       const KeyVector& keys) {
  if (keys.s.size() != static_cast<std::size_t>(params.n_users)) {
    throw std::invalid_argument("key vector has wrong length");
  }
  std::vector<CacheContent> caches;
  caches.reserve(params.n_users);
  for (int k = 1; k <= params.n_users; ++k) {
    caches.push_back(PrivatePlaceUser(params, library, k, keys.s[k - 1]));
  }
  return caches;
}

BroadcastMessage DeliverForShifts(const SchemeParams& params,
                                  const FileLibrary& library,
                                  const ShiftVector& shifts) {
  const VirtualDemand demand =
      LiftDemands(shifts, params.n_files, params.n_users);
  BroadcastMessage message;
  message.header = shifts.c;
  message.header_symbol_bits = SymbolBits(params.n_files);
  for (auto& block : YmaDeliver(VirtualConfig(params), library, demand)) {
    message.payload.push_back(std::move(block.bits));
  }
  return message;
}

BroadcastMessage PrivateDeliver(const SchemeParams& params,
                                const FileLibrary& library,
                                const DemandVector& demands,
                                const KeyVector& keys) {
  return DeliverForShifts(params, library,
                          ComputeShifts(keys, demands, params.n_files));
}

ShiftVector ShiftsFromHeader(const SchemeParams& params,
                             const BroadcastMessage& broadcast) {
  if (broadcast.header.size() != static_cast<std::size_t>(params.n_users)) {
    throw std::invalid_argument("header does not carry one shift per user");
  }
  for (int c : broadcast.header) {
    if (c < 0 || c >= params.n_files) {
      throw std::invalid_argument("header shift outside [0, N-1]");
    }
  }
  return ShiftVector{broadcast.header};
}

std::vector<DeliveredBlock> DeliveredBlocks(const SchemeParams& params,
                                            const BroadcastMessage& broadcast) {
  const VirtualDemand demand = LiftDemands(ShiftsFromHeader(params, broadcast),
                                           params.n_files, params.n_users);
  auto plan = YmaTransmissionPlan(VirtualConfig(params), demand);
  if (plan.size() != broadcast.payload.size()) {
    throw std::invalid_argument("payload length does not match the header");
  }
  std::vector<DeliveredBlock> blocks;
  blocks.reserve(plan.size());
  for (std::size_t i = 0; i < plan.size(); ++i) {
    blocks.push_back({std::move(plan[i]), broadcast.payload[i]});
  }
  return blocks;
}

std::vector<Block> PrivateDecode(const SchemeParams& params, int user,
                                 const CacheContent& cache,
                                 const BroadcastMessage& broadcast) {
  const VirtualDemand demand = LiftDemands(ShiftsFromHeader(params, broadcast),
                                           params.n_files, params.n_users);
  const auto blocks = DeliveredBlocks(params, broadcast);
  return YmaDecode(VirtualConfig(params),
                   VirtualUserFor(user, cache.key, params.n_files), cache,
                   blocks, demand);
}

BigRational RealizedRate(const SchemeParams& params,
                         const BroadcastMessage& broadcast) {
  return BigRational(BigInt(broadcast.payload_bits()), params.file_bits());
}

CacheContent TrivialPlace(const FileLibrary& library, int cached_files,
                          int user) {
  if (cached_files < 0 || cached_files > library.n_files()) {
    throw std::invalid_argument("cached file count outside [0, N]");
  }
  CacheContent cache{user, 1, {}};
  for (int file = 1; file <= cached_files; ++file) {
    for (std::size_t j = 0; j < library.subfiles_per_file(); ++j) {
      cache.store.push_back({file, j, library.subfile(file, j)});
    }
  }
  return cache;
}

BroadcastMessage TrivialDeliver(const FileLibrary& library, int cached_files) {
  if (cached_files < 0 || cached_files > library.n_files()) {
    throw std::invalid_argument("cached file count outside [0, N]");
  }
  BroadcastMessage message;
  for (int file = cached_files + 1; file <= library.n_files(); ++file) {
    for (const Block& block : library.file(file)) {
      message.payload.push_back(block);
    }
  }
  return message;
}

std::vector<Block> TrivialDecode(const CacheContent& cache,
                                 const BroadcastMessage& broadcast,
                                 std::size_t subfiles_per_file,
                                 int cached_files, int demand) {
  std::vector<Block> file;
  if (demand <= cached_files) {
    for (const auto& entry : cache.store) {
      if (entry.file == demand) file.push_back(entry.bits);
    }
  } else {
    const std::size_t first = (demand - cached_files - 1) * subfiles_per_file;
    if (first + subfiles_per_file > broadcast.payload.size()) {
      throw UndeterminedError("uncoded payload is missing the demanded file");
    }
    file.assign(broadcast.payload.begin() + first,
                broadcast.payload.begin() + first + subfiles_per_file);
  }
  if (file.size() != subfiles_per_file) {
    throw UndeterminedError("demanded file is not available");
  }
  return file;
}

BigRational TrivialRate(int n_files, int cached_files) {
  return BigRational(n_files - cached_files);
}

bool PrivateEpisode::all_decoded() const {
  for (bool ok : success) {
    if (!ok) return false;
  }
  return true;
}

PrivateEpisode RunEpisode(const SchemeParams& params, std::uint64_t seed) {
  Rng rng(seed);
  FileLibrary library = EmptyLibrary(params);
  FillLibrary(library, rng);
  KeyVector keys = SampleKeys(params.n_files, params.n_users, rng);
  DemandVector demands = SampleDemands(params.n_files, params.n_users, rng);

  const auto caches = PrivatePlace(params, library, keys);
  BroadcastMessage broadcast = PrivateDeliver(params, library, demands, keys);

  std::vector<std::vector<Block>> decoded;
  std::vector<bool> success;
  for (int k = 1; k <= params.n_users; ++k) {
    std::vector<Block> file;
    try {
      file = PrivateDecode(params, k, caches[k - 1], broadcast);
    } catch (const UndeterminedError&) {
      file.clear();
    }
    const auto truth = library.file(demands.d[k - 1]);
    success.push_back(std::equal(file.begin(), file.end(), truth.begin(),
                                 truth.end()));
    decoded.push_back(std::move(file));
  }
  ShiftVector shifts = ComputeShifts(keys, demands, params.n_files);
  BigRational rate = RealizedRate(params, broadcast);
  return PrivateEpisode{params,
                        seed,
                        std::move(library),
                        std::move(keys),
                        std::move(demands),
                        std::move(shifts),
                        std::move(broadcast),
                        std::move(decoded),
                        std::move(success),
                        std::move(rate)};
}

std::string FormatEpisode(const PrivateEpisode& episode) {
  std::ostringstream out;
  const auto& p = episode.params;
  std::vector<int> flags(episode.success.begin(), episode.success.end());
  out << "episode seed=" << episode.seed << " N=" << p.n_files
      << " K=" << p.n_users << " t=" << p.cache_index
      << " b=" << p.subfile_bits << " shifts=" << Join(episode.shifts.c)
      << " payload_bits=" << episode.broadcast.payload_bits()
      << " rate=" << episode.realized_rate << " decoded=" << Join(flags);
  return out.str();
}

}  // namespace dpcc
