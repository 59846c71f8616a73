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

#include "dpcc/yma_scheme.h"

#include <algorithm>
#include <string>

#include "dpcc/gf2.h"

namespace dpcc {

namespace {

void CheckLibrary(const YmaConfig& config, const FileLibrary& library) {
  if (library.n_files() != config.n_files ||
      library.subfiles_per_file() != config.subfiles_per_file() ||
      library.subfile_bits() != config.subfile_bits) {
    throw std::invalid_argument("library shape does not match the scheme");
  }
}

void CheckDemand(const YmaConfig& config, const VirtualDemand& demand) {
  if (demand.d_np.size() != static_cast<std::size_t>(config.n_users)) {
    throw std::invalid_argument("virtual demand has wrong length");
  }
  for (int d : demand.d_np) {
    if (d < 1 || d > config.n_files) {
      throw std::invalid_argument("demand outside [1, N]");
    }
  }
}

}  // namespace

std::size_t YmaConfig::subfiles_per_file() const {
  return static_cast<std::size_t>(Binomial64(n_users, cache_index));
}

YmaConfig MakeYmaConfig(int n_files, int n_users, int cache_index,
                        std::size_t subfile_bits) {
  if (n_files <= 0 || n_users <= 0) {
    throw std::invalid_argument("N and K' must be positive");
  }
  if (cache_index < 0 || cache_index > n_users) {
    throw std::invalid_argument("t outside [0, K']");
  }
  if (subfile_bits == 0) throw std::invalid_argument("empty subfiles");
  return {n_files, n_users, cache_index, subfile_bits};
}

CacheContent YmaPlaceUser(const YmaConfig& config, const FileLibrary& library,
                          int user) {
  CheckLibrary(config, library);
  if (user < 1 || user > config.n_users) {
    throw std::out_of_range("virtual user out of range");
  }
  const int t = config.cache_index;
  // Ranks of the t-subsets containing `user`, ascending.
  std::vector<std::size_t> ranks;
  if (t > 0) {
    std::vector<int> subset(t);
    for (int i = 0; i < t; ++i) subset[i] = i + 1;
    std::size_t rank = 0;
    do {
      if (std::binary_search(subset.begin(), subset.end(), user)) {
        ranks.push_back(rank);
      }
      ++rank;
    } while (NextColex(config.n_users, subset));
  }
  CacheContent cache{user, 0, {}};
  cache.store.reserve(ranks.size() * config.n_files);
  for (int file = 1; file <= config.n_files; ++file) {
    for (std::size_t rank : ranks) {
      cache.store.push_back({file, rank, library.subfile(file, rank)});
    }
  }
  return cache;
}

std::vector<CacheContent> YmaPlace(const YmaConfig& config,
                                   const FileLibrary& library) {
  std::vector<CacheContent> caches;
  caches.reserve(config.n_users);
  for (int u = 1; u <= config.n_users; ++u) {
    caches.push_back(YmaPlaceUser(config, library, u));
  }
  return caches;
}

LeaderSet PickLeaders(const VirtualDemand& demand) {
  LeaderSet set;
  std::vector<int> seen;
  for (std::size_t u = 0; u < demand.d_np.size(); ++u) {
    const int file = demand.d_np[u];
    if (std::find(seen.begin(), seen.end(), file) == seen.end()) {
      seen.push_back(file);
      set.leaders.push_back(static_cast<int>(u) + 1);
    }
  }
  return set;
}

std::vector<std::vector<int>> YmaTransmissionPlan(const YmaConfig& config,
                                                  const VirtualDemand& demand) {
  CheckDemand(config, demand);
  std::vector<std::vector<int>> plan;
  const int size = config.cache_index + 1;
  if (size > config.n_users) return plan;
  std::vector<bool> is_leader(config.n_users + 1, false);
  for (int u : PickLeaders(demand).leaders) is_leader[u] = true;
  std::vector<int> subset(size);
  for (int i = 0; i < size; ++i) subset[i] = i + 1;
  do {
    if (std::any_of(subset.begin(), subset.end(),
                    [&](int u) { return is_leader[u]; })) {
      plan.push_back(subset);
    }
  } while (NextColex(config.n_users, subset));
  return plan;
}

std::vector<DeliveredBlock> YmaDeliver(const YmaConfig& config,
                                       const FileLibrary& library,
                                       const VirtualDemand& demand) {
  CheckLibrary(config, library);
  const SubsetRanker ranker(config.n_users);
  std::vector<DeliveredBlock> delivered;
  for (auto& subset : YmaTransmissionPlan(config, demand)) {
    Block bits(config.subfile_bits);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const int file = demand.d_np[subset[i] - 1];
      bits ^= library.subfile(file, ranker.RankWithout(subset, i));
    }
    delivered.push_back({std::move(subset), std::move(bits)});
  }
  return delivered;
}

std::vector<Block> YmaDecode(const YmaConfig& config, int user,
                             const CacheContent& cache,
                             std::span<const DeliveredBlock> delivered,
                             const VirtualDemand& demand) {
  CheckDemand(config, demand);
  if (user < 1 || user > config.n_users) {
    throw std::out_of_range("virtual user out of range");
  }
  const std::size_t per_file = config.subfiles_per_file();
  const auto symbol = [per_file](int file, std::size_t rank) {
    return static_cast<std::uint64_t>(file - 1) * per_file + rank;
  };

  std::vector<const Block*> known(per_file * config.n_files, nullptr);
  for (const auto& entry : cache.store) {
    known.at(symbol(entry.file, entry.index)) = &entry.bits;
  }

  const int wanted_file = demand.d_np[user - 1];
  std::vector<std::uint64_t> wanted;
  for (std::size_t r = 0; r < per_file; ++r) {
    if (known[symbol(wanted_file, r)] == nullptr) {
      wanted.push_back(symbol(wanted_file, r));
    }
  }

  std::vector<Block> solved;
  if (!wanted.empty()) {
    const SubsetRanker ranker(config.n_users);
    std::vector<gf2::XorEquation> equations;
    equations.reserve(delivered.size());
    for (const auto& block : delivered) {
      gf2::XorEquation eq{{}, block.bits};
      for (std::size_t i = 0; i < block.subset.size(); ++i) {
        const int file = demand.d_np.at(block.subset[i] - 1);
        const auto s = symbol(file, ranker.RankWithout(block.subset, i));
        if (known[s] != nullptr) {
          eq.rhs ^= *known[s];
        } else {
          eq.symbols.push_back(s);
        }
      }
      if (!eq.symbols.empty()) equations.push_back(std::move(eq));
    }
    auto values = gf2::Solve(equations, wanted, config.subfile_bits);
    if (!values) {
      throw UndeterminedError("virtual user " + std::to_string(user) +
                              " cannot determine file " +
                              std::to_string(wanted_file));
    }
    solved = std::move(*values);
  }

  std::vector<Block> file(per_file);
  std::size_t next = 0;
  for (std::size_t r = 0; r < per_file; ++r) {
    const Block* cached = known[symbol(wanted_file, r)];
    file[r] = cached != nullptr ? *cached : solved[next++];
  }
  return file;
}

BigRational YmaRate(int n_files, int n_users, int cache_index) {
  if (n_files <= 0 || n_users <= 0) {
    throw std::invalid_argument("N and K' must be positive");
  }
  if (cache_index < 0 || cache_index > n_users) {
    throw std::invalid_argument("t outside [0, K']");
  }
  const int distinct = std::min(n_files, n_users);
  return BigRational(Binomial(n_users, cache_index + 1) -
                         Binomial(n_users - distinct, cache_index + 1),
                     Binomial(n_users, cache_index));
}

}  // namespace dpcc
