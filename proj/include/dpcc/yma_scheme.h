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

// The non-private building block: uncoded placement over t-subsets of users
// and leader-based coded delivery. Only (t+1)-subsets containing at least
// one leader are transmitted; every other user recovers its missing pieces
// from the leaders' equations.

#ifndef DPCC_YMA_SCHEME_H_
#define DPCC_YMA_SCHEME_H_

#include <span>
#include <stdexcept>
#include <vector>

#include "dpcc/combinatorics.h"
#include "dpcc/model.h"

namespace dpcc {

// Raised when elimination cannot pin down a requested subfile.
class UndeterminedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct YmaConfig {
  int n_files = 0;
  int n_users = 0;      // K', the number of (virtual) users
  int cache_index = 0;  // t
  std::size_t subfile_bits = 1;

  // C(K', t).
  std::size_t subfiles_per_file() const;
};

// Throws std::invalid_argument unless N, K' > 0 and 0 <= t <= K'.
YmaConfig MakeYmaConfig(int n_files, int n_users, int cache_index,
                        std::size_t subfile_bits);

struct VirtualDemand {
  std::vector<int> d_np;  // 1-based files, one per virtual user
  friend bool operator==(const VirtualDemand&, const VirtualDemand&) = default;
};

// 1-based virtual-user indices, ascending.
struct LeaderSet {
  std::vector<int> leaders;
  friend bool operator==(const LeaderSet&, const LeaderSet&) = default;
};

// One coded transmission: the XOR over u in `subset` of the subfile of file
// d_np(u) indexed by subset \ {u}.
struct DeliveredBlock {
  std::vector<int> subset;
  Block bits;
};

CacheContent YmaPlaceUser(const YmaConfig& config, const FileLibrary& library,
                          int user);
std::vector<CacheContent> YmaPlace(const YmaConfig& config,
                                   const FileLibrary& library);

// Lowest-index demander of each distinct file.
LeaderSet PickLeaders(const VirtualDemand& demand);

// The (t+1)-subsets meeting the leader set, in colex order.
std::vector<std::vector<int>> YmaTransmissionPlan(const YmaConfig& config,
                                                  const VirtualDemand& demand);

std::vector<DeliveredBlock> YmaDeliver(const YmaConfig& config,
                                       const FileLibrary& library,
                                       const VirtualDemand& demand);

// Recovers file d_np(user) from the user's cache and the delivered blocks.
// Throws UndeterminedError if the blocks do not determine it.
std::vector<Block> YmaDecode(const YmaConfig& config, int user,
                             const CacheContent& cache,
                             std::span<const DeliveredBlock> delivered,
                             const VirtualDemand& demand);

// Worst-case rate (C(K', t+1) - C(K' - min(N, K'), t+1)) / C(K', t).
// Throws std::invalid_argument unless 0 <= t <= K'.
BigRational YmaRate(int n_files, int n_users, int cache_index);

}  // namespace dpcc

#endif  // DPCC_YMA_SCHEME_H_
