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

// Symbol-level Gaussian elimination over GF(2). Unknowns are whole blocks;
// every coefficient is 0 or 1, so the elimination cost does not depend on
// the block width beyond the block XORs themselves.

#ifndef DPCC_GF2_H_
#define DPCC_GF2_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dpcc/model.h"

namespace dpcc::gf2 {

// XOR of the blocks named by `symbols` equals `rhs`. A symbol listed twice
// cancels.
struct XorEquation {
  std::vector<std::uint64_t> symbols;
  Block rhs;
};

// Solves for the `wanted` symbols. Returns their values in order, or
// std::nullopt if some wanted symbol is not determined by the equations.
// Inconsistent equations are not reported; the determined values are those
// of any solution.
std::optional<std::vector<Block>> Solve(std::span<const XorEquation> equations,
                                        std::span<const std::uint64_t> wanted,
                                        std::size_t block_bits);

}  // namespace dpcc::gf2

#endif  // DPCC_GF2_H_
