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

#ifndef DPCC_CLI_H_
#define DPCC_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dpcc {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Environment variable overriding the default enumeration budget in bits.
inline constexpr const char* kBudgetEnvVar = "DPCC_ENUM_BUDGET";

struct RunConfig {
  std::string command;
  int n_files = 2;
  int n_users = 2;
  std::optional<int> cache_index;
  std::optional<std::string> memory;  // "p/q"
  int subfile_bits = 1;
  std::uint64_t seed = 0;
  std::string worlds = "exhaustive";
  std::optional<int> budget_bits;
  std::string out;
  int trials = 10;
  int resolution = 1;
  std::string negative_control;  // "", "cleartext" or "drop-block"
  int drop_index = 0;
  bool allow_sampled_fallback = false;

  // t from --t or --m, checked for agreement; defaults to K (M = 1) when
  // neither is given. Throws std::invalid_argument when K M is fractional.
  int ResolveCacheIndex() const;
  // Flag, then environment, then the built-in default.
  int ResolveBudget() const;
};

// Runs the command line `args` (without the program name). Returns the exit
// code; reports go to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Reads `key=value` lines; blank lines and lines starting with '#' are
// skipped. Returns the equivalent flag tokens, e.g. {"--n", "5"}.
std::vector<std::string> ConfigFileTokens(const std::string& path);

}  // namespace dpcc

#endif  // DPCC_CLI_H_
