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

#include "dpcc/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dpcc/combinatorics.h"
#include "dpcc/fixture.h"
#include "dpcc/model.h"
#include "dpcc/private_scheme.h"
#include "dpcc/rates.h"
#include "dpcc/verifier.h"

namespace dpcc {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Trim(std::string_view text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

int ParseBudget(std::string_view text, std::string_view origin) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0 ||
      value > 62) {
    throw UsageError(std::string(origin) + ": budget must be an integer in [0, 62]");
  }
  return value;
}

// The value following --config, if present.
std::optional<std::string> FindConfigPath(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].starts_with("--config=")) return args[i].substr(9);
  }
  return std::nullopt;
}

CLI::App* AddCommand(CLI::App& app, RunConfig& config, const std::string& name,
                     const std::string& help) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->callback([&config, name] { config.command = name; });
  sub->add_option("--config", "key=value file; command-line flags override it");
  return sub;
}

void AddShape(CLI::App* sub, RunConfig& config) {
  sub->add_option("--n", config.n_files, "number of files N")
      ->check(CLI::PositiveNumber);
  sub->add_option("--k", config.n_users, "number of users K")
      ->check(CLI::PositiveNumber);
}

void AddMemory(CLI::App* sub, RunConfig& config) {
  sub->add_option("--t", config.cache_index, "cache index t = K M")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--m", config.memory, "memory M as a fraction p/q");
  sub->add_option("--subfile-bits", config.subfile_bits, "bits per subfile b")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", config.seed, "random seed");
}

SchemeParams OperationalParams(const RunConfig& config) {
  return ValidateParams(config.n_files, config.n_users,
                        config.ResolveCacheIndex(), config.subfile_bits);
}

int CommandRateTable(const RunConfig& config, std::ostream& out,
                     std::ostream& err) {
  const CurveTable table =
      EmitCurveTable(config.n_files, config.n_users, config.resolution);
  const std::string path =
      config.out.empty() ? "rate_table_N" + std::to_string(config.n_files) +
                               "_K" + std::to_string(config.n_users) + ".csv"
                         : config.out;
  std::ostringstream decimal, exact;
  WriteCurveCsv(table, decimal, exact);
  std::ofstream csv(path, std::ios::binary);
  std::ofstream exact_file(path + ".exact", std::ios::binary);
  if (!csv || !exact_file) {
    err << "error: cannot write " << path << "\n";
    return kExitUsage;
  }
  csv << decimal.str();
  exact_file << exact.str();
  if (!csv.flush() || !exact_file.flush()) {
    err << "error: write to " << path << " failed\n";
    return kExitUsage;
  }
  const RateCurve grid = PrivateRateGrid(config.n_files, config.n_users);
  out << "rate-table N=" << config.n_files << " K=" << config.n_users
      << " resolution=" << config.resolution << " rows=" << table.memory.size()
      << " private-grid-points=" << grid.points().size() << "\n";
  out << "wrote " << path << " and " << path << ".exact\n";
  return kExitPass;
}

std::unique_ptr<CachingScheme> MakeVerifyScheme(const RunConfig& config,
                                                const SchemeParams& params) {
  if (config.negative_control.empty()) {
    return std::make_unique<PrivateConstruction>(params);
  }
  if (config.negative_control == "cleartext") {
    return std::make_unique<CleartextDemandScheme>(params);
  }
  if (config.negative_control == "drop-block") {
    return std::make_unique<DroppedBlockScheme>(
        params, static_cast<std::size_t>(config.drop_index));
  }
  throw UsageError("unknown negative control '" + config.negative_control +
                   "'");
}

int CommandVerify(const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  const SchemeParams params = OperationalParams(config);
  const auto scheme = MakeVerifyScheme(config, params);
  WorldPolicy policy = WorldPolicy::Parse(config.worlds);
  policy.seed = config.seed;
  policy.budget_bits = config.ResolveBudget();

  VerificationReport report;
  try {
    report = Verify(*scheme, policy);
  } catch (const BudgetExceededError& e) {
    if (!config.allow_sampled_fallback) {
      err << "error: " << e.what()
          << "; raise --budget or pass --allow-sampled-fallback\n";
      return kExitUsage;
    }
    out << "note: exhaustive enumeration over budget; using sampled:"
        << policy.sample_count << "\n";
    policy.mode = WorldMode::kSampled;
    report = Verify(*scheme, policy);
  }
  try {
    report.mutual_information =
        ComputeMutualInformation(*scheme, policy.budget_bits);
  } catch (const BudgetExceededError&) {
    out << "note: joint mutual information skipped (over budget)\n";
  }
  if (config.negative_control.empty()) {
    report.expected_rate = RatePrivate(params.n_files, params.n_users,
                                       params.cache_index);
  }
  out << "verify N=" << params.n_files << " K=" << params.n_users
      << " t=" << params.cache_index << " b=" << params.subfile_bits << "\n";
  out << RenderReport(report);
  out << RenderWitnessLines(report);
  return report.passed() ? kExitPass : kExitViolation;
}

int CommandExample1(std::ostream& out) {
  const BigRational two_thirds(BigInt(2), BigInt(3));
  const VerificationReport fixture = RunFixture();
  out << "== fixture (cache and transmission tables) ==\n"
      << RenderReport(fixture) << RenderWitnessLines(fixture);

  const PrivateConstruction general(ValidateParams(2, 2, 2, 1));
  WorldPolicy policy;
  policy.mode = WorldMode::kExhaustive;
  VerificationReport report = Verify(general, policy);
  report.mutual_information = ComputeMutualInformation(general);
  report.expected_rate = two_thirds;
  out << "== general construction N=2 K=2 t=2 b=1 ==\n"
      << RenderReport(report) << RenderWitnessLines(report);

  const bool ok = fixture.passed() && report.passed();
  out << "example1: fixture rate "
      << (fixture.realized_rates.empty() ? std::string("?")
                                         : fixture.realized_rates[0].ToString())
      << ", general rate "
      << (report.realized_rates.empty() ? std::string("?")
                                        : report.realized_rates[0].ToString())
      << ", " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitPass : kExitViolation;
}

int CommandBounds(const RunConfig& config, std::ostream& out) {
  const GapReport report = RateGapReport(config.n_files, config.n_users);
  out << RenderGapReport(report);
  return report.passed() ? kExitPass : kExitViolation;
}

int CommandSimulate(const RunConfig& config, std::ostream& out,
                    std::ostream& err) {
  if (config.trials <= 0) throw UsageError("--trials must be positive");
  const SchemeParams params = OperationalParams(config);
  const BigRational expected =
      RatePrivate(params.n_files, params.n_users, params.cache_index);
  std::ostringstream log;
  int failures = 0;
  std::vector<BigRational> rates;
  for (int i = 0; i < config.trials; ++i) {
    const PrivateEpisode episode =
        RunEpisode(params, config.seed + static_cast<std::uint64_t>(i));
    log << FormatEpisode(episode) << "\n";
    if (!episode.all_decoded() || episode.realized_rate != expected) {
      ++failures;
    }
    if (std::find(rates.begin(), rates.end(), episode.realized_rate) ==
        rates.end()) {
      rates.push_back(episode.realized_rate);
    }
  }
  if (!config.out.empty()) {
    std::ofstream file(config.out, std::ios::binary);
    if (!file || !(file << log.str()) || !file.flush()) {
      err << "error: cannot write " << config.out << "\n";
      return kExitUsage;
    }
  } else {
    out << log.str();
  }
  out << "simulate N=" << params.n_files << " K=" << params.n_users
      << " t=" << params.cache_index << " trials=" << config.trials
      << " expected_rate=" << expected << " distinct_rates=" << rates.size()
      << " failures=" << failures << " "
      << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? kExitPass : kExitViolation;
}

}  // namespace

int RunConfig::ResolveCacheIndex() const {
  std::optional<int> from_memory;
  if (memory) {
    const BigRational m = BigRational::Parse(*memory);
    const BigRational t = m * BigRational(n_users);
    if (!t.IsInteger()) {
      throw std::invalid_argument("K * M = " + t.ToString() +
                                  " is not an integer");
    }
    if (t.Sign() < 0) throw std::invalid_argument("memory must be >= 0");
    from_memory = static_cast<int>(t.numerator());
  }
  if (cache_index && from_memory && *cache_index != *from_memory) {
    throw std::invalid_argument("--t and --m disagree");
  }
  if (cache_index) return *cache_index;
  if (from_memory) return *from_memory;
  return n_users;
}

int RunConfig::ResolveBudget() const {
  if (budget_bits) return *budget_bits;
  if (const char* env = std::getenv(kBudgetEnvVar); env != nullptr && *env) {
    return ParseBudget(env, kBudgetEnvVar);
  }
  return kDefaultEnumerationBudgetBits;
}

std::vector<std::string> ConfigFileTokens(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read config file " + path);
  std::vector<std::string> tokens;
  std::string line;
  int number = 0;
  while (std::getline(file, line)) {
    ++number;
    const std::string text = Trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(number) +
                       ": expected key=value");
    }
    const std::string key = Trim(std::string_view(text).substr(0, eq));
    const std::string value = Trim(std::string_view(text).substr(eq + 1));
    if (key.empty() || key == "config") {
      throw UsageError(path + ":" + std::to_string(number) + ": bad key");
    }
    if (key == "allow-sampled-fallback") {
      if (value == "true" || value == "1") tokens.push_back("--" + key);
      continue;
    }
    tokens.push_back("--" + key);
    tokens.push_back(value);
  }
  return tokens;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  RunConfig config;
  CLI::App app{"Demand-private coded caching: schemes, verifier and rates",
               "dpcc"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  CLI::App* rate_table =
      AddCommand(app, config, "rate-table", "write the memory-rate CSV");
  AddShape(rate_table, config);
  rate_table->add_option("--resolution", config.resolution,
                         "rows per 1/K memory step")
      ->check(CLI::PositiveNumber);
  rate_table->add_option("--out", config.out, "CSV path (.exact sibling too)");

  CLI::App* verify =
      AddCommand(app, config, "verify", "check decodability and privacy");
  AddShape(verify, config);
  AddMemory(verify, config);
  verify->add_option("--worlds", config.worlds,
                     "exhaustive | fixed | sampled | sampled:<count>");
  verify->add_option("--budget", config.budget_bits,
                     "enumeration budget in bits (N * P * b)")
      ->check(CLI::Range(0, 62));
  verify->add_option("--negative-control", config.negative_control,
                     "cleartext | drop-block")
      ->check(CLI::IsMember({"cleartext", "drop-block"}));
  verify->add_option("--drop-index", config.drop_index,
                     "payload block removed by drop-block")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--allow-sampled-fallback", config.allow_sampled_fallback,
                   "sample worlds when exhaustive enumeration is over budget");

  AddCommand(app, config, "example1",
             "verify the N = K = 2 fixture and the general construction");

  CLI::App* bounds =
      AddCommand(app, config, "bounds", "check the rate-gap inequalities");
  AddShape(bounds, config);

  CLI::App* simulate =
      AddCommand(app, config, "simulate", "run seeded delivery episodes");
  AddShape(simulate, config);
  AddMemory(simulate, config);
  simulate->add_option("--trials", config.trials, "number of episodes")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--out", config.out, "episode log path");

  try {
    std::vector<std::string> tokens = args;
    if (auto path = FindConfigPath(args); path && !tokens.empty()) {
      const auto extra = ConfigFileTokens(*path);
      tokens.insert(tokens.begin() + 1, extra.begin(), extra.end());
    }
    std::reverse(tokens.begin(), tokens.end());
    app.parse(tokens);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (config.command == "rate-table") return CommandRateTable(config, out, err);
    if (config.command == "verify") return CommandVerify(config, out, err);
    if (config.command == "example1") return CommandExample1(out);
    if (config.command == "bounds") return CommandBounds(config, out);
    if (config.command == "simulate") return CommandSimulate(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace dpcc
