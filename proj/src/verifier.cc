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

#include "dpcc/verifier.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "dpcc/yma_scheme.h"

namespace dpcc {

namespace {

using boost::multiprecision::uint128_t;

std::uint64_t Power(std::uint64_t base, int exponent) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

// Lexicographic tuple in [1, radix]^length, first entry most significant.
std::vector<int> TupleFromIndex(std::uint64_t index, int length, int radix) {
  std::vector<int> tuple(length);
  for (int i = length - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(index % radix) + 1;
    index /= radix;
  }
  return tuple;
}

std::uint64_t IndexWithout(const std::vector<int>& tuple, int skip,
                           int radix) {
  std::uint64_t index = 0;
  for (int i = 0; i < static_cast<int>(tuple.size()); ++i) {
    if (i == skip) continue;
    index = index * radix + (tuple[i] - 1);
  }
  return index;
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

void AppendInt(std::int64_t value, std::string& out) {
  out.append(reinterpret_cast<const char*>(&value), sizeof(value));
}

std::string CacheBytes(const CacheContent& cache) {
  std::string out;
  AppendInt(cache.key, out);
  AppendInt(static_cast<std::int64_t>(cache.store.size()), out);
  for (const auto& entry : cache.store) {
    AppendInt(entry.file, out);
    AppendInt(static_cast<std::int64_t>(entry.index), out);
    AppendBlockBytes(entry.bits, out);
  }
  return out;
}

std::string BroadcastBytes(const BroadcastMessage& broadcast) {
  std::string out;
  AppendInt(static_cast<std::int64_t>(broadcast.header.size()), out);
  for (int symbol : broadcast.header) AppendInt(symbol, out);
  AppendInt(static_cast<std::int64_t>(broadcast.payload.size()), out);
  for (const auto& block : broadcast.payload) {
    AppendInt(static_cast<std::int64_t>(block.size()), out);
    AppendBlockBytes(block, out);
  }
  return out;
}

// Everything user-visible in one world: cache digests per (user, key) and
// broadcast digests per (keys, demands) pair.
struct WorldSnapshot {
  std::vector<std::vector<std::string>> cache_bytes;  // [k - 1][key - 1]
  std::vector<std::string> broadcast_bytes;  // [key_index * demands + d]
  std::vector<std::vector<int>> header;      // same indexing
};

class WorldRunner {
 public:
  WorldRunner(const CachingScheme& scheme, VerificationReport& report,
              bool decode, bool keep_views)
      : scheme_(scheme),
        report_(report),
        decode_(decode),
        keep_views_(keep_views),
        key_count_(Power(scheme.key_alphabet(), scheme.n_users())),
        demand_count_(Power(scheme.n_files(), scheme.n_users())) {}

  std::uint64_t key_count() const { return key_count_; }
  std::uint64_t demand_count() const { return demand_count_; }

  WorldSnapshot Run(const FileLibrary& library, std::uint64_t world) {
    const int n_users = scheme_.n_users();
    std::vector<std::vector<CacheContent>> caches(n_users);
    WorldSnapshot snapshot;
    snapshot.cache_bytes.resize(n_users);
    for (int k = 1; k <= n_users; ++k) {
      for (int key = 1; key <= scheme_.key_alphabet(); ++key) {
        caches[k - 1].push_back(scheme_.Place(library, k, key));
        if (keep_views_) {
          snapshot.cache_bytes[k - 1].push_back(
              CacheBytes(caches[k - 1].back()));
        }
      }
    }
    if (keep_views_) {
      snapshot.broadcast_bytes.reserve(key_count_ * demand_count_);
      snapshot.header.reserve(key_count_ * demand_count_);
    }
    const BigInt file_bits(scheme_.file_bits());
    for (std::uint64_t si = 0; si < key_count_; ++si) {
      const KeyVector keys{TupleFromIndex(si, n_users, scheme_.key_alphabet())};
      for (std::uint64_t di = 0; di < demand_count_; ++di) {
        const DemandVector demands{
            TupleFromIndex(di, n_users, scheme_.n_files())};
        const BroadcastMessage broadcast =
            scheme_.Deliver(library, demands, keys);
        const std::size_t payload_bits = broadcast.payload_bits();
        if (payload_bits != last_payload_bits_) {
          rates_.insert(BigRational(BigInt(payload_bits), file_bits));
          last_payload_bits_ = payload_bits;
        }
        if (decode_) CheckDecodes(library, world, keys, demands, caches, broadcast);
        if (keep_views_) {
          snapshot.broadcast_bytes.push_back(BroadcastBytes(broadcast));
          snapshot.header.push_back(broadcast.header);
        }
      }
    }
    return snapshot;
  }

  void FlushRates() {
    report_.realized_rates.assign(rates_.begin(), rates_.end());
  }

 private:
  void CheckDecodes(const FileLibrary& library, std::uint64_t world,
                    const KeyVector& keys, const DemandVector& demands,
                    const std::vector<std::vector<CacheContent>>& caches,
                    const BroadcastMessage& broadcast) {
    for (int k = 1; k <= scheme_.n_users(); ++k) {
      ++report_.decode_checks;
      const int demand = demands.d[k - 1];
      std::string reason;
      try {
        const auto file = scheme_.Decode(k, caches[k - 1][keys.s[k - 1] - 1],
                                         broadcast, demand);
        const auto truth = library.file(demand);
        if (!std::equal(file.begin(), file.end(), truth.begin(),
                        truth.end())) {
          reason = "mismatch";
        }
      } catch (const UndeterminedError& e) {
        reason = std::string("undetermined: ") + e.what();
      } catch (const std::exception& e) {
        reason = std::string("error: ") + e.what();
      }
      if (!reason.empty()) {
        ++report_.decode_failure_count;
        if (report_.decode_failures.size() < kMaxWitnesses) {
          report_.decode_failures.push_back({world, keys, demands, k, reason});
        }
      }
    }
  }

  const CachingScheme& scheme_;
  VerificationReport& report_;
  bool decode_;
  bool keep_views_;
  std::uint64_t key_count_;
  std::uint64_t demand_count_;
  std::set<BigRational> rates_;
  std::size_t last_payload_bits_ = static_cast<std::size_t>(-1);
};

// Counts of the other users' demands, per observed view, for one user.
using ViewCounts = std::unordered_map<std::string, std::vector<std::uint64_t>>;

void AccumulateViews(const CachingScheme& scheme, const WorldSnapshot& snap,
                     int user, std::uint64_t key_count,
                     std::uint64_t demand_count, std::size_t others,
                     ViewCounts& counts) {
  const int n_users = scheme.n_users();
  std::string view;
  for (std::uint64_t si = 0; si < key_count; ++si) {
    const auto keys = TupleFromIndex(si, n_users, scheme.key_alphabet());
    const int key = keys[user - 1];
    for (std::uint64_t di = 0; di < demand_count; ++di) {
      const auto demands = TupleFromIndex(di, n_users, scheme.n_files());
      view.clear();
      AppendInt(key, view);
      AppendInt(demands[user - 1], view);
      view += snap.cache_bytes[user - 1][key - 1];
      view += snap.broadcast_bytes[si * demand_count + di];
      auto [it, inserted] = counts.try_emplace(view);
      if (inserted) it->second.assign(others, 0);
      ++it->second[IndexWithout(demands, user - 1, scheme.n_files())];
    }
  }
}

// Exact-zero test and value of I(A; V) from joint counts n[v][a].
struct MiResult {
  bool exact_zero = true;
  double bits = 0.0;
};

MiResult MutualInformationFromCounts(const ViewCounts& counts,
                                     std::size_t others) {
  std::vector<std::uint64_t> marginal(others, 0);
  std::uint64_t total = 0;
  for (const auto& [view, row] : counts) {
    for (std::size_t j = 0; j < others; ++j) {
      marginal[j] += row[j];
      total += row[j];
    }
  }
  MiResult result;
  for (const auto& [view, row] : counts) {
    std::uint64_t group = 0;
    for (auto n : row) group += n;
    for (std::size_t j = 0; j < others; ++j) {
      if (uint128_t(row[j]) * total != uint128_t(group) * marginal[j]) {
        result.exact_zero = false;
      }
      if (row[j] == 0) continue;
      const double p = static_cast<double>(row[j]) / total;
      result.bits += p * std::log2(static_cast<double>(row[j]) * total /
                                   (static_cast<double>(group) * marginal[j]));
    }
  }
  if (result.exact_zero) result.bits = 0.0;
  return result;
}

void CheckUniformity(const CachingScheme& scheme, const WorldSnapshot& snap,
                     std::uint64_t world, std::uint64_t key_count,
                     std::uint64_t demand_count, VerificationReport& report) {
  const std::size_t others = Power(scheme.n_files(), scheme.n_users() - 1);
  for (int k = 1; k <= scheme.n_users(); ++k) {
    ViewCounts counts;
    AccumulateViews(scheme, snap, k, key_count, demand_count, others, counts);
    bool uniform_everywhere = true;
    for (const auto& [view, row] : counts) {
      ++report.privacy_groups;
      const bool uniform =
          std::all_of(row.begin(), row.end(),
                      [&](std::uint64_t n) { return n == row.front(); });
      if (uniform) continue;
      uniform_everywhere = false;
      ++report.privacy_violation_count;
      if (report.privacy_violations.size() >= kMaxWitnesses) continue;
      std::uint64_t group = 0;
      for (auto n : row) group += n;
      PrivacyWitness witness;
      witness.world = world;
      witness.user = k;
      std::int64_t key = 0, demand = 0;
      std::memcpy(&key, view.data(), sizeof(key));
      std::memcpy(&demand, view.data() + sizeof(key), sizeof(demand));
      witness.key = static_cast<int>(key);
      witness.demand = static_cast<int>(demand);
      // Recover the header of one pair producing this view.
      for (std::uint64_t i = 0; i < snap.broadcast_bytes.size(); ++i) {
        if (view.size() >= snap.broadcast_bytes[i].size() &&
            view.compare(view.size() - snap.broadcast_bytes[i].size(),
                         std::string::npos, snap.broadcast_bytes[i]) == 0) {
          witness.header = snap.header[i];
          break;
        }
      }
      for (auto n : row) {
        witness.conditional.emplace_back(BigInt(n), BigInt(group));
      }
      witness.expected = BigRational(BigInt(1), BigInt(others));
      report.privacy_violations.push_back(std::move(witness));
    }
    const MiResult mi = MutualInformationFromCounts(counts, others);
    report.max_world_conditional_mi_bits =
        std::max(report.max_world_conditional_mi_bits, mi.bits);
    if (mi.exact_zero != uniform_everywhere) report.uniformity_matches_mi = false;
  }
}

void ForEachWorld(const CachingScheme& scheme, const WorldPolicy& policy,
                  const std::function<void(std::uint64_t,
                                           const FileLibrary&)>& visit) {
  switch (policy.mode) {
    case WorldMode::kExhaustive: {
      const WorldRange range(scheme.n_files(), scheme.subfiles_per_file(),
                             scheme.subfile_bits(), policy.budget_bits);
      for (auto it = range.begin(); it != range.end(); ++it) {
        visit(it.index(), *it);
      }
      return;
    }
    case WorldMode::kFixed:
    case WorldMode::kSampled: {
      const int count = policy.mode == WorldMode::kFixed ? 1 : policy.sample_count;
      Rng rng(policy.seed);
      FileLibrary library(scheme.n_files(), scheme.subfiles_per_file(),
                          scheme.subfile_bits());
      for (int i = 0; i < count; ++i) {
        FillLibrary(library, rng);
        visit(static_cast<std::uint64_t>(i), library);
      }
      return;
    }
  }
}

VerificationReport RunChecks(const CachingScheme& scheme,
                             const WorldPolicy& policy, bool decode,
                             bool privacy) {
  VerificationReport report;
  report.scheme = scheme.name();
  report.mode = policy.mode;
  report.decodability_checked = decode;
  report.privacy_checked = privacy;
  WorldRunner runner(scheme, report, decode, privacy);
  ForEachWorld(scheme, policy,
               [&](std::uint64_t world, const FileLibrary& library) {
                 ++report.worlds_checked;
                 const WorldSnapshot snap = runner.Run(library, world);
                 if (privacy) {
                   CheckUniformity(scheme, snap, world, runner.key_count(),
                                   runner.demand_count(), report);
                 }
               });
  runner.FlushRates();
  return report;
}

}  // namespace

PrivateConstruction::PrivateConstruction(SchemeParams params)
    : params_(params), subfiles_(params.subfile_count()) {}

std::string PrivateConstruction::name() const {
  std::ostringstream out;
  out << "private-construction N=" << params_.n_files
      << " K=" << params_.n_users << " t=" << params_.cache_index
      << " b=" << params_.subfile_bits;
  return out.str();
}

CacheContent PrivateConstruction::Place(const FileLibrary& library, int user,
                                        int key) const {
  return PrivatePlaceUser(params_, library, user, key);
}

BroadcastMessage PrivateConstruction::Deliver(const FileLibrary& library,
                                              const DemandVector& demands,
                                              const KeyVector& keys) const {
  return PrivateDeliver(params_, library, demands, keys);
}

std::vector<Block> PrivateConstruction::Decode(
    int user, const CacheContent& cache, const BroadcastMessage& broadcast,
    int /*demand*/) const {
  return PrivateDecode(params_, user, cache, broadcast);
}

std::string CleartextDemandScheme::name() const {
  return "cleartext-demand " + PrivateConstruction::name();
}

BroadcastMessage CleartextDemandScheme::Deliver(const FileLibrary& library,
                                                const DemandVector& demands,
                                                const KeyVector& keys) const {
  BroadcastMessage message =
      PrivateConstruction::Deliver(library, demands, keys);
  message.header.insert(message.header.end(), demands.d.begin(),
                        demands.d.end());
  return message;
}

std::vector<Block> CleartextDemandScheme::Decode(
    int user, const CacheContent& cache, const BroadcastMessage& broadcast,
    int demand) const {
  BroadcastMessage stripped = broadcast;
  stripped.header.resize(params().n_users);
  return PrivateConstruction::Decode(user, cache, stripped, demand);
}

DroppedBlockScheme::DroppedBlockScheme(SchemeParams params,
                                       std::size_t dropped)
    : PrivateConstruction(params), dropped_(dropped) {
  const long long nk = params.virtual_users();
  const BigInt blocks = Binomial(nk, params.cache_index + 1) -
                        Binomial(nk - params.n_files, params.cache_index + 1);
  if (BigInt(dropped) >= blocks) {
    throw std::invalid_argument("payload has " + blocks.str() +
                                " blocks; cannot drop block " +
                                std::to_string(dropped));
  }
}

std::string DroppedBlockScheme::name() const {
  return "dropped-block-" + std::to_string(dropped_) + " " +
         PrivateConstruction::name();
}

BroadcastMessage DroppedBlockScheme::Deliver(const FileLibrary& library,
                                             const DemandVector& demands,
                                             const KeyVector& keys) const {
  BroadcastMessage message =
      PrivateConstruction::Deliver(library, demands, keys);
  if (dropped_ < message.payload.size()) {
    message.payload.erase(message.payload.begin() +
                          static_cast<std::ptrdiff_t>(dropped_));
  }
  return message;
}

std::vector<Block> DroppedBlockScheme::Decode(
    int user, const CacheContent& cache, const BroadcastMessage& broadcast,
    int /*demand*/) const {
  const SchemeParams& p = params();
  const VirtualDemand demand =
      LiftDemands(ShiftsFromHeader(p, broadcast), p.n_files, p.n_users);
  auto plan = YmaTransmissionPlan(VirtualConfig(p), demand);
  if (dropped_ < plan.size()) {
    plan.erase(plan.begin() + static_cast<std::ptrdiff_t>(dropped_));
  }
  if (plan.size() != broadcast.payload.size()) {
    throw std::invalid_argument("payload length does not match the plan");
  }
  std::vector<DeliveredBlock> blocks;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    blocks.push_back({std::move(plan[i]), broadcast.payload[i]});
  }
  return YmaDecode(VirtualConfig(p), VirtualUserFor(user, cache.key, p.n_files),
                   cache, blocks, demand);
}

CorruptedPayloadScheme::CorruptedPayloadScheme(SchemeParams params,
                                               std::size_t block)
    : PrivateConstruction(params), block_(block) {}

std::string CorruptedPayloadScheme::name() const {
  return "corrupted-block-" + std::to_string(block_) + " " +
         PrivateConstruction::name();
}

BroadcastMessage CorruptedPayloadScheme::Deliver(const FileLibrary& library,
                                                 const DemandVector& demands,
                                                 const KeyVector& keys) const {
  BroadcastMessage message =
      PrivateConstruction::Deliver(library, demands, keys);
  if (block_ < message.payload.size() && message.payload[block_].size() > 0) {
    message.payload[block_].flip(0);
  }
  return message;
}

TrivialScheme::TrivialScheme(int n_files, int n_users, int cached_files,
                             std::size_t subfiles_per_file,
                             std::size_t subfile_bits)
    : n_files_(n_files),
      n_users_(n_users),
      cached_files_(cached_files),
      subfiles_(subfiles_per_file),
      bits_(subfile_bits) {
  if (cached_files < 0 || cached_files > n_files) {
    throw std::invalid_argument("cached file count outside [0, N]");
  }
}

std::string TrivialScheme::name() const {
  return "trivial N=" + std::to_string(n_files_) +
         " K=" + std::to_string(n_users_) +
         " cached=" + std::to_string(cached_files_);
}

CacheContent TrivialScheme::Place(const FileLibrary& library, int user,
                                  int /*key*/) const {
  return TrivialPlace(library, cached_files_, user);
}

BroadcastMessage TrivialScheme::Deliver(const FileLibrary& library,
                                        const DemandVector& /*demands*/,
                                        const KeyVector& /*keys*/) const {
  return TrivialDeliver(library, cached_files_);
}

std::vector<Block> TrivialScheme::Decode(int /*user*/,
                                         const CacheContent& cache,
                                         const BroadcastMessage& broadcast,
                                         int demand) const {
  return TrivialDecode(cache, broadcast, subfiles_, cached_files_, demand);
}

std::string_view WorldModeName(WorldMode mode) {
  switch (mode) {
    case WorldMode::kExhaustive:
      return "exhaustive";
    case WorldMode::kFixed:
      return "fixed";
    case WorldMode::kSampled:
      return "sampled";
  }
  return "unknown";
}

WorldPolicy WorldPolicy::Parse(std::string_view text) {
  WorldPolicy policy;
  if (text == "exhaustive") {
    policy.mode = WorldMode::kExhaustive;
  } else if (text == "fixed") {
    policy.mode = WorldMode::kFixed;
  } else if (text == "sampled") {
    policy.mode = WorldMode::kSampled;
  } else if (text.starts_with("sampled:")) {
    policy.mode = WorldMode::kSampled;
    const auto digits = text.substr(8);
    int count = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), count);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        count <= 0) {
      throw std::invalid_argument("bad sample count in '" + std::string(text) +
                                  "'");
    }
    policy.sample_count = count;
  } else {
    throw std::invalid_argument("unknown world policy '" + std::string(text) +
                                "'");
  }
  return policy;
}

bool VerificationReport::passed() const {
  if (decode_failure_count != 0) return false;
  if (privacy_violation_count != 0) return false;
  if (!uniformity_matches_mi) return false;
  if (mutual_information && !mutual_information->exact_zero) return false;
  if (expected_rate && !(rate_constant() && realized_rates[0] == *expected_rate)) {
    return false;
  }
  return true;
}

VerificationReport CheckDecodability(const CachingScheme& scheme,
                                     const WorldPolicy& policy) {
  return RunChecks(scheme, policy, /*decode=*/true, /*privacy=*/false);
}

VerificationReport CheckPrivacyUniform(const CachingScheme& scheme,
                                       const WorldPolicy& policy) {
  return RunChecks(scheme, policy, /*decode=*/false, /*privacy=*/true);
}

VerificationReport Verify(const CachingScheme& scheme,
                          const WorldPolicy& policy) {
  return RunChecks(scheme, policy, /*decode=*/true, /*privacy=*/true);
}

MutualInformation ComputeMutualInformation(const CachingScheme& scheme,
                                           int budget_bits) {
  WorldPolicy policy;
  policy.mode = WorldMode::kExhaustive;
  policy.budget_bits = budget_bits;
  const std::size_t others = Power(scheme.n_files(), scheme.n_users() - 1);

  VerificationReport scratch;
  WorldRunner runner(scheme, scratch, /*decode=*/false, /*keep_views=*/true);
  std::vector<ViewCounts> counts(scheme.n_users());
  ForEachWorld(scheme, policy,
               [&](std::uint64_t world, const FileLibrary& library) {
                 const WorldSnapshot snap = runner.Run(library, world);
                 for (int k = 1; k <= scheme.n_users(); ++k) {
                   AccumulateViews(scheme, snap, k, runner.key_count(),
                                   runner.demand_count(), others,
                                   counts[k - 1]);
                 }
               });

  MutualInformation result;
  for (const auto& user_counts : counts) {
    const MiResult mi = MutualInformationFromCounts(user_counts, others);
    result.exact_zero = result.exact_zero && mi.exact_zero;
    result.per_user_bits.push_back(mi.bits);
    result.bits = std::max(result.bits, mi.bits);
  }
  return result;
}

std::string RenderReport(const VerificationReport& report) {
  std::ostringstream out;
  out << "scheme: " << report.scheme << "\n";
  out << "worlds: " << WorldModeName(report.mode) << " ("
      << report.worlds_checked << ")\n";
  if (report.decodability_checked) {
    out << "decodability: "
        << (report.decode_failure_count == 0 ? "PASS" : "FAIL") << " ("
        << report.decode_checks << " decodes, " << report.decode_failure_count
        << " failures)\n";
  }
  if (report.privacy_checked) {
    out << "privacy: "
        << (report.privacy_violation_count == 0 ? "PASS" : "FAIL") << " ("
        << report.privacy_groups << " view groups, "
        << report.privacy_violation_count << " violations)\n";
    out << "per-world conditional mutual information (max): " << std::fixed
        << std::setprecision(12) << report.max_world_conditional_mi_bits
        << " bits; uniformity and exact-zero verdicts "
        << (report.uniformity_matches_mi ? "agree" : "DISAGREE") << "\n";
  }
  if (!report.realized_rates.empty()) {
    out << "rate: ";
    for (std::size_t i = 0; i < report.realized_rates.size(); ++i) {
      if (i > 0) out << ", ";
      out << report.realized_rates[i];
    }
    out << (report.rate_constant() ? " (constant)" : " (varies)") << "\n";
  }
  if (report.mutual_information) {
    const auto& mi = *report.mutual_information;
    out << "mutual information: " << std::fixed << std::setprecision(12)
        << mi.bits << " bits"
        << (mi.exact_zero ? " (exactly zero)" : " (nonzero)") << "\n";
  }
  out << "verdict: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string RenderWitnessLines(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& w : report.decode_failures) {
    out << "decode_failure world=" << w.world << " keys=" << Join(w.keys.s)
        << " demands=" << Join(w.demands.d) << " user=" << w.user
        << " reason=\"" << w.reason << "\"\n";
  }
  for (const auto& w : report.privacy_violations) {
    out << "privacy_violation world=" << w.world << " user=" << w.user
        << " key=" << w.key << " demand=" << w.demand
        << " header=" << Join(w.header)
        << " conditional=" << Join(w.conditional)
        << " expected=" << w.expected << "\n";
  }
  return out.str();
}

}  // namespace dpcc
