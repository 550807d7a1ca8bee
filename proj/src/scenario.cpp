#include "denial/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <stdexcept>

namespace denial {

namespace {

constexpr std::int64_t kWindowMs = 60'000;  // presets assume default windows
constexpr int kBenignPoolSize = 20;

std::string pad3(std::int64_t i) {
  std::string s = std::to_string(i);
  return std::string(s.size() >= 3 ? 0 : 3 - s.size(), '0') + s;
}

}  // namespace

std::optional<ScenarioKind> scenario_from_name(const std::string& name) {
  if (name == "syn-flood" || name == "syn_flood") return ScenarioKind::SynFlood;
  if (name == "mirai") return ScenarioKind::Mirai;
  if (name == "slowloris") return ScenarioKind::Slowloris;
  if (name == "ddow-billing" || name == "ddow_billing")
    return ScenarioKind::DdowBilling;
  if (name == "custom") return ScenarioKind::Custom;
  return std::nullopt;
}

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::SynFlood: return "syn_flood";
    case ScenarioKind::Mirai: return "mirai";
    case ScenarioKind::Slowloris: return "slowloris";
    case ScenarioKind::DdowBilling: return "ddow_billing";
    case ScenarioKind::Custom: return "custom";
  }
  return "?";
}

ScenarioSpec ScenarioSpec::preset(ScenarioKind kind, std::uint64_t seed) {
  ScenarioSpec s;
  s.kind = kind;
  s.seed = seed;
  switch (kind) {
    case ScenarioKind::SynFlood:
      // Single host, volumetric, fixed target.
      s.attacker_count = 1;
      s.malicious_pkts_per_src_per_window = 50'000;
      s.benign_pkts_per_window = 10'000;
      s.target_infra = InfraKind::Fixed;
      s.expected_class = AttackClass::DoS;
      break;
    case ScenarioKind::Mirai:
      // Large botnet, volumetric in aggregate.
      s.attacker_count = 500;
      s.malicious_pkts_per_src_per_window = 200;
      s.benign_pkts_per_window = 10'000;
      s.target_infra = InfraKind::Fixed;
      s.expected_class = AttackClass::DDoS;
      break;
    case ScenarioKind::Slowloris:
      // Single host, trickle volume.
      s.attacker_count = 1;
      s.malicious_pkts_per_src_per_window = 200;
      s.benign_pkts_per_window = 10'000;
      s.target_infra = InfraKind::Fixed;
      s.expected_class = AttackClass::LDoS;
      break;
    case ScenarioKind::DdowBilling:
      // Many sources, tiny per-source volume, serverless target.
      s.attacker_count = 300;
      s.malicious_pkts_per_src_per_window = 2;
      s.benign_pkts_per_window = 50'000;
      s.target_infra = InfraKind::Serverless;
      s.expected_class = AttackClass::DDoW;
      break;
    case ScenarioKind::Custom:
      break;
  }
  return s;
}

void ScenarioSpec::validate() const {
  if (duration_secs <= 0)
    throw std::invalid_argument("duration_secs must be positive");
  if (attacker_count <= 0)
    throw std::invalid_argument("attacker_count must be positive");
  if (malicious_pkts_per_src_per_window <= 0)
    throw std::invalid_argument(
        "malicious_pkts_per_src_per_window must be positive");
  if (benign_pkts_per_window < 0)
    throw std::invalid_argument("benign_pkts_per_window must be >= 0");
}

GeneratedScenario generate(const ScenarioSpec& spec) {
  spec.validate();
  GeneratedScenario out;

  const std::string target = "t1";
  TargetProfile profile;
  profile.target_id = target;
  profile.infra = spec.target_infra;
  out.profiles.emplace(target, profile);
  out.expected = spec.expected_class;

  std::mt19937_64 rng(spec.seed);
  const std::int64_t windows =
      std::max<std::int64_t>(1, spec.duration_secs * 1000 / kWindowMs);

  for (std::int64_t w = 0; w < windows; ++w) {
    const std::int64_t start = w * kWindowMs;
    std::vector<FlowRecord> window_records;

    if (spec.benign_pkts_per_window > 0) {
      std::int64_t per_src = spec.benign_pkts_per_window / kBenignPoolSize;
      std::int64_t remainder = spec.benign_pkts_per_window % kBenignPoolSize;
      for (int i = 0; i < kBenignPoolSize; ++i) {
        std::int64_t pkts = per_src + (i == 0 ? remainder : 0);
        if (pkts == 0) continue;
        FlowRecord r;
        r.ts_ms = start + static_cast<std::int64_t>(rng() % kWindowMs);
        r.src = "bg-" + pad3(i);
        r.dst = target;
        r.pkts = pkts;
        r.bytes = pkts * 64;
        r.malicious = false;
        window_records.push_back(r);
      }
    }

    // Window 0 is benign-only warmup so a trailing baseline exists.
    if (w > 0) {
      for (std::int64_t i = 0; i < spec.attacker_count; ++i) {
        FlowRecord r;
        r.ts_ms = start + static_cast<std::int64_t>(rng() % kWindowMs);
        r.src = "atk-" + pad3(i);
        r.dst = target;
        r.pkts = spec.malicious_pkts_per_src_per_window;
        r.bytes = r.pkts * 64;
        r.malicious = true;
        window_records.push_back(r);
      }
    }

    std::sort(window_records.begin(), window_records.end(),
              [](const FlowRecord& a, const FlowRecord& b) {
                return std::tie(a.ts_ms, a.src) < std::tie(b.ts_ms, b.src);
              });
    out.flows.insert(out.flows.end(), window_records.begin(),
                     window_records.end());
  }
  return out;
}

void write_scenario(const GeneratedScenario& scenario,
                    const std::string& prefix) {
  {
    std::ofstream f(prefix + ".flows.jsonl");
    if (!f) throw std::runtime_error("cannot write " + prefix + ".flows.jsonl");
    for (const auto& r : scenario.flows) f << to_jsonl(r) << "\n";
  }
  {
    std::ofstream f(prefix + ".targets.json");
    if (!f) throw std::runtime_error("cannot write " + prefix + ".targets.json");
    f << target_profiles_to_json(scenario.profiles);
  }
  {
    std::ofstream f(prefix + ".expected");
    if (!f) throw std::runtime_error("cannot write " + prefix + ".expected");
    if (scenario.expected) f << to_string(*scenario.expected) << "\n";
  }
}

}  // namespace denial
