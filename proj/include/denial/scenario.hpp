#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "denial/flow.hpp"
#include "denial/taxonomy.hpp"

namespace denial {

enum class ScenarioKind : std::uint8_t {
  SynFlood,
  Mirai,
  Slowloris,
  DdowBilling,
  Custom,
};

std::optional<ScenarioKind> scenario_from_name(const std::string& name);
std::string to_string(ScenarioKind k);

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::Custom;
  std::int64_t duration_secs = 300;
  std::int64_t attacker_count = 1;
  std::int64_t malicious_pkts_per_src_per_window = 1000;
  std::int64_t benign_pkts_per_window = 10000;
  InfraKind target_infra = InfraKind::Fixed;
  std::uint64_t seed = 0;
  std::optional<AttackClass> expected_class;

  /// Presets with parameters pinned so each case lands on the intended
  /// condition vector under default thresholds.
  static ScenarioSpec preset(ScenarioKind kind, std::uint64_t seed);

  void validate() const;  // throws std::invalid_argument
};

struct GeneratedScenario {
  std::vector<FlowRecord> flows;  // time-sorted
  TargetMap profiles;
  std::optional<AttackClass> expected;
};

/// Deterministic for a fixed spec (seed included). The first window is
/// benign-only warmup for baseline estimation; every later window carries
/// the attack plus background traffic.
GeneratedScenario generate(const ScenarioSpec& spec);

/// Writes "<prefix>.flows.jsonl", "<prefix>.targets.json" and
/// "<prefix>.expected" (class name, single line; empty file when the spec
/// has no expected class).
void write_scenario(const GeneratedScenario& scenario,
                    const std::string& prefix);

}  // namespace denial
