#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "denial/conditions.hpp"
#include "denial/flow.hpp"

namespace denial {

struct Thresholds {
  std::int64_t low_rate_packet_limit = 1000;  // strict "<"
  double low_rate_fraction = 0.20;            // inclusive "<="
  std::int64_t window_secs = 60;
  std::int64_t baseline_trailing_windows = 10;

  void validate() const;  // throws std::invalid_argument

  /// Reads the optional JSON config (keys low_rate_packet_limit,
  /// low_rate_fraction, window_secs, baseline_trailing_windows; all
  /// optional). Missing keys keep defaults.
  static Thresholds from_json_file(const std::string& path);
};

struct WindowFeatures {
  std::string target_id;
  std::int64_t window_start_ms = 0;
  std::int64_t window_end_ms = 0;
  std::int64_t malicious_pkts = 0;
  std::int64_t benign_pkts = 0;
  std::int64_t distinct_malicious_sources = 0;
  std::optional<std::int64_t> baseline_pkts;
  InfraKind infra = InfraKind::Fixed;
};

/// Buckets time-sorted records into tumbling windows aligned to multiples
/// of window_secs from epoch, one WindowFeatures per (target, window) that
/// saw at least one record. baseline_pkts is filled from the profile
/// override or the trailing benign mean (see estimate_baseline). Output is
/// ordered by (target_id, window_start_ms).
///
/// Throws std::invalid_argument on unsorted input or a dst with no profile.
std::vector<WindowFeatures> window_stream(std::span<const FlowRecord> records,
                                          const TargetMap& profiles,
                                          const Thresholds& t);

/// Explicit per-target override wins; otherwise the mean benign volume of
/// the most recent trailing windows, rounded half away from zero; absent
/// when there is no history.
std::optional<std::int64_t> estimate_baseline(
    std::span<const WindowFeatures> history, const TargetProfile& profile,
    const Thresholds& t);

/// Evaluates C0..C5 for one window. All of C1..C5 are gated on C0, so the
/// result is always consistent. The explanation holds one line per
/// condition with the comparison actually made.
std::pair<ConditionVector, std::vector<std::string>> evaluate_conditions(
    const WindowFeatures& w, std::optional<std::int64_t> baseline,
    const Thresholds& t);

}  // namespace denial
