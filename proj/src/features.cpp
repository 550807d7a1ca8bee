#include "denial/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace denial {

void Thresholds::validate() const {
  if (low_rate_packet_limit <= 0)
    throw std::invalid_argument("low_rate_packet_limit must be positive");
  if (!(low_rate_fraction > 0.0 && low_rate_fraction <= 1.0))
    throw std::invalid_argument("low_rate_fraction must be in (0, 1]");
  if (window_secs <= 0)
    throw std::invalid_argument("window_secs must be positive");
  if (baseline_trailing_windows <= 0)
    throw std::invalid_argument("baseline_trailing_windows must be positive");
}

Thresholds Thresholds::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open thresholds config: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  Thresholds t;
  if (j.contains("low_rate_packet_limit"))
    t.low_rate_packet_limit = j["low_rate_packet_limit"].get<std::int64_t>();
  if (j.contains("low_rate_fraction"))
    t.low_rate_fraction = j["low_rate_fraction"].get<double>();
  if (j.contains("window_secs"))
    t.window_secs = j["window_secs"].get<std::int64_t>();
  if (j.contains("baseline_trailing_windows"))
    t.baseline_trailing_windows =
        j["baseline_trailing_windows"].get<std::int64_t>();
  t.validate();
  return t;
}

std::vector<WindowFeatures> window_stream(std::span<const FlowRecord> records,
                                          const TargetMap& profiles,
                                          const Thresholds& t) {
  t.validate();
  const std::int64_t win_ms = t.window_secs * 1000;

  struct Bucket {
    WindowFeatures features;
    std::set<std::string> malicious_sources;
  };
  // (target, window_start) -> bucket; map keeps the output order.
  std::map<std::pair<std::string, std::int64_t>, Bucket> buckets;

  std::int64_t prev_ts = -1;
  for (const auto& r : records) {
    if (r.ts_ms < prev_ts)
      throw std::invalid_argument(
          "flow records not sorted by ts_ms (saw " + std::to_string(r.ts_ms) +
          " after " + std::to_string(prev_ts) + ")");
    prev_ts = r.ts_ms;

    auto prof = profiles.find(r.dst);
    if (prof == profiles.end())
      throw std::invalid_argument("no target profile for dst \"" + r.dst +
                                  "\"");

    std::int64_t start = (r.ts_ms / win_ms) * win_ms;
    auto& bucket = buckets[{r.dst, start}];
    auto& w = bucket.features;
    if (w.target_id.empty()) {
      w.target_id = r.dst;
      w.window_start_ms = start;
      w.window_end_ms = start + win_ms;
      w.infra = prof->second.infra;
    }
    if (r.malicious) {
      w.malicious_pkts += r.pkts;
      bucket.malicious_sources.insert(r.src);
    } else {
      w.benign_pkts += r.pkts;
    }
  }

  std::vector<WindowFeatures> out;
  out.reserve(buckets.size());
  std::vector<WindowFeatures> history;  // per current target, time order
  std::string cur_target;
  for (auto& [key, bucket] : buckets) {
    auto& w = bucket.features;
    w.distinct_malicious_sources =
        static_cast<std::int64_t>(bucket.malicious_sources.size());
    if (key.first != cur_target) {
      cur_target = key.first;
      history.clear();
    }
    w.baseline_pkts =
        estimate_baseline(history, profiles.at(key.first), t);
    history.push_back(w);
    out.push_back(w);
  }
  return out;
}

std::optional<std::int64_t> estimate_baseline(
    std::span<const WindowFeatures> history, const TargetProfile& profile,
    const Thresholds& t) {
  if (profile.baseline_pkts_per_window) return profile.baseline_pkts_per_window;
  if (history.empty()) return std::nullopt;
  std::size_t n = std::min<std::size_t>(
      history.size(), static_cast<std::size_t>(t.baseline_trailing_windows));
  double sum = 0;
  for (std::size_t i = history.size() - n; i < history.size(); ++i)
    sum += static_cast<double>(history[i].benign_pkts);
  return std::llround(sum / static_cast<double>(n));
}

std::pair<ConditionVector, std::vector<std::string>> evaluate_conditions(
    const WindowFeatures& w, std::optional<std::int64_t> baseline,
    const Thresholds& t) {
  using Cid = ConditionId;
  ConditionVector v;
  std::vector<std::string> lines;

  bool c0 = w.malicious_pkts > 0;
  lines.push_back("C0: malicious_pkts " + std::to_string(w.malicious_pkts) +
                  " > 0 -> " + (c0 ? "true" : "false"));
  if (c0) v.insert(Cid::C0);

  bool c1 = c0 && w.distinct_malicious_sources == 1;
  lines.push_back("C1: distinct_malicious_sources " +
                  std::to_string(w.distinct_malicious_sources) + " == 1 -> " +
                  (c1 ? "true" : "false"));
  if (c1) v.insert(Cid::C1);

  bool c2 = c0 && w.distinct_malicious_sources > 1;
  lines.push_back("C2: distinct_malicious_sources " +
                  std::to_string(w.distinct_malicious_sources) + " > 1 -> " +
                  (c2 ? "true" : "false"));
  if (c2) v.insert(Cid::C2);

  bool below_limit = w.malicious_pkts < t.low_rate_packet_limit;
  bool below_fraction = false;
  std::string frac_note = "no baseline, fraction branch skipped";
  if (baseline && *baseline > 0) {
    double frac = static_cast<double>(w.malicious_pkts) /
                  static_cast<double>(*baseline);
    below_fraction = frac <= t.low_rate_fraction;
    frac_note = "fraction " + std::to_string(w.malicious_pkts) + "/" +
                std::to_string(*baseline) + " <= " +
                std::to_string(t.low_rate_fraction) + " -> " +
                (below_fraction ? "true" : "false");
  }
  bool c3 = c0 && (below_limit || below_fraction);
  lines.push_back("C3: malicious_pkts " + std::to_string(w.malicious_pkts) +
                  " < " + std::to_string(t.low_rate_packet_limit) + " -> " +
                  (below_limit ? "true" : "false") + "; " + frac_note);
  if (c3) v.insert(Cid::C3);

  bool cloud = w.infra == InfraKind::CloudScalable ||
               w.infra == InfraKind::Serverless;
  bool c4 = c0 && cloud;
  lines.push_back("C4: infra " + to_string(w.infra) +
                  " is cloud-scalable -> " + (c4 ? "true" : "false"));
  if (c4) v.insert(Cid::C4);

  bool c5 = c0 && w.infra == InfraKind::Serverless;
  lines.push_back("C5: infra " + to_string(w.infra) + " is serverless -> " +
                  (c5 ? "true" : "false"));
  if (c5) v.insert(Cid::C5);

  return {v, lines};
}

}  // namespace denial
