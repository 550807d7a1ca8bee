#include "denial/report.hpp"

#include <map>

#include "json.hpp"

namespace denial {

using nlohmann::json;

WindowReport build_window_report(const WindowFeatures& w,
                                 const Thresholds& t) {
  WindowReport rep;
  rep.target = w.target_id;
  rep.window_start_ms = w.window_start_ms;
  rep.window_end_ms = w.window_end_ms;
  rep.features = w;

  auto [vec, cond_lines] = evaluate_conditions(w, w.baseline_pkts, t);
  rep.result = classify(vec);
  rep.explanation = cond_lines;
  rep.explanation.insert(rep.explanation.end(),
                         rep.result.explanation.begin(),
                         rep.result.explanation.end());
  for (auto cls : rep.result.matched)
    rep.venn.push_back(to_string(venn_region(cls)));
  if (rep.result.matched.empty() &&
      rep.result.outcome != OutcomeKind::NoAttack)
    rep.nearest = Lattice::nearest_classes(vec);
  return rep;
}

std::vector<WindowReport> run_pipeline(std::span<const FlowRecord> records,
                                       const TargetMap& profiles,
                                       const Thresholds& t) {
  std::vector<WindowReport> out;
  for (const auto& w : window_stream(records, profiles, t))
    out.push_back(build_window_report(w, t));
  return out;
}

std::string report_to_json_line(const WindowReport& r) {
  json j;
  j["target"] = r.target;
  j["window_start_ms"] = r.window_start_ms;
  j["window_end_ms"] = r.window_end_ms;
  j["conditions"] = r.result.observed.canonical_text();
  j["outcome"] = to_string(r.result.outcome);
  json classes = json::array();
  for (auto cls : r.result.matched) classes.push_back(to_string(cls));
  j["classes"] = classes;
  j["venn"] = r.venn;
  json nearest = json::array();
  for (const auto& [cls, dist] : r.nearest)
    nearest.push_back({{"class", to_string(cls)}, {"distance", dist}});
  j["nearest"] = nearest;
  j["explanation"] = r.explanation;
  // Fixed key order so identical runs emit identical bytes.
  std::string out = "{\"target\":" + j["target"].dump() +
                    ",\"window_start_ms\":" + j["window_start_ms"].dump() +
                    ",\"window_end_ms\":" + j["window_end_ms"].dump() +
                    ",\"conditions\":" + j["conditions"].dump() +
                    ",\"outcome\":" + j["outcome"].dump() +
                    ",\"classes\":" + j["classes"].dump() +
                    ",\"venn\":" + j["venn"].dump() +
                    ",\"nearest\":" + j["nearest"].dump() +
                    ",\"explanation\":" + j["explanation"].dump() + "}";
  return out;
}

std::string report_to_text(const WindowReport& r) {
  std::string out;
  out += "window " + r.target + " [" + std::to_string(r.window_start_ms) +
         ", " + std::to_string(r.window_end_ms) + ")\n";
  out += "  conditions: {" + r.result.observed.canonical_text() + "}\n";
  out += "  outcome: " + to_string(r.result.outcome);
  if (!r.result.matched.empty()) {
    out += " ->";
    for (std::size_t i = 0; i < r.result.matched.size(); ++i)
      out += " " + to_string(r.result.matched[i]) + " (" + r.venn[i] + ")";
  }
  out += "\n";
  if (!r.nearest.empty()) {
    out += "  nearest:";
    for (const auto& [cls, dist] : r.nearest)
      out += " " + to_string(cls) + "(" + std::to_string(dist) + ")";
    out += "\n";
  }
  for (const auto& line : r.explanation) out += "  | " + line + "\n";
  return out;
}

std::string summarize_targets(std::span<const WindowReport> reports) {
  struct Tally {
    std::map<std::string, int> class_counts;
    int attack_windows = 0;
    int total_windows = 0;
  };
  std::map<std::string, Tally> per_target;
  for (const auto& r : reports) {
    auto& t = per_target[r.target];
    ++t.total_windows;
    if (r.result.outcome == OutcomeKind::NoAttack) continue;
    ++t.attack_windows;
    for (auto cls : r.result.matched) ++t.class_counts[to_string(cls)];
  }

  std::string out;
  for (const auto& [target, t] : per_target) {
    out += "target " + target + ": " + std::to_string(t.attack_windows) +
           "/" + std::to_string(t.total_windows) + " attack windows";
    std::string majority;
    int best = 0;
    for (const auto& [name, count] : t.class_counts)
      if (count > best) {
        best = count;
        majority = name;
      }
    if (!majority.empty())
      out += ", majority class " + majority + " (" + std::to_string(best) +
             " windows)";
    out += "\n";
  }
  return out;
}

}  // namespace denial
