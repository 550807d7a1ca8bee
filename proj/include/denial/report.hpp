#pragma once

#include <string>
#include <vector>

#include "denial/features.hpp"
#include "denial/lattice.hpp"
#include "denial/taxonomy.hpp"

namespace denial {

/// One classified (target, window) pair, ready for rendering.
struct WindowReport {
  std::string target;
  std::int64_t window_start_ms = 0;
  std::int64_t window_end_ms = 0;
  WindowFeatures features;
  ClassificationResult result;
  std::vector<std::string> venn;  // region per matched class
  std::vector<std::pair<AttackClass, int>> nearest;  // filled when unmatched
  std::vector<std::string> explanation;  // condition eval + matching steps
};

WindowReport build_window_report(const WindowFeatures& w,
                                 const Thresholds& t);

/// Full pipeline: window the records, evaluate each window, classify.
/// Reports come back ordered by (target, window_start_ms).
std::vector<WindowReport> run_pipeline(std::span<const FlowRecord> records,
                                       const TargetMap& profiles,
                                       const Thresholds& t);

/// One JSON object per report with keys: target, window_start_ms,
/// window_end_ms, conditions, outcome, classes, venn, nearest, explanation.
std::string report_to_json_line(const WindowReport& r);

std::string report_to_text(const WindowReport& r);

/// Per-target majority class across attack-bearing windows.
std::string summarize_targets(std::span<const WindowReport> reports);

}  // namespace denial
