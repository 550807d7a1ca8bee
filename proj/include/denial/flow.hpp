#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace denial {

struct FlowRecord {
  std::int64_t ts_ms = 0;
  std::string src;
  std::string dst;
  std::int64_t pkts = 0;
  std::int64_t bytes = 0;
  bool malicious = false;

  friend bool operator==(const FlowRecord&, const FlowRecord&) = default;
};

/// One JSONL line, exact field order matching the wire schema.
std::string to_jsonl(const FlowRecord& r);

enum class InfraKind : std::uint8_t { Fixed, CloudScalable, Serverless };

std::string to_string(InfraKind k);
std::optional<InfraKind> infra_from_name(const std::string& name);

struct TargetProfile {
  std::string target_id;
  InfraKind infra = InfraKind::Fixed;
  std::optional<std::int64_t> baseline_pkts_per_window;
};

using TargetMap = std::map<std::string, TargetProfile>;

enum class FlowFormat : std::uint8_t { Jsonl, Csv };

/// Raised on malformed input; message carries line number and field name.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseStats {
  std::size_t accepted = 0;
  std::size_t skipped = 0;  // lenient mode only
};

/// Reads flow records in file order. Strict mode (default) throws
/// ParseError on the first bad line; lenient mode skips bad lines and
/// counts them in stats.
std::vector<FlowRecord> parse_flows(std::istream& in, FlowFormat format,
                                    bool strict = true,
                                    ParseStats* stats = nullptr);

std::vector<FlowRecord> parse_flows_file(const std::string& path,
                                         bool strict = true,
                                         ParseStats* stats = nullptr);

/// Loads the target-profile JSON object:
///   { "<id>": { "infra": "fixed"|"cloud_scalable"|"serverless",
///               "baseline_pkts_per_window": <int, optional> } }
TargetMap load_target_profiles(std::istream& in);
TargetMap load_target_profiles_file(const std::string& path);

std::string target_profiles_to_json(const TargetMap& profiles);

}  // namespace denial
