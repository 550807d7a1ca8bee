#include "denial/flow.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace denial {

using nlohmann::json;

std::string to_jsonl(const FlowRecord& r) {
  // Field order is part of the wire contract; build by hand so dumps are
  // byte-stable.
  std::string out = "{\"ts_ms\":" + std::to_string(r.ts_ms) +
                    ",\"src\":" + json(r.src).dump() +
                    ",\"dst\":" + json(r.dst).dump() +
                    ",\"pkts\":" + std::to_string(r.pkts) +
                    ",\"bytes\":" + std::to_string(r.bytes) +
                    ",\"malicious\":" + (r.malicious ? "true" : "false") + "}";
  return out;
}

std::string to_string(InfraKind k) {
  switch (k) {
    case InfraKind::Fixed: return "fixed";
    case InfraKind::CloudScalable: return "cloud_scalable";
    case InfraKind::Serverless: return "serverless";
  }
  return "?";
}

std::optional<InfraKind> infra_from_name(const std::string& name) {
  if (name == "fixed") return InfraKind::Fixed;
  if (name == "cloud_scalable") return InfraKind::CloudScalable;
  if (name == "serverless") return InfraKind::Serverless;
  return std::nullopt;
}

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

void check_invariants(const FlowRecord& r, std::size_t line_no) {
  if (r.ts_ms < 0) fail(line_no, "field ts_ms: negative");
  if (r.pkts < 0) fail(line_no, "field pkts: negative");
  if (r.bytes < 0) fail(line_no, "field bytes: negative");
  if (r.src.empty()) fail(line_no, "field src: empty");
  if (r.dst.empty()) fail(line_no, "field dst: empty");
}

FlowRecord parse_jsonl_line(const std::string& line, std::size_t line_no) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    fail(line_no, std::string("invalid JSON: ") + e.what());
  }
  FlowRecord r;
  try {
    r.ts_ms = j.at("ts_ms").get<std::int64_t>();
    r.src = j.at("src").get<std::string>();
    r.dst = j.at("dst").get<std::string>();
    r.pkts = j.at("pkts").get<std::int64_t>();
    r.bytes = j.at("bytes").get<std::int64_t>();
    r.malicious = j.at("malicious").get<bool>();
  } catch (const json::exception& e) {
    fail(line_no, std::string("bad field: ") + e.what());
  }
  check_invariants(r, line_no);
  return r;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

std::int64_t parse_int_field(const std::string& cell, const char* field,
                             std::size_t line_no, bool allow_negative) {
  std::int64_t v = 0;
  std::size_t pos = 0;
  try {
    v = std::stoll(cell, &pos);
  } catch (const std::exception&) {
    fail(line_no, std::string("field ") + field + ": not an integer");
  }
  if (pos != cell.size())
    fail(line_no, std::string("field ") + field + ": trailing characters");
  if (!allow_negative && v < 0)
    fail(line_no, std::string("field ") + field + ": negative");
  return v;
}

FlowRecord parse_csv_line(const std::string& line, std::size_t line_no) {
  auto cells = split_csv(line);
  if (cells.size() != 6)
    fail(line_no, "expected 6 columns, got " + std::to_string(cells.size()));
  FlowRecord r;
  r.ts_ms = parse_int_field(cells[0], "ts_ms", line_no, false);
  r.src = cells[1];
  r.dst = cells[2];
  r.pkts = parse_int_field(cells[3], "pkts", line_no, false);
  r.bytes = parse_int_field(cells[4], "bytes", line_no, false);
  if (cells[5] == "true")
    r.malicious = true;
  else if (cells[5] == "false")
    r.malicious = false;
  else
    fail(line_no, "field malicious: expected \"true\" or \"false\"");
  check_invariants(r, line_no);
  return r;
}

}  // namespace

std::vector<FlowRecord> parse_flows(std::istream& in, FlowFormat format,
                                    bool strict, ParseStats* stats) {
  std::vector<FlowRecord> out;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (format == FlowFormat::Csv && !saw_header) {
      saw_header = true;
      if (line != "ts_ms,src,dst,pkts,bytes,malicious")
        fail(line_no, "unexpected CSV header \"" + line + "\"");
      continue;
    }
    try {
      out.push_back(format == FlowFormat::Jsonl
                        ? parse_jsonl_line(line, line_no)
                        : parse_csv_line(line, line_no));
      if (stats) ++stats->accepted;
    } catch (const ParseError&) {
      if (strict) throw;
      if (stats) ++stats->skipped;
    }
  }
  return out;
}

std::vector<FlowRecord> parse_flows_file(const std::string& path, bool strict,
                                         ParseStats* stats) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open flow file: " + path);
  FlowFormat fmt = path.size() >= 4 && path.substr(path.size() - 4) == ".csv"
                       ? FlowFormat::Csv
                       : FlowFormat::Jsonl;
  return parse_flows(in, fmt, strict, stats);
}

TargetMap load_target_profiles(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("target profiles: invalid JSON: ") +
                     e.what());
  }
  if (!j.is_object())
    throw ParseError("target profiles: top level must be a JSON object");
  TargetMap out;
  for (auto& [id, val] : j.items()) {
    if (out.count(id))
      throw ParseError("target profiles: duplicate target_id \"" + id + "\"");
    TargetProfile p;
    p.target_id = id;
    std::string infra_name;
    try {
      infra_name = val.at("infra").get<std::string>();
    } catch (const json::exception& e) {
      throw ParseError("target profiles: target \"" + id +
                       "\": " + e.what());
    }
    auto infra = infra_from_name(infra_name);
    if (!infra)
      throw ParseError("target profiles: target \"" + id +
                       "\": unknown infra \"" + infra_name + "\"");
    p.infra = *infra;
    if (val.contains("baseline_pkts_per_window")) {
      auto b = val.at("baseline_pkts_per_window").get<std::int64_t>();
      if (b < 0)
        throw ParseError("target profiles: target \"" + id +
                         "\": negative baseline");
      p.baseline_pkts_per_window = b;
    }
    out.emplace(id, std::move(p));
  }
  return out;
}

TargetMap load_target_profiles_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open target profile file: " + path);
  return load_target_profiles(in);
}

std::string target_profiles_to_json(const TargetMap& profiles) {
  json j = json::object();
  for (const auto& [id, p] : profiles) {
    json entry;
    entry["infra"] = to_string(p.infra);
    if (p.baseline_pkts_per_window)
      entry["baseline_pkts_per_window"] = *p.baseline_pkts_per_window;
    j[id] = entry;
  }
  return j.dump(2) + "\n";
}

}  // namespace denial
