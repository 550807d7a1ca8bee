#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "denial/flow.hpp"
#include "denial/lattice.hpp"
#include "denial/report.hpp"
#include "denial/scenario.hpp"
#include "denial/selfcheck.hpp"
#include "denial/taxonomy.hpp"

namespace {

using namespace denial;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

Thresholds base_thresholds() {
  if (const char* path = std::getenv("DENIAL_TAXON_CONFIG"))
    return Thresholds::from_json_file(path);
  return Thresholds{};
}

struct ClassifyOptions {
  std::string input;
  std::string targets;
  std::optional<std::int64_t> window_secs;
  std::optional<std::int64_t> packet_limit;
  std::optional<double> fraction;
  std::string format = "text";
  bool lenient = false;
};

int run_classify(const ClassifyOptions& opt) {
  Thresholds t;
  try {
    t = base_thresholds();
    if (opt.window_secs) t.window_secs = *opt.window_secs;
    if (opt.packet_limit) t.low_rate_packet_limit = *opt.packet_limit;
    if (opt.fraction) t.low_rate_fraction = *opt.fraction;
    t.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    ParseStats stats;
    auto flows = parse_flows_file(opt.input, !opt.lenient, &stats);
    auto profiles = load_target_profiles_file(opt.targets);
    auto reports = run_pipeline(flows, profiles, t);
    if (opt.format == "json") {
      for (const auto& r : reports)
        std::cout << report_to_json_line(r) << "\n";
    } else {
      for (const auto& r : reports) std::cout << report_to_text(r) << "\n";
      std::cout << summarize_targets(reports);
      if (stats.skipped > 0)
        std::cout << "(" << stats.skipped << " malformed lines skipped)\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

int run_lattice(const std::string& op, const std::string& a,
                const std::string& b) {
  Lattice lat = Lattice::build();
  try {
    if (op == "export") {
      std::cout << lat.edge_list_text();
      return kExitOk;
    }
    if (op == "export-dot") {
      std::cout << lat.to_dot();
      return kExitOk;
    }
    NodeId na = lat.resolve(a);
    NodeId nb = lat.resolve(b);
    if (op == "meet") {
      std::cout << lat.node(lat.meet(na, nb)).label << "\n";
    } else if (op == "join") {
      std::cout << lat.node(lat.join(na, nb)).label << "\n";
    } else if (op == "leq") {
      std::cout << (lat.leq(na, nb) ? "true" : "false") << "\n";
    } else if (op == "path") {
      auto chain = lat.construction_chain(na, nb);
      std::cout << lat.node(na).label << "\n";
      for (const auto& step : chain.steps)
        std::cout << "  + {" << step.added_conditions.canonical_text()
                  << "} -> " << lat.node(step.node).label << "\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

int run_explain(const std::string& vector_text) {
  ConditionVector v;
  try {
    v = vector_from_names(vector_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  std::cout << "vector: {" << v.canonical_text() << "}\n";
  auto violations = is_consistent(v);
  if (violations.empty()) {
    std::cout << "consistency: OK\n";
  } else {
    for (const auto& viol : violations)
      std::cout << "consistency violation: " << viol.rule << " — "
                << viol.detail << "\n";
  }
  auto result = classify(v);
  std::cout << "outcome: " << to_string(result.outcome) << "\n";
  bool exact = false;
  for (auto cls : result.matched) {
    std::cout << "class: " << to_string(cls) << " — "
              << class_description(cls) << " [requires {"
              << required_conditions(cls).canonical_text() << "}; venn "
              << to_string(venn_region(cls)) << "]\n";
    if (required_conditions(cls) == v) exact = true;
  }
  if (!exact) {
    std::cout << "no exact class for this vector; nearest classes:\n";
    for (const auto& [cls, dist] : Lattice::nearest_classes(v))
      std::cout << "  " << to_string(cls) << " (distance " << dist << ")\n";
  }
  for (const auto& line : result.explanation)
    std::cout << "| " << line << "\n";
  return kExitOk;
}

struct GenerateOptions {
  std::string scenario;
  std::string out_prefix;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> duration;
  std::optional<std::int64_t> attackers;
  std::optional<std::int64_t> malicious_pkts;
  std::optional<std::int64_t> benign_pkts;
  std::string infra = "fixed";
};

int run_generate(const GenerateOptions& opt) {
  auto kind = scenario_from_name(opt.scenario);
  if (!kind) {
    std::cerr << "error: unknown scenario \"" << opt.scenario << "\"\n";
    return kExitUsageError;
  }
  ScenarioSpec spec = ScenarioSpec::preset(*kind, opt.seed);
  if (*kind == ScenarioKind::Custom) {
    if (opt.attackers) spec.attacker_count = *opt.attackers;
    if (opt.malicious_pkts)
      spec.malicious_pkts_per_src_per_window = *opt.malicious_pkts;
    if (opt.benign_pkts) spec.benign_pkts_per_window = *opt.benign_pkts;
    auto infra = infra_from_name(opt.infra);
    if (!infra) {
      std::cerr << "error: unknown infra \"" << opt.infra << "\"\n";
      return kExitUsageError;
    }
    spec.target_infra = *infra;
  }
  if (opt.duration) spec.duration_secs = *opt.duration;
  try {
    spec.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  }
  try {
    write_scenario(generate(spec), opt.out_prefix);
    std::cout << "wrote " << opt.out_prefix << ".flows.jsonl, "
              << opt.out_prefix << ".targets.json, " << opt.out_prefix
              << ".expected\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

int run_check_taxonomy() {
  auto rep = run_self_check();
  std::cout << rep.summary() << "\n";
  return rep.all_ok() ? kExitOk : kExitDataError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"denial-attack condition taxonomy toolkit"};
  app.require_subcommand(1);

  ClassifyOptions copt;
  auto* classify_cmd =
      app.add_subcommand("classify", "classify windowed flow records");
  classify_cmd->add_option("--input", copt.input, "flow file (.jsonl or .csv)")
      ->required();
  classify_cmd->add_option("--targets", copt.targets, "target profile JSON")
      ->required();
  classify_cmd->add_option("--window-secs", copt.window_secs);
  classify_cmd->add_option("--packet-limit", copt.packet_limit);
  classify_cmd->add_option("--fraction", copt.fraction);
  classify_cmd->add_option("--format", copt.format)
      ->check(CLI::IsMember({"text", "json"}));
  auto* lenient = classify_cmd->add_flag("--lenient", copt.lenient,
                                         "skip malformed lines");
  classify_cmd->add_flag("--strict", "abort on malformed lines (default)")
      ->excludes(lenient);

  auto* lattice_cmd =
      app.add_subcommand("lattice", "query the conditional hierarchy");
  std::string lop, la, lb;
  lattice_cmd->add_option("op", lop, "meet|join|leq|path|export|export-dot")
      ->required()
      ->check(CLI::IsMember({"meet", "join", "leq", "path", "export",
                             "export-dot"}));
  lattice_cmd->add_option("a", la, "first node name");
  lattice_cmd->add_option("b", lb, "second node name");

  auto* explain_cmd =
      app.add_subcommand("explain", "classify a condition vector directly");
  std::string vector_text;
  explain_cmd->add_option("--vector", vector_text, "e.g. \"C0,C2,C4,C5\"")
      ->required();

  GenerateOptions gopt;
  auto* generate_cmd =
      app.add_subcommand("generate", "emit a labeled synthetic scenario");
  generate_cmd
      ->add_option("--scenario", gopt.scenario,
                   "syn-flood|mirai|slowloris|ddow-billing|custom")
      ->required();
  generate_cmd->add_option("--out", gopt.out_prefix, "output file prefix")
      ->required();
  generate_cmd->add_option("--seed", gopt.seed);
  generate_cmd->add_option("--duration-secs", gopt.duration);
  generate_cmd->add_option("--attackers", gopt.attackers);
  generate_cmd->add_option("--malicious-pkts", gopt.malicious_pkts,
                           "per attacker per window");
  generate_cmd->add_option("--benign-pkts", gopt.benign_pkts, "per window");
  generate_cmd->add_option("--infra", gopt.infra,
                           "fixed|cloud_scalable|serverless");

  auto* check_cmd = app.add_subcommand(
      "check-taxonomy", "run the embedded self-verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsageError;
  }

  if (classify_cmd->parsed()) return run_classify(copt);
  if (lattice_cmd->parsed()) {
    bool needs_two = lop == "meet" || lop == "join" || lop == "leq" ||
                     lop == "path";
    if (needs_two && (la.empty() || lb.empty())) {
      std::cerr << "error: lattice " << lop << " needs two node names\n";
      return kExitUsageError;
    }
    return run_lattice(lop, la, lb);
  }
  if (explain_cmd->parsed()) return run_explain(vector_text);
  if (generate_cmd->parsed()) return run_generate(gopt);
  if (check_cmd->parsed()) return run_check_taxonomy();
  return kExitUsageError;
}
