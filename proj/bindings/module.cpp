#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "denial/flow.hpp"
#include "denial/lattice.hpp"
#include "denial/report.hpp"
#include "denial/scenario.hpp"
#include "denial/selfcheck.hpp"
#include "denial/taxonomy.hpp"

namespace py = pybind11;
using namespace denial;

namespace {

py::dict result_to_dict(const ClassificationResult& r) {
  py::dict d;
  d["conditions"] = r.observed.canonical_text();
  d["outcome"] = to_string(r.outcome);
  py::list classes;
  for (auto cls : r.matched) classes.append(to_string(cls));
  d["classes"] = classes;
  py::list violations;
  for (const auto& v : r.consistency_violations) violations.append(v.rule);
  d["violations"] = violations;
  d["explanation"] = r.explanation;
  return d;
}

}  // namespace

PYBIND11_MODULE(_denial_taxonomy, m) {
  m.doc() = "condition-based denial-attack classification engine";

  m.def("classify", [](const std::string& vector_text) {
    return result_to_dict(classify(vector_from_names(vector_text)));
  }, py::arg("conditions"),
     "Classify a condition vector given as text, e.g. \"C0,C2,C4,C5\".");

  m.def("required_conditions", [](const std::string& class_name) {
    auto cls = attack_class_from_name(class_name);
    if (!cls) throw py::value_error("unknown attack class: " + class_name);
    return required_conditions(*cls).canonical_text();
  }, py::arg("attack_class"));

  m.def("is_consistent", [](const std::string& vector_text) {
    std::vector<std::string> rules;
    for (const auto& v : is_consistent(vector_from_names(vector_text)))
      rules.push_back(v.rule);
    return rules;
  }, py::arg("conditions"), "Violated rule names; empty when consistent.");

  m.def("venn_region", [](const std::string& class_name) {
    auto cls = attack_class_from_name(class_name);
    if (!cls) throw py::value_error("unknown attack class: " + class_name);
    return to_string(venn_region(*cls));
  }, py::arg("attack_class"));

  m.def("nearest_classes", [](const std::string& vector_text) {
    std::vector<std::pair<std::string, int>> out;
    for (auto [cls, dist] :
         Lattice::nearest_classes(vector_from_names(vector_text)))
      out.emplace_back(to_string(cls), dist);
    return out;
  }, py::arg("conditions"));

  m.def("lattice_meet", [](const std::string& a, const std::string& b) {
    Lattice lat = Lattice::build();
    return lat.node(lat.meet(lat.resolve(a), lat.resolve(b))).label;
  });
  m.def("lattice_join", [](const std::string& a, const std::string& b) {
    Lattice lat = Lattice::build();
    return lat.node(lat.join(lat.resolve(a), lat.resolve(b))).label;
  });
  m.def("lattice_leq", [](const std::string& a, const std::string& b) {
    Lattice lat = Lattice::build();
    return lat.leq(lat.resolve(a), lat.resolve(b));
  });
  m.def("lattice_path", [](const std::string& from, const std::string& to) {
    Lattice lat = Lattice::build();
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& step :
         lat.construction_chain(lat.resolve(from), lat.resolve(to)).steps)
      out.emplace_back(lat.node(step.node).label,
                       step.added_conditions.canonical_text());
    return out;
  });
  m.def("lattice_edges", []() {
    Lattice lat = Lattice::build();
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [child, parent] : lat.covers())
      out.emplace_back(lat.node(child).label, lat.node(parent).label);
    return out;
  });
  m.def("lattice_dot", []() { return Lattice::build().to_dot(); });

  m.def("classify_flows", [](const std::string& flows_jsonl,
                             const std::string& targets_json,
                             std::int64_t window_secs,
                             std::int64_t packet_limit, double fraction) {
    Thresholds t;
    t.window_secs = window_secs;
    t.low_rate_packet_limit = packet_limit;
    t.low_rate_fraction = fraction;
    t.validate();
    std::istringstream flows_in(flows_jsonl);
    auto flows = parse_flows(flows_in, FlowFormat::Jsonl);
    std::istringstream targets_in(targets_json);
    auto profiles = load_target_profiles(targets_in);
    py::list out;
    for (const auto& rep : run_pipeline(flows, profiles, t)) {
      py::dict d = result_to_dict(rep.result);
      d["target"] = rep.target;
      d["window_start_ms"] = rep.window_start_ms;
      d["window_end_ms"] = rep.window_end_ms;
      out.append(d);
    }
    return out;
  }, py::arg("flows_jsonl"), py::arg("targets_json"),
     py::arg("window_secs") = 60, py::arg("packet_limit") = 1000,
     py::arg("fraction") = 0.20,
     "Run the full windowing/classification pipeline over JSONL text.");

  m.def("generate_scenario", [](const std::string& name, std::uint64_t seed) {
    auto kind = scenario_from_name(name);
    if (!kind) throw py::value_error("unknown scenario: " + name);
    auto gen = generate(ScenarioSpec::preset(*kind, seed));
    std::string flows;
    for (const auto& r : gen.flows) flows += to_jsonl(r) + "\n";
    py::dict d;
    d["flows_jsonl"] = flows;
    d["targets_json"] = target_profiles_to_json(gen.profiles);
    d["expected"] = gen.expected ? to_string(*gen.expected) : std::string();
    return d;
  }, py::arg("name"), py::arg("seed") = 0);

  m.def("self_check", []() {
    auto rep = run_self_check();
    py::dict d;
    d["ok"] = rep.all_ok();
    d["summary"] = rep.summary();
    return d;
  });
}
