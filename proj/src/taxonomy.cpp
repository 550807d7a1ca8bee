#include "denial/taxonomy.hpp"

#include <algorithm>

namespace denial {

using C = ConditionId;

std::string to_string(AttackClass c) {
  switch (c) {
    case AttackClass::DoS: return "DoS";
    case AttackClass::DDoS: return "DDoS";
    case AttackClass::LDoS: return "LDoS";
    case AttackClass::LDDoS: return "LDDoS";
    case AttackClass::EDoS: return "EDoS";
    case AttackClass::DoW: return "DoW";
    case AttackClass::DDoW: return "DDoW";
  }
  return "?";
}

std::optional<AttackClass> attack_class_from_name(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  for (auto c : kAllClasses) {
    std::string s = to_string(c);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    if (s == lower) return c;
  }
  return std::nullopt;
}

std::string class_description(AttackClass c) {
  switch (c) {
    case AttackClass::DoS:
      return "single-source denial of service";
    case AttackClass::DDoS:
      return "multi-source (distributed) denial of service";
    case AttackClass::LDoS:
      return "single-source low-rate denial of service";
    case AttackClass::LDDoS:
      return "multi-source low-rate denial of service";
    case AttackClass::EDoS:
      return "economic denial of sustainability against scalable cloud "
             "infrastructure";
    case AttackClass::DoW:
      return "single-source denial of wallet against serverless "
             "infrastructure";
    case AttackClass::DDoW:
      return "multi-source denial of wallet against serverless "
             "infrastructure";
  }
  return "?";
}

ConditionVector required_conditions(AttackClass c) {
  switch (c) {
    case AttackClass::DoS: return ConditionVector{C::C0, C::C1};
    case AttackClass::DDoS: return ConditionVector{C::C0, C::C2};
    case AttackClass::LDoS: return ConditionVector{C::C0, C::C1, C::C3};
    case AttackClass::LDDoS: return ConditionVector{C::C0, C::C2, C::C3};
    case AttackClass::EDoS: return ConditionVector{C::C0, C::C4};
    case AttackClass::DoW: return ConditionVector{C::C0, C::C1, C::C4, C::C5};
    case AttackClass::DDoW: return ConditionVector{C::C0, C::C2, C::C4, C::C5};
  }
  return {};
}

std::string to_string(VennRegion r) {
  switch (r) {
    case VennRegion::Availability: return "Availability";
    case VennRegion::Sustainability: return "Sustainability";
    case VennRegion::Overlap: return "Overlap";
  }
  return "?";
}

VennRegion venn_region(AttackClass c) {
  switch (c) {
    case AttackClass::DoS:
    case AttackClass::DDoS:
    case AttackClass::LDoS:
    case AttackClass::LDDoS:
      return VennRegion::Availability;
    case AttackClass::DoW:
    case AttackClass::DDoW:
      return VennRegion::Sustainability;
    case AttackClass::EDoS:
      return VennRegion::Overlap;
  }
  return VennRegion::Availability;
}

std::string to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::NoAttack: return "NoAttack";
    case OutcomeKind::GenericDenial: return "GenericDenial";
    case OutcomeKind::Classified: return "Classified";
    case OutcomeKind::Hybrid: return "Hybrid";
    case OutcomeKind::Inconsistent: return "Inconsistent";
  }
  return "?";
}

std::vector<ConsistencyViolation> is_consistent(const ConditionVector& v) {
  std::vector<ConsistencyViolation> out;
  if (v.contains(C::C1) && v.contains(C::C2)) {
    out.push_back({"C1-and-C2-exclusive",
                   "a request stream cannot be both single-source (C1) and "
                   "multi-source (C2)"});
  }
  if (v.contains(C::C5) && !v.contains(C::C4)) {
    out.push_back({"C5-requires-C4",
                   "serverless targets (C5) are scalable cloud "
                   "infrastructure, so C4 must also hold"});
  }
  bool any_refinement = v.contains(C::C1) || v.contains(C::C2) ||
                        v.contains(C::C3) || v.contains(C::C4) ||
                        v.contains(C::C5);
  if (any_refinement && !v.contains(C::C0)) {
    out.push_back({"refinement-requires-C0",
                   "conditions C1..C5 refine an attack, so C0 (malicious "
                   "traffic present) must hold"});
  }
  return out;
}

ClassificationResult classify(const ConditionVector& v) {
  ClassificationResult r;
  r.observed = v;

  if (!v.contains(C::C0)) {
    r.outcome = OutcomeKind::NoAttack;
    r.explanation.push_back("C0 absent: no malicious traffic, no attack");
    return r;
  }
  if (v == ConditionVector{C::C0}) {
    r.outcome = OutcomeKind::GenericDenial;
    r.explanation.push_back(
        "only C0 holds: a denial attack exists but no refining condition "
        "selects a class");
    return r;
  }
  r.consistency_violations = is_consistent(v);
  if (!r.consistency_violations.empty()) {
    r.outcome = OutcomeKind::Inconsistent;
    for (const auto& viol : r.consistency_violations)
      r.explanation.push_back("violation: " + viol.rule + " (" + viol.detail +
                              ")");
    return r;
  }

  int best = 0;
  std::vector<AttackClass> candidates;
  for (auto cls : kAllClasses) {
    ConditionVector req = required_conditions(cls);
    if (!req.is_subset_of(v)) continue;
    r.explanation.push_back("candidate " + to_string(cls) + ": requires {" +
                            req.canonical_text() + "}, all satisfied");
    if (req.size() > best) {
      best = req.size();
      candidates.clear();
    }
    if (req.size() == best) candidates.push_back(cls);
  }

  if (candidates.empty()) {
    // Consistent surplus conditions (e.g. {C0,C3}) that no class covers.
    r.outcome = OutcomeKind::GenericDenial;
    r.explanation.push_back(
        "no class's required conditions are contained in {" +
        v.canonical_text() +
        "}; surplus conditions beyond C0 match no known class");
    return r;
  }

  r.matched = candidates;  // built in canonical order already
  r.outcome = candidates.size() == 1 ? OutcomeKind::Classified
                                     : OutcomeKind::Hybrid;
  std::string names;
  for (auto cls : candidates) {
    if (!names.empty()) names += ", ";
    names += to_string(cls);
  }
  r.explanation.push_back("maximal-cardinality match (" +
                          std::to_string(best) + " conditions): " + names);
  return r;
}

}  // namespace denial
