#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "denial/conditions.hpp"

namespace denial {

/// The seven named denial-attack classes, in canonical display order.
enum class AttackClass : std::uint8_t {
  DoS = 0,
  DDoS,
  LDoS,
  LDDoS,
  EDoS,
  DoW,
  DDoW,
};

inline constexpr std::array<AttackClass, 7> kAllClasses = {
    AttackClass::DoS,  AttackClass::DDoS, AttackClass::LDoS,
    AttackClass::LDDoS, AttackClass::EDoS, AttackClass::DoW,
    AttackClass::DDoW};

std::string to_string(AttackClass c);
std::optional<AttackClass> attack_class_from_name(const std::string& name);

/// One-line description of what the class is, for explain output.
std::string class_description(AttackClass c);

/// The condition set a class requires (the checkmark matrix, one column
/// per class).
ConditionVector required_conditions(AttackClass c);

enum class VennRegion : std::uint8_t { Availability, Sustainability, Overlap };

std::string to_string(VennRegion r);

/// DoS, DDoS, LDoS, LDDoS sit in the availability hemisphere; DoW and DDoW
/// in sustainability; EDoS straddles both.
VennRegion venn_region(AttackClass c);

enum class OutcomeKind : std::uint8_t {
  NoAttack,
  GenericDenial,
  Classified,
  Hybrid,
  Inconsistent,
};

std::string to_string(OutcomeKind k);

struct ConsistencyViolation {
  std::string rule;     // stable identifier, e.g. "C1-and-C2-exclusive"
  std::string detail;   // human-readable statement
  friend bool operator==(const ConsistencyViolation&,
                         const ConsistencyViolation&) = default;
};

/// Structural sanity rules a raw observation can break:
///   (a) C1 and C2 are mutually exclusive,
///   (b) C5 requires C4,
///   (c) any of C1..C5 requires C0.
/// Returns one descriptor per violated rule; empty means consistent.
std::vector<ConsistencyViolation> is_consistent(const ConditionVector& v);

struct ClassificationResult {
  ConditionVector observed;
  std::vector<AttackClass> matched;  // canonical order
  OutcomeKind outcome = OutcomeKind::NoAttack;
  std::vector<ConsistencyViolation> consistency_violations;
  std::vector<std::string> explanation;
};

/// Applies the class matrix to an observed condition vector.
///
/// No C0 means no attack; bare {C0} is a generic denial with no class;
/// inconsistent vectors are reported as such. Otherwise candidates are the
/// classes whose required set is contained in the observation, and the
/// maximal-cardinality candidates win (single winner -> Classified, tie ->
/// Hybrid). A consistent vector beyond {C0} that contains no class at all
/// falls back to GenericDenial with the surplus conditions noted.
ClassificationResult classify(const ConditionVector& v);

}  // namespace denial
