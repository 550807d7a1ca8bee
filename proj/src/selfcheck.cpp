#include "denial/selfcheck.hpp"

#include <cstdint>
#include <vector>

#include "denial/lattice.hpp"
#include "denial/taxonomy.hpp"

namespace denial {

namespace {

// Independent re-statement of the class matrix as raw bitmasks
// (bit i = condition Ci). Deliberately kept separate from
// required_conditions() so the two can disagree if either is edited.
struct ClassRow {
  AttackClass cls;
  std::uint8_t mask;
};
constexpr ClassRow kMatrix[] = {
    {AttackClass::DoS, 0b000011},  {AttackClass::DDoS, 0b000101},
    {AttackClass::LDoS, 0b001011}, {AttackClass::LDDoS, 0b001101},
    {AttackClass::EDoS, 0b010001}, {AttackClass::DoW, 0b110011},
    {AttackClass::DDoW, 0b110101},
};

struct RefOutcome {
  OutcomeKind kind;
  std::vector<AttackClass> matched;
};

// Second matching implementation, straight off the rules: C0 gate, bare-C0
// generic, consistency screen, then subset filter and max-cardinality pick.
RefOutcome reference_match(std::uint8_t v) {
  constexpr std::uint8_t c0 = 1, c1 = 2, c2 = 4, c4 = 16, c5 = 32;
  if (!(v & c0)) return {OutcomeKind::NoAttack, {}};
  if (v == c0) return {OutcomeKind::GenericDenial, {}};
  bool bad = ((v & c1) && (v & c2)) || ((v & c5) && !(v & c4));
  if (bad) return {OutcomeKind::Inconsistent, {}};

  int best = 0;
  std::vector<AttackClass> picked;
  for (const auto& row : kMatrix) {
    if ((row.mask & v) != row.mask) continue;
    int card = __builtin_popcount(row.mask);
    if (card > best) {
      best = card;
      picked.clear();
    }
    if (card == best) picked.push_back(row.cls);
  }
  if (picked.empty()) return {OutcomeKind::GenericDenial, {}};
  return {picked.size() == 1 ? OutcomeKind::Classified : OutcomeKind::Hybrid,
          picked};
}

}  // namespace

std::string SelfCheckReport::summary() const {
  return std::to_string(roundtrips_ok) + "/7 class round-trips OK; " +
         std::to_string(vectors_ok) + "/64 vectors OK; " +
         std::to_string(pairs_ok) + "/121 pairs have meet and join";
}

SelfCheckReport run_self_check() {
  SelfCheckReport rep;

  for (const auto& row : kMatrix) {
    auto r = classify(ConditionVector::from_mask(row.mask));
    if (r.outcome == OutcomeKind::Classified && r.matched.size() == 1 &&
        r.matched[0] == row.cls)
      ++rep.roundtrips_ok;
  }

  for (std::uint8_t mask = 0; mask < 64; ++mask) {
    auto got = classify(ConditionVector::from_mask(mask));
    auto want = reference_match(mask);
    if (got.outcome == want.kind && got.matched == want.matched)
      ++rep.vectors_ok;
  }

  try {
    Lattice lat = Lattice::build();
    const int n = static_cast<int>(lat.nodes().size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        lat.meet(a, b);
        lat.join(a, b);
        ++rep.pairs_ok;
      }
  } catch (const std::exception&) {
    // counted pairs stop at the failure point
  }

  return rep;
}

}  // namespace denial
