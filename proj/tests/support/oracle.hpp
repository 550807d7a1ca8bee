#pragma once

// Brute-force reference oracle for the classifier, written against the
// rules alone. Test-only; shares no code with denial::classify.

#include <cstdint>
#include <vector>

#include "denial/taxonomy.hpp"

namespace oracle {

struct Expect {
  denial::OutcomeKind outcome;
  std::vector<denial::AttackClass> matched;
};

// Class columns, bit i = condition Ci.
inline const std::vector<std::pair<denial::AttackClass, std::uint8_t>>&
class_table() {
  using AC = denial::AttackClass;
  static const std::vector<std::pair<AC, std::uint8_t>> table = {
      {AC::DoS, 0b000011},  {AC::DDoS, 0b000101}, {AC::LDoS, 0b001011},
      {AC::LDDoS, 0b001101}, {AC::EDoS, 0b010001}, {AC::DoW, 0b110011},
      {AC::DDoW, 0b110101},
  };
  return table;
}

inline Expect classify_mask(std::uint8_t v) {
  using K = denial::OutcomeKind;
  if ((v & 1) == 0) return {K::NoAttack, {}};
  if (v == 1) return {K::GenericDenial, {}};
  if (((v >> 1) & 1) && ((v >> 2) & 1)) return {K::Inconsistent, {}};
  if (((v >> 5) & 1) && !((v >> 4) & 1)) return {K::Inconsistent, {}};

  // Every subset-contained class; keep only the largest required sets.
  std::vector<denial::AttackClass> hits;
  int best = -1;
  for (auto [cls, mask] : class_table()) {
    if ((v & mask) != mask) continue;
    int card = __builtin_popcount(static_cast<unsigned>(mask));
    if (card > best) {
      best = card;
      hits.clear();
    }
    if (card == best) hits.push_back(cls);
  }
  if (hits.empty()) return {K::GenericDenial, {}};
  return {hits.size() == 1 ? K::Classified : K::Hybrid, hits};
}

}  // namespace oracle
