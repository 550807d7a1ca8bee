#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace denial {

/// The six observable predicates a traffic window either satisfies or not.
enum class ConditionId : std::uint8_t {
  C0 = 0,  // malicious traffic present
  C1 = 1,  // single malicious source
  C2 = 2,  // multiple malicious sources
  C3 = 3,  // low-rate volume
  C4 = 4,  // targets scalable cloud infrastructure
  C5 = 5,  // targets serverless infrastructure
};

inline constexpr std::array<ConditionId, 6> kAllConditions = {
    ConditionId::C0, ConditionId::C1, ConditionId::C2,
    ConditionId::C3, ConditionId::C4, ConditionId::C5};

std::string to_string(ConditionId c);

/// A set of conditions, any of the 64 combinations. Consistency is a
/// separate check (see taxonomy.hpp); raw observations may be contradictory.
class ConditionVector {
 public:
  ConditionVector() = default;
  explicit ConditionVector(std::initializer_list<ConditionId> ids) {
    for (auto id : ids) insert(id);
  }

  static ConditionVector from_mask(std::uint8_t mask) {
    ConditionVector v;
    v.bits_ = mask & 0x3f;
    return v;
  }

  void insert(ConditionId c) { bits_ |= bit(c); }
  void erase(ConditionId c) { bits_ &= ~bit(c); }
  bool contains(ConditionId c) const { return (bits_ & bit(c)) != 0; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  std::uint8_t mask() const { return bits_; }

  bool is_subset_of(const ConditionVector& other) const {
    return (bits_ & other.bits_) == bits_;
  }
  bool is_superset_of(const ConditionVector& other) const {
    return other.is_subset_of(*this);
  }

  ConditionVector intersect(const ConditionVector& other) const {
    return from_mask(bits_ & other.bits_);
  }
  ConditionVector unite(const ConditionVector& other) const {
    return from_mask(bits_ | other.bits_);
  }
  ConditionVector difference(const ConditionVector& other) const {
    return from_mask(bits_ & ~other.bits_);
  }

  int hamming_distance(const ConditionVector& other) const {
    return __builtin_popcount(bits_ ^ other.bits_);
  }

  std::vector<ConditionId> members() const;

  /// Sorted comma-joined list, e.g. "C0,C2,C4,C5". Empty set renders as "".
  std::string canonical_text() const;

  friend bool operator==(const ConditionVector&, const ConditionVector&) = default;

 private:
  static constexpr std::uint8_t bit(ConditionId c) {
    return static_cast<std::uint8_t>(1u << static_cast<std::uint8_t>(c));
  }
  std::uint8_t bits_ = 0;
};

/// Parses "C0,C2"-style text; case-insensitive, whitespace-tolerant,
/// duplicates collapse. Throws std::invalid_argument naming the bad token.
ConditionVector vector_from_names(const std::string& text);

}  // namespace denial
