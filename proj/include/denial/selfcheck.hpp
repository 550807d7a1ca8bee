#pragma once

#include <string>

namespace denial {

struct SelfCheckReport {
  int roundtrips_ok = 0;      // of 7
  int vectors_ok = 0;         // of 64
  int pairs_ok = 0;           // of 121
  bool all_ok() const {
    return roundtrips_ok == 7 && vectors_ok == 64 && pairs_ok == 121;
  }
  std::string summary() const;
};

/// Embedded self-verification: class-matrix round-trips, agreement between
/// the classifier and a second matching implementation kept in this
/// translation unit, and exhaustive meet/join existence over the lattice.
SelfCheckReport run_self_check();

}  // namespace denial
