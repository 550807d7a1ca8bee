#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "denial/taxonomy.hpp"
#include "support/oracle.hpp"

using namespace denial;
using C = ConditionId;

TEST_CASE("required_conditions matches the class matrix") {
  CHECK(required_conditions(AttackClass::DoS) == ConditionVector{C::C0, C::C1});
  CHECK(required_conditions(AttackClass::DDoS) ==
        ConditionVector{C::C0, C::C2});
  CHECK(required_conditions(AttackClass::LDoS) ==
        ConditionVector{C::C0, C::C1, C::C3});
  CHECK(required_conditions(AttackClass::LDDoS) ==
        ConditionVector{C::C0, C::C2, C::C3});
  CHECK(required_conditions(AttackClass::EDoS) ==
        ConditionVector{C::C0, C::C4});
  CHECK(required_conditions(AttackClass::DoW) ==
        ConditionVector{C::C0, C::C1, C::C4, C::C5});
  CHECK(required_conditions(AttackClass::DDoW) ==
        ConditionVector{C::C0, C::C2, C::C4, C::C5});
}

TEST_CASE("the seven required sets are pairwise distinct") {
  for (auto a : kAllClasses)
    for (auto b : kAllClasses)
      if (a != b)
        CHECK(required_conditions(a) != required_conditions(b));
}

TEST_CASE("is_consistent flags each rule separately") {
  auto v1 = is_consistent(ConditionVector{C::C0, C::C1, C::C2});
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].rule == "C1-and-C2-exclusive");

  auto v2 = is_consistent(ConditionVector{C::C0, C::C1, C::C5});
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].rule == "C5-requires-C4");

  auto v3 = is_consistent(ConditionVector{C::C3});
  REQUIRE(v3.size() == 1);
  CHECK(v3[0].rule == "refinement-requires-C0");

  CHECK(is_consistent(ConditionVector{C::C0, C::C2, C::C4, C::C5}).empty());
  CHECK(is_consistent(ConditionVector{}).empty());
}

TEST_CASE("classify: named examples") {
  SUBCASE("single-source volumetric -> DoS") {
    auto r = classify(ConditionVector{C::C0, C::C1});
    CHECK(r.outcome == OutcomeKind::Classified);
    REQUIRE(r.matched.size() == 1);
    CHECK(r.matched[0] == AttackClass::DoS);
  }
  SUBCASE("distributed low-rate serverless -> DDoW despite surplus C3") {
    auto r = classify(ConditionVector{C::C0, C::C2, C::C3, C::C4, C::C5});
    CHECK(r.outcome == OutcomeKind::Classified);
    REQUIRE(r.matched.size() == 1);
    CHECK(r.matched[0] == AttackClass::DDoW);
  }
  SUBCASE("empty vector -> NoAttack") {
    auto r = classify(ConditionVector{});
    CHECK(r.outcome == OutcomeKind::NoAttack);
    CHECK(r.matched.empty());
  }
  SUBCASE("C0,C1,C3,C4,C5 -> DoW wins at cardinality 4") {
    auto r = classify(ConditionVector{C::C0, C::C1, C::C3, C::C4, C::C5});
    CHECK(r.outcome == OutcomeKind::Classified);
    REQUIRE(r.matched.size() == 1);
    CHECK(r.matched[0] == AttackClass::DoW);
  }
  SUBCASE("bare C0 -> GenericDenial") {
    auto r = classify(ConditionVector{C::C0});
    CHECK(r.outcome == OutcomeKind::GenericDenial);
    CHECK(r.matched.empty());
  }
  SUBCASE("consistent but classless surplus ({C0,C3}) -> GenericDenial") {
    auto r = classify(ConditionVector{C::C0, C::C3});
    CHECK(r.outcome == OutcomeKind::GenericDenial);
    CHECK(r.matched.empty());
  }
  SUBCASE("inconsistent vector reports violations") {
    auto r = classify(ConditionVector{C::C0, C::C1, C::C2});
    CHECK(r.outcome == OutcomeKind::Inconsistent);
    CHECK(r.matched.empty());
    CHECK(!r.consistency_violations.empty());
  }
}

TEST_CASE("classify round-trips every class") {
  for (auto cls : kAllClasses) {
    auto r = classify(required_conditions(cls));
    CHECK(r.outcome == OutcomeKind::Classified);
    REQUIRE(r.matched.size() == 1);
    CHECK(r.matched[0] == cls);
  }
}

TEST_CASE("classify agrees with the brute-force oracle on all 64 vectors") {
  for (std::uint8_t mask = 0; mask < 64; ++mask) {
    auto got = classify(ConditionVector::from_mask(mask));
    auto want = oracle::classify_mask(mask);
    CHECK(got.outcome == want.outcome);
    CHECK(got.matched == want.matched);
  }
}

TEST_CASE("matched classes respect invariants on all 64 vectors") {
  for (std::uint8_t mask = 0; mask < 64; ++mask) {
    auto v = ConditionVector::from_mask(mask);
    auto r = classify(v);
    if (r.outcome == OutcomeKind::Classified) CHECK(r.matched.size() == 1);
    if (r.outcome == OutcomeKind::Hybrid) {
      CHECK(r.matched.size() >= 2);
      int card = required_conditions(r.matched[0]).size();
      for (auto cls : r.matched)
        CHECK(required_conditions(cls).size() == card);
    }
    CHECK((r.outcome == OutcomeKind::NoAttack) == !v.contains(C::C0));
    // matched list is in canonical order
    for (std::size_t i = 1; i < r.matched.size(); ++i)
      CHECK(static_cast<int>(r.matched[i - 1]) <
            static_cast<int>(r.matched[i]));
  }
}

TEST_CASE("monotonicity of specificity over subset pairs") {
  // Adding conditions can only add candidates, so the winning match
  // cardinality never drops and every class matched for the smaller
  // vector is still a candidate for the larger one.
  auto max_card = [](const std::vector<AttackClass>& matched) {
    int best = 0;
    for (auto cls : matched)
      best = std::max(best, required_conditions(cls).size());
    return best;
  };
  for (std::uint8_t vm = 0; vm < 64; ++vm) {
    for (std::uint8_t wm = 0; wm < 64; ++wm) {
      if ((vm & wm) != vm) continue;  // need v subset of w
      auto v = ConditionVector::from_mask(vm);
      auto w = ConditionVector::from_mask(wm);
      if (!v.contains(C::C0) || !w.contains(C::C0)) continue;
      if (!is_consistent(v).empty() || !is_consistent(w).empty()) continue;
      auto rv = classify(v);
      auto rw = classify(w);
      if (!rv.matched.empty())
        CHECK(max_card(rw.matched) >= max_card(rv.matched));
      for (auto cv : rv.matched)
        CHECK(required_conditions(cv).is_subset_of(w));
    }
  }
}

TEST_CASE("venn_region totals: four availability, two sustainability, one "
          "overlap") {
  int avail = 0, sust = 0, overlap = 0;
  for (auto cls : kAllClasses) {
    switch (venn_region(cls)) {
      case VennRegion::Availability: ++avail; break;
      case VennRegion::Sustainability: ++sust; break;
      case VennRegion::Overlap: ++overlap; break;
    }
  }
  CHECK(avail == 4);
  CHECK(sust == 2);
  CHECK(overlap == 1);
  CHECK(venn_region(AttackClass::LDoS) == VennRegion::Availability);
  CHECK(venn_region(AttackClass::DDoW) == VennRegion::Sustainability);
  CHECK(venn_region(AttackClass::EDoS) == VennRegion::Overlap);
}

TEST_CASE("vector_from_names parsing") {
  CHECK(vector_from_names("C0,C2") == ConditionVector{C::C0, C::C2});
  CHECK(vector_from_names("c0, c4 ,C4") == ConditionVector{C::C0, C::C4});
  CHECK(vector_from_names("") == ConditionVector{});
  CHECK_THROWS_WITH_AS(vector_from_names("C0,C9"),
                       "unknown condition token \"C9\"",
                       std::invalid_argument);
  CHECK_THROWS_AS(vector_from_names("C0,bogus"), std::invalid_argument);
}

TEST_CASE("canonical text form") {
  CHECK(ConditionVector{C::C5, C::C0, C::C2}.canonical_text() == "C0,C2,C5");
  CHECK(ConditionVector{}.canonical_text() == "");
}
