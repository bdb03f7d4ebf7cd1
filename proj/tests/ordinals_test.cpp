#include "doctest.h"
#include "uctk/analysis.hpp"
#include "uctk/checks.hpp"
#include "uctk/error.hpp"
#include "uctk/text.hpp"
#include "uctk/uord.hpp"

using namespace uctk;

namespace {

UOrd o(const char* s) { return parse_uord(s); }

std::string code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_SUITE("ordinals") {
  TEST_CASE("countable arithmetic") {
    const CtblOrd w = CtblOrd::omega();
    CHECK(CtblOrd::natural(1) + w == w);
    CHECK((w + CtblOrd::natural(1)).is_successor());
    CHECK(parse_ctbl("w^w*2+w+3").str(false) == "w^w*2+w+3");
    CHECK(parse_ctbl("w^(w+1)") > parse_ctbl("w^w*5"));
  }

  TEST_CASE("uord comparison and addition") {
    CHECK(o("u2+u1") < o("u2*2"));
    CHECK(o("u1*2+5") + o("u1") == o("u1*3"));
    CHECK(o("u2") + o("u2") == o("u2*2"));
    CHECK(o("u3*w+u1*(w^2)+w").str() == "u3*w + u1*w^2 + w");
  }

  TEST_CASE("L-cofinality") {
    CHECK(cf_L(o("u3")).str() == "u3");
    CHECK(cf_L(o("u1*w")).str() == "w");
    CHECK(cf_L(o("u2+u1*2")).str() == "u1");
    CHECK(cf_L(o("u2+5")).kind == Cofinality::Kind::Successor);
    CHECK(cf_L(UOrd()).kind == Cofinality::Kind::Zero);
  }

  TEST_CASE("shifts") {
    CHECK(apply_shift(IndexMap(2, {2}), o("u1+5")) == o("u2+5"));
    CHECK(apply_shift(IndexMap::identity(3), o("u3+u1*w")) == o("u3+u1*w"));
    CHECK(apply_shift(IndexMap(3, {1, 3}), o("u2*2+u1")) == o("u3*2+u1"));
  }

  TEST_CASE("sup shifts") {
    CHECK(apply_shift_sup(IndexMap(2, {2}), o("u1")) == o("u1"));
    CHECK(apply_shift_sup(IndexMap(3, {1, 3}), o("u2")) == o("u2"));
    CHECK(apply_shift_sup(IndexMap(2, {2}), o("u1*w")) == o("u2*w"));
    for (const char* b : {"u1", "u2", "u1*w", "u2*3+u1*2", "u3+u1*(w+1)"})
      for (const IndexMap& s : {IndexMap(2, {2}), IndexMap(3, {1, 3}), IndexMap(5, {2, 4, 5})})
        if (o(b).top_level() <= s.n()) CHECK(apply_shift_sup(s, o(b)) == checks::shift_sup_by_decomposition(s, o(b)));
  }

  TEST_CASE("decomposition") {
    auto [s2, t2] = decompose_shift(IndexMap(3, {1, 3}), 2);
    CHECK(s2 == IndexMap(3, {1, 2, 3}));
    CHECK(t2 == IndexMap(3, {1, 3}));
    auto [s1, t1] = decompose_shift(IndexMap(3, {3}), 1);
    CHECK(s1 == IndexMap(3, {1, 3}));
    CHECK(t1 == IndexMap(2, {2}));
    auto [s1b, t1b] = decompose_shift(IndexMap(2, {2}), 1);
    CHECK(s1b == IndexMap(2, {1, 2}));
    CHECK(t1b == IndexMap(2, {2}));
    CHECK(code_of([] { decompose_shift(IndexMap(2, {1, 2}), 2); }) == "CriterionFails");
  }

  TEST_CASE("analysis of u2 over two nodes") {
    const OrdAnalysis a = analyze(o("u2"), text::parse_level1("{(0) (0 0)}"));
    CHECK(a.signature == std::vector<Node>{Node{0}});
    CHECK(a.signature_seeds == std::vector<UOrd>{o("u2")});
    CHECK(a.essentially_continuous);
    CHECK(a.potential_tower.continuous());
    // The induced tower ends at {(0)}; the potential tower keeps that tree.
    CHECK(a.potential_tower.str() == "({(0)}, ((0)))");
  }

  TEST_CASE("analysis of u1*2") {
    const Level1Tree w = text::parse_level1("{(0)}");
    const OrdAnalysis a = analyze(o("u1*2"), w);
    CHECK(a.signature == std::vector<Node>{Node{0}});
    CHECK_FALSE(a.essentially_continuous);
    CHECK(a.uniform_cofinality.str() == "u1");
    CHECK(a.potential_tower.str() == "({(0)}, ((0) (0 0)))");
    CHECK(a.approximation_sequence == std::vector<UOrd>{o("u1"), o("u1*2")});
    CHECK(checks::approximation_by_evaluation(o("u1*2"), w) == a.approximation_sequence);
  }

  TEST_CASE("analysis of u1*w") {
    const Level1Tree w = text::parse_level1("{(0)}");
    const OrdAnalysis a = analyze(o("u1*w"), w);
    CHECK(a.uniform_cofinality.str() == "w");
    CHECK(a.potential_tower.str() == "({(0)}, ((0) -1))");
    CHECK_FALSE(checks::continuity_by_evaluation(o("u1*w"), w));
  }

  TEST_CASE("analysis errors") {
    const Level1Tree w = text::parse_level1("{(0)}");
    CHECK(code_of([&] { analyze(o("w"), w); }) == "BelowOmega1");
    CHECK(code_of([&] { analyze(o("u1+1"), w); }) == "NotALimit");
    CHECK(code_of([&] { analyze(o("u2"), w); }) == "OutOfRange");
  }

  TEST_CASE("evaluation oracle on a three-level ordinal") {
    const Level1Tree w = text::parse_level1("{(0) (0 0) (1)}");
    for (const char* b : {"u3+u1", "u3*2+u2+u1*w", "u2*(w+1)", "u3+u2*2", "u1*(w^2)+w"}) {
      CAPTURE(b);
      const OrdAnalysis a = analyze(o(b), w);
      CHECK(checks::approximation_by_evaluation(o(b), w) == a.approximation_sequence);
      CHECK(checks::continuity_by_evaluation(o(b), w) == a.essentially_continuous);
      CHECK(checks::induced_tower_by_search(a.signature, w) == a.induced_tower.trees);
    }
  }
}
