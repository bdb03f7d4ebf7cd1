#include "doctest.h"
#include "uctk/checks.hpp"
#include "uctk/enumerate.hpp"
#include "uctk/error.hpp"
#include "uctk/level2.hpp"
#include "uctk/text.hpp"

using namespace uctk;

namespace {

UOrd o(const char* s) { return parse_uord(s); }
Level1Tree tree(const char* s) { return text::parse_level1(s); }
OrdTuple2 tuple(const char* s) { return text::parse_tuple2(s); }

std::string code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

std::vector<std::string> strs(const std::vector<Le2Description>& v) {
  std::vector<std::string> out;
  for (const auto& d : v) out.push_back(d.str());
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_SUITE("level2") {
  TEST_CASE("partial level <=1 trees") {
    CHECK(completion_le1(validate_partial_le1(tree("{}"), Node{0})) == tree("{(0)}"));
    CHECK(completion_le1(validate_partial_le1(tree("{(0)}"), Node{0, 0})) == tree("{(0) (0 0)}"));
    CHECK(code_of([] { completion_le1(validate_partial_le1(tree("{(0)}"), ExtNode::minus_one())); }) ==
          "DegreeZeroHasNoCompletion");
  }

  TEST_CASE("partial towers") {
    const PartialLevel1Tree a = validate_partial_le1(tree("{}"), Node{0});
    const PartialLevel1Tree b = validate_partial_le1(tree("{(0)}"), Node{0, 0});
    const PartialTower1 t1 = validate_partial_tower_le1({a}, std::nullopt);
    CHECK_FALSE(t1.continuous());
    CHECK(compress(t1).str() == "({}, ((0)))");
    const PartialTower1 t2 = validate_partial_tower_le1({a, b}, std::nullopt);
    CHECK(compress(t2).str() == "({(0)}, ((0) (0 0)))");
    const PartialTower1 t3 = validate_partial_tower_le1({a}, tree("{(0)}"));
    CHECK(t3.continuous());
    CHECK(compress(t3).str() == "({(0)}, ((0)))");
    CHECK(expand(compress(t2)).steps == t2.steps);
  }

  TEST_CASE("level-2 trees") {
    const TypicalTrees tt = typical_trees();
    CHECK(tt.q21.t2.str() == "() -> ({}, (0)); ((0)) -> ({(0)}, (0 0))");
    CHECK(tt.q20.t2.str() == "() -> ({}, (0)); ((0)) -> ({(0)}, -1)");
    CHECK(tt.q1.t1 == tree("{(0)}"));
    CHECK(tt.q0.t1.empty());
    CHECK(tt.q0.t2.card() == 1);
    CHECK(code_of([] { text::parse_level2("() -> ({}, (0)); ((0)) -> ({(0) (1)}, (0 0))"); }) != "");
  }

  TEST_CASE("descriptions") {
    const TypicalTrees tt = typical_trees();
    const auto d0 = strs(q_descriptions(tt.q0, false));
    CHECK(has(d0, "(2, ((), {}, ((0))))"));
    const auto d21 = q_descriptions(tt.q21, false);
    const auto s21 = strs(d21);
    CHECK(has(s21, "(2, (((0)), {(0)}, ((0) (0 0))))"));
    CHECK(has(s21, "(2, (((0) -1), {(0) (0 0)}, ((0) (0 0))))"));
    for (const auto& d : d21) {
      if (d.str() == "(2, (((0)), {(0)}, ((0) (0 0))))") CHECK(d.kind(tt.q21) == Le2Description::Kind::Discontinuous);
      if (d.str() == "(2, (((0) -1), {(0) (0 0)}, ((0) (0 0))))") CHECK(d.kind(tt.q21) == Le2Description::Kind::Continuous);
    }
    CHECK(has(strs(q_descriptions(tt.q1, false)), "(1, (0))"));
  }

  TEST_CASE("rep2 order") {
    const LevelLe2Tree q = typical_trees().q0;
    const Rep2Element top = text::parse_rep2("2:()");
    const Rep2Element a = text::parse_rep2("2:(w, -1)"), b = text::parse_rep2("2:(w*2, -1)");
    CHECK(rep2_compare(q, a, b) < 0);
    CHECK(rep2_compare(q, a, top) < 0);
    CHECK(rep2_compare(q, text::parse_rep2("2:(w^(w^w), -1)"), top) < 0);
  }

  TEST_CASE("respect") {
    const TypicalTrees tt = typical_trees();
    CHECK(respects_le2(tt.q21, tuple("2 () = u1; 2 ((0)) = u1*2")));
    CHECK_FALSE(respects_le2(tt.q20, tuple("2 () = u1; 2 ((0)) = u1*2")));
    CHECK(respects_le2(tt.q20, tuple("2 () = u1; 2 ((0)) = u1*w")));
    CHECK(weakly_respects_le2(tt.q21, tuple("2 () = u1; 2 ((0)) = u1*2")));
    CHECK_FALSE(weakly_respects_le2(tt.q21, tuple("2 () = u1; 2 ((0)) = u2")));
  }

  TEST_CASE("description evaluation") {
    const LevelLe2Tree q = typical_trees().q21;
    const OrdTuple2 t = tuple("2 () = u1; 2 ((0)) = u1*2");
    CHECK(evaluate_description(q, t, text::parse_description("(2, (((0) -1), {(0) (0 0)}, ((0) (0 0))))")) == o("u2+u1"));
    CHECK(evaluate_description(q, t, text::parse_description("(2, (((0)), {(0)}, ((0) (0 0))))")) == o("u1*2"));
    CHECK(evaluate_description(q, t, text::parse_description("(2, ((), {}, ((0))))")) == o("u1"));
  }

  TEST_CASE("recovery") {
    const DomainShape shape = text::parse_shape("<{} | (); ((0))>");
    CHECK(trees_with_domain(shape).size() == 2);
    CHECK(recover_tree(shape, tuple("2 () = u1; 2 ((0)) = u1*2")) == typical_trees().q21);
    CHECK(recover_tree(shape, tuple("2 () = u1; 2 ((0)) = u1*w")) == typical_trees().q20);
    CHECK(code_of([&] { recover_tree(shape, tuple("2 () = u1; 2 ((0)) = u2")); }) == "NoTreeFound");
  }

  TEST_CASE("S2") {
    const Level2Tree c1 = typical_trees().q0.t2, q21 = typical_trees().q21.t2;
    for (bool weak : {false, true}) {
      CHECK(s2_member({c1}, {o("u1")}, weak));
      CHECK(s2_member({c1, q21}, {o("u1"), o("u1*2")}, weak));
      CHECK_FALSE(s2_member({c1, q21}, {o("u1"), o("u2")}, weak));
    }
  }

  TEST_CASE("witness tuples") {
    std::size_t found = 0, total = 0;
    for (const LevelLe2Tree& t : level_le2_trees(3)) {
      ++total;
      if (const auto w = checks::witness_tuple(t)) {
        ++found;
        CHECK(respects_le2(t, *w));
      }
    }
    CHECK(total == 19);
    CHECK(found == 18);
  }
}
