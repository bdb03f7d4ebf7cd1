#include "doctest.h"
#include "uctk/checks.hpp"
#include "uctk/enumerate.hpp"
#include "uctk/error.hpp"
#include "uctk/level1.hpp"
#include "uctk/text.hpp"

using namespace uctk;

namespace {

Level1Tree tree(const char* s) { return text::parse_level1(s); }

std::string code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_SUITE("level1") {
  TEST_CASE("validation") {
    CHECK(tree("{}").empty());
    CHECK(tree("{(1) (0 0) (0)}").str() == "{(0) (0 0) (1)}");
    CHECK(tree("{(1) (0 0) (0)}").nodes() == std::vector<Node>{Node{0, 0}, Node{0}, Node{1}});
    CHECK(code_of([] { validate_level1({Node{1}}); }) == "ClosureViolation");
    CHECK(code_of([] { validate_level1({Node{}}); }) != "");
  }

  TEST_CASE("regularity") {
    CHECK(is_regular(tree("{(0) (0 0)}")));
    CHECK_FALSE(is_regular(tree("{(0) (1)}")));
    CHECK(is_regular(tree("{}")));
  }

  TEST_CASE("rep comparisons") {
    const Level1Tree p = tree("{(0) (0 0)}");
    CHECK(rep_compare(p, {Node{0, 0}, std::nullopt}, {Node{0}, 3}) < 0);
    CHECK(rep_compare(p, {Node{0}, 3}, {Node{0}, std::nullopt}) < 0);
    CHECK(rep_compare(p, {Node{0}, 3}, {Node{0}, 3}) == 0);
  }

  TEST_CASE("order types") {
    CHECK(rep_order_type(tree("{}")) == CtblOrd());
    CHECK(rep_order_type(tree("{(0)}")).str(false) == "w+1");
    CHECK(rep_order_type(tree("{(0) (0 0)}")).str(false) == "w*2+1");
    CHECK(checks::rank_order_type(tree("{(0)}")) == rep_order_type(tree("{(0)}")));
    CHECK(checks::rank_order_type(tree("{(0) (0 0)}")) == rep_order_type(tree("{(0) (0 0)}")));
  }

  TEST_CASE("descriptions and seeds") {
    CHECK(descriptions(tree("{}")).size() == 1);
    const auto d = descriptions(tree("{(0) (0 0)}"));
    REQUIRE(d.size() == 3);
    CHECK(d[0].str() == "(0 0)");
    CHECK(d[1].str() == "(0)");
    CHECK(d[2].is_constant());
    CHECK(seed(tree("{(0) (0 0)}"), Desc1{Node{0, 0}}) == UOrd::u(1));
    CHECK(seed(tree("{(0) (0 0)}"), Desc1{}) == UOrd::u(3));
    CHECK(seed(tree("{}"), Desc1{}) == UOrd::u(1));
  }

  TEST_CASE("factorings") {
    CHECK(factorings(tree("{(0)}"), tree("{(0) (0 0)}")).size() == 2);
    CHECK(factorings(tree("{}"), tree("{}")).size() == 1);
    CHECK(factorings(tree("{(0) (0 0)}"), tree("{(0)}")).empty());
    CHECK(factor_exists(tree("{(0)}"), tree("{(0) (0 0)}")));
    CHECK(strict_factor_exists(tree("{(0)}"), tree("{(0) (0 0)}")));
    CHECK(factor_exists(tree("{(0) (1)}"), tree("{(0) (1)}")));
    CHECK_FALSE(strict_factor_exists(tree("{(0) (1)}"), tree("{(0) (1)}")));
    CHECK_FALSE(factor_exists(tree("{(0) (0 0)}"), tree("{(0)}")));
  }

  TEST_CASE("factor to shift") {
    const Level1Tree p = tree("{(0)}"), w = tree("{(0) (0 0)}");
    CHECK(factor_to_shift(FactorMap1{{Node{0}}}, p, w) == IndexMap(3, {2, 3}));
    CHECK(factor_to_shift(FactorMap1{{Node{0, 0}}}, p, w) == IndexMap(3, {1, 3}));
    CHECK(factor_to_shift(FactorMap1{w.nodes()}, w, w) == IndexMap::identity(3));
  }

  TEST_CASE("towers") {
    const Level1Tower t = validate_tower(text::parse_tower1("[{} {(0)} {(0) (1)}]"));
    CHECK(t.regular == std::vector<bool>{true, true, false});
    CHECK(code_of([] { validate_tower(text::parse_tower1("[{} {(0) (0 0)}]")); }) == "CardinalityMismatch");
  }

  TEST_CASE("respecting assignments and S1") {
    const CtblOrd w = CtblOrd::omega(), w2 = w * CtblOrd::natural(2);
    CHECK(respects_level1(tree("{(0) (0 0)}"), {{Node{0, 0}, w}, {Node{0}, w2}}));
    CHECK_FALSE(respects_level1(tree("{(0) (0 0)}"), {{Node{0, 0}, w2}, {Node{0}, w}}));
    CHECK_FALSE(respects_level1(tree("{(0)}"), {{Node{0}, w + CtblOrd::natural(1)}}));
    CHECK(s1_member({tree("{(0)}")}, {w}));
    CHECK_FALSE(s1_member({tree("{(0)}"), tree("{(0) (0 0)}")}, {w, w2}));
    CHECK(s1_member({}, {}));
  }

  TEST_CASE("tree embeddings") {
    const Level1Tree p = tree("{(0)}"), q = tree("{(0) (0 0)}");
    const UOrd u12 = UOrd::u(1, CtblOrd::natural(2));
    CHECK(tree_embed(p, q, u12) == UOrd::u(2, CtblOrd::natural(2)));
    CHECK(tree_embed_sup(p, q, u12) == UOrd::u(2) + UOrd::u(1));
    CHECK(checks::shift_sup_by_decomposition(inclusion_shift(p, q), u12) == UOrd::u(2) + UOrd::u(1));
    CHECK(tree_embed(q, q, u12) == u12);
    CHECK(tree_embed_sup(q, q, u12) == u12);
  }

  TEST_CASE("enumeration counts") {
    // Ordered forests: Catalan numbers by size.
    std::vector<std::size_t> by_size(7, 0);
    for (const Level1Tree& p : level1_trees(6)) ++by_size[p.size()];
    CHECK(by_size == std::vector<std::size_t>{1, 1, 2, 5, 14, 42, 132});
  }
}
