#include "doctest.h"
#include "uctk/enumerate.hpp"
#include "uctk/error.hpp"
#include "uctk/level3.hpp"
#include "uctk/text.hpp"

using namespace uctk;

namespace {

LevelLe2Tree le2(const char* s) { return text::parse_le2(s); }

std::string code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

const char* kQ0 = "<{} | () -> ({}, (0))>";
const char* kQ1 = "<{(0)} | () -> ({}, (0))>";
const char* kQ21 = "<{} | () -> ({}, (0)); ((0)) -> ({(0)}, (0 0))>";

}  // namespace

TEST_SUITE("level3") {
  TEST_CASE("partial level <=2 trees") {
    CHECK(text::parse_partial_le2(le2(kQ0), "(0, -1, {})").degree() == 0);
    CHECK(text::parse_partial_le2(le2(kQ0), "(1, (0), {})").degree() == 1);
    CHECK(text::parse_partial_le2(le2(kQ21), "(2, ((0) (0)), {(0) (0 0)})").degree() == 2);
    CHECK(code_of([] { text::parse_partial_le2(le2(kQ21), "(2, ((0) (0)), {(0)})"); }) == "CaseViolation");
  }

  TEST_CASE("uniform cofinality") {
    const UcfResult z = ucf(text::parse_partial_le2(le2(kQ0), "(0, -1, {})"));
    CHECK(z.which == UcfCase::DegreeZero);
    CHECK(z.str() == "(0, -1)");
    CHECK(ucf(text::parse_partial_le2(le2(kQ0), "(1, (0), {})")).str() == "(2, ((), {}, ((0))))");
    const UcfResult c5 = ucf(text::parse_partial_le2(le2(kQ21), "(2, ((0) (0)), {(0) (0 0)})"));
    CHECK(c5.which == UcfCase::Parent);
    CHECK(c5.str() == "(2, (((0)), {(0) (0 0)}, ((0) (0 0))))");
  }

  TEST_CASE("cf3") {
    CHECK(cf3(text::parse_partial_le2(le2(kQ0), "(0, -1, {})")) == 0);
    CHECK(cf3(text::parse_partial_le2(le2(kQ0), "(1, (0), {})")) == 1);
    CHECK(cf3(text::parse_partial_le2(le2(kQ1), "(1, (0 0), {})")) == 1);
    CHECK(cf3(text::parse_partial_le2(le2(kQ1), "(1, (1), {})")) == 2);
  }

  TEST_CASE("completions") {
    const auto c1 = completion_le2(text::parse_partial_le2(le2(kQ0), "(1, (0), {})"));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == le2(kQ1));
    const auto c2 = completion_le2(text::parse_partial_le2(le2(kQ0), "(2, ((0)), {(0)})"));
    REQUIRE(c2.size() == 2);
    CHECK(c2[0] == typical_trees().q20);
    CHECK(c2[1] == typical_trees().q21);
    CHECK(code_of([] { completion_le2(text::parse_partial_le2(le2(kQ0), "(0, -1, {})")); }) == "DegreeZero");
  }

  TEST_CASE("level-3 trees") {
    const Level3Tree r = text::parse_level3("<<((0)) -> (<{} | () -> ({}, (0))>, (0, -1, {}))>>");
    CHECK(r.card() == 1);
    CHECK(is_regular_level3(r));
    CHECK_FALSE(is_regular_level3(text::parse_level3(
        "<<((0)) -> (<{} | () -> ({}, (0))>, (0, -1, {})); ((1)) -> (<{} | () -> ({}, (0))>, (0, -1, {}))>>")));
    CHECK(code_of([] { text::parse_level3("<<() -> (<{} | () -> ({}, (0))>, (0, -1, {}))>>"); }) == "EmptyKeyPresent");
  }

  TEST_CASE("rep3 order") {
    const Level3Tree r = text::parse_level3("<<((0)) -> (<{} | () -> ({}, (0))>, (2, ((0)), {(0)}))>>");
    const Rep3Element a = text::parse_rep3("((0), u1*2, -1)"), b = text::parse_rep3("((0))");
    REQUIRE(valid_rep3(r, a));
    REQUIRE(valid_rep3(r, b));
    CHECK(rep3_compare(r, a, b) < 0);
    CHECK(rep3_compare(r, b, b) == 0);
    const Rep3Element c = text::parse_rep3("((0), u1*w, -1)");
    REQUIRE(valid_rep3(r, c));
    CHECK(rep3_compare(r, a, c) < 0);
  }

  TEST_CASE("S3 structure") {
    CHECK(s3_structural_member({}, false).valid);
    const auto t = text::parse_tower3(
        "[<<((0)) -> (<{} | () -> ({}, (0))>, (1, (0), {}))>> "
        "<<((0)) -> (<{} | () -> ({}, (0))>, (1, (0), {})); ((0) (0)) -> (<{(0)} | () -> ({}, (0))>, (0, -1, {}))>>]");
    CHECK(s3_structural_member(t, false).valid);
    const auto bad = text::parse_tower3(
        "[<<((0)) -> (<{} | () -> ({}, (0))>, (0, -1, {}))>> "
        "<<((0)) -> (<{} | () -> ({}, (0))>, (0, -1, {})); ((1)) -> (<{} | () -> ({}, (0))>, (0, -1, {}))>>]");
    CHECK_FALSE(s3_structural_member(bad, false).valid);
  }

  TEST_CASE("enumeration") {
    for (const Level3Tree& r : level3_trees(2)) CHECK(validate_level3(r.entries()) == r);
  }
}
