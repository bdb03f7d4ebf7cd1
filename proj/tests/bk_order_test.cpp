#include "doctest.h"
#include "uctk/bk_order.hpp"

using namespace uctk;

TEST_SUITE("bk-order") {
  TEST_CASE("lengthening sorts first") {
    CHECK(bk_compare(Node{0, 0}, Node{0}) < 0);
    CHECK(bk_compare(Node{0}, Node{}) < 0);
  }

  TEST_CASE("identity and first difference") {
    CHECK(bk_compare(Node{0, 1}, Node{0, 1}) == 0);
    CHECK(bk_compare(Node{0, 1}, Node{0, 0, 5}) > 0);
    CHECK(bk_compare(Node{1}, Node{0, 7}) > 0);
  }

  TEST_CASE("minus one is least") {
    CHECK(bk_compare(ExtNode::minus_one(), ExtNode(Node{0, 0, 0})) < 0);
    CHECK(bk_compare(ExtNode::minus_one(), ExtNode::minus_one()) == 0);
  }

  TEST_CASE("sequences of nodes and dom*") {
    const NodeSeq a{Node{0}}, b{Node{0}, Node{0}};
    CHECK(bk_compare(b, a) < 0);
    CHECK(bk_compare(DomStar{a, true}, DomStar{a, false}) < 0);
    CHECK(bk_compare(DomStar{b, false}, DomStar{a, true}) > 0);
  }
}
