#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uctk/ctbl_ord.hpp"
#include "uctk/node.hpp"
#include "uctk/uord.hpp"

namespace uctk {

// Finite level-1 tree. Nodes are kept sorted in Brouwer-Kleene order.
class Level1Tree {
 public:
  Level1Tree() = default;

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  bool contains(const Node& p) const;
  // Position of p in the BK-increasing listing.
  std::size_t rank(const Node& p) const;
  std::size_t child_count(const Node& p) const;

  std::string str() const;

  friend bool operator==(const Level1Tree&, const Level1Tree&) = default;
  friend auto operator<=>(const Level1Tree&, const Level1Tree&) = default;

 private:
  friend Level1Tree validate_level1(const std::vector<Node>& nodes);
  std::vector<Node> nodes_;
};

Level1Tree validate_level1(const std::vector<Node>& nodes);
bool is_regular(const Level1Tree& p);
Level1Tree with_node(const Level1Tree& p, const Node& t);
bool is_subtree(const Level1Tree& p, const Level1Tree& w);

// {p^(j) : p in P or empty, p^(j) not in P, j = 0 or p^(j-1) in P}, BK order.
std::vector<Node> addable_nodes(const Level1Tree& p);
// Addable nodes keeping P regular.
std::vector<Node> regular_addable_nodes(const Level1Tree& p);
// The addable node strictly between lower and upper in BK order; a missing
// bound stands for the corresponding end of the order.
Node gap_node(const Level1Tree& p, const std::optional<Node>& lower, const std::optional<Node>& upper);

// (p) when n is empty, (p, n) otherwise.
struct Rep1Element {
  Node node;
  std::optional<std::uint64_t> n;

  std::string str() const;
  friend bool operator==(const Rep1Element&, const Rep1Element&) = default;
};

bool in_rep(const Level1Tree& p, const Rep1Element& x);
std::strong_ordering rep_compare(const Level1Tree& p, const Rep1Element& x, const Rep1Element& y);
CtblOrd rep_order_type(const Level1Tree& p);

// A node of P, or the constant description when node is empty.
struct Desc1 {
  std::optional<Node> node;

  bool is_constant() const { return !node.has_value(); }
  std::string str() const { return node ? node->str() : "()"; }
  friend bool operator==(const Desc1&, const Desc1&) = default;
};

std::vector<Desc1> descriptions(const Level1Tree& p);
std::size_t desc_rank(const Level1Tree& p, const Desc1& d);
UOrd seed(const Level1Tree& p, const Desc1& d);

// Order-preserving map desc(P) -> desc(W); images[i] is the image of the
// i-th node of P in BK order, and the constant maps to the constant.
struct FactorMap1 {
  std::vector<Node> images;

  std::string str(const Level1Tree& source) const;
  friend bool operator==(const FactorMap1&, const FactorMap1&) = default;
};

bool is_factoring(const FactorMap1& sigma, const Level1Tree& p, const Level1Tree& w);
std::vector<FactorMap1> factorings(const Level1Tree& p, const Level1Tree& w);
bool factor_exists(const Level1Tree& p, const Level1Tree& w);
bool strict_factor_exists(const Level1Tree& p, const Level1Tree& w);
IndexMap factor_to_shift(const FactorMap1& sigma, const Level1Tree& p, const Level1Tree& w);

struct Level1Tower {
  std::vector<Level1Tree> trees;
  std::vector<bool> regular;
};

Level1Tower validate_tower(const std::vector<Level1Tree>& trees);

using Assignment1 = std::map<Node, CtblOrd>;

bool respects_level1(const Level1Tree& p, const Assignment1& alpha);
// A leading empty tree in the tower is optional.
bool s1_member(const std::vector<Level1Tree>& towers, const std::vector<CtblOrd>& alphas);

UOrd tree_embed(const Level1Tree& p, const Level1Tree& p2, const UOrd& b);
UOrd tree_embed_sup(const Level1Tree& p, const Level1Tree& p2, const UOrd& b);
IndexMap inclusion_shift(const Level1Tree& p, const Level1Tree& p2);

}  // namespace uctk
