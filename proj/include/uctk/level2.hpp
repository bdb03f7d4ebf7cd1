#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uctk/analysis.hpp"
#include "uctk/level1.hpp"
#include "uctk/uord.hpp"

namespace uctk {

// (P, t): P regular, t a node extending P regularly, or -1 (degree 0).
struct PartialLevel1Tree {
  Level1Tree base;
  ExtNode node;

  int degree() const { return node.is_minus_one() ? 0 : 1; }
  std::string str() const { return "(" + base.str() + ", " + node.str() + ")"; }
  friend bool operator==(const PartialLevel1Tree&, const PartialLevel1Tree&) = default;
  friend auto operator<=>(const PartialLevel1Tree&, const PartialLevel1Tree&) = default;
};

PartialLevel1Tree validate_partial_le1(const Level1Tree& base, const ExtNode& node);
Level1Tree completion_le1(const PartialLevel1Tree& pt);

struct PartialTower1 {
  std::vector<PartialLevel1Tree> steps;
  // Present for the continuous type.
  std::optional<Level1Tree> completed;

  bool continuous() const { return completed.has_value(); }
};

PartialTower1 validate_partial_tower_le1(const std::vector<PartialLevel1Tree>& steps,
                                         const std::optional<Level1Tree>& completed);
PotentialTower1 compress(const PartialTower1& t);
PartialTower1 expand(const PotentialTower1& pt);

class Level2Tree {
 public:
  using Entries = std::map<NodeSeq, PartialLevel1Tree>;

  Level2Tree() = default;

  const Entries& entries() const { return entries_; }
  std::size_t card() const { return entries_.size(); }
  bool contains(const NodeSeq& q) const { return entries_.count(q) > 0; }
  const PartialLevel1Tree& at(const NodeSeq& q) const;

  const Level1Tree& tree(const NodeSeq& q) const { return at(q).base; }
  const ExtNode& node(const NodeSeq& q) const { return at(q).node; }
  // Q[q] for q in dom*.
  PotentialTower1 bracket(const DomStar& q) const;
  // Q{q}: the children of q as a level-1 tree.
  Level1Tree children(const NodeSeq& q) const;
  std::vector<DomStar> dom_star() const;
  // Q{q,-} and Q{q,+}; tree_of_q overrides Q_tree(q) for q outside dom.
  std::vector<DomStar> minus(const NodeSeq& q, const std::optional<Level1Tree>& tree_of_q = std::nullopt) const;
  std::vector<DomStar> plus(const NodeSeq& q, const std::optional<Level1Tree>& tree_of_q = std::nullopt) const;

  std::string str() const;

  friend bool operator==(const Level2Tree&, const Level2Tree&) = default;
  friend auto operator<=>(const Level2Tree&, const Level2Tree&) = default;

 private:
  friend Level2Tree validate_level2(const Entries& entries);
  Entries entries_;
};

Level2Tree validate_level2(const Level2Tree::Entries& entries);

struct LevelLe2Tree {
  Level1Tree t1;
  Level2Tree t2;

  std::size_t card() const { return t1.size() + t2.card(); }
  std::string str() const;
  friend bool operator==(const LevelLe2Tree&, const LevelLe2Tree&) = default;
  friend auto operator<=>(const LevelLe2Tree&, const LevelLe2Tree&) = default;
};

struct TypicalTrees {
  LevelLe2Tree q0, q1, q20, q21;
};
TypicalTrees typical_trees();

// Element (d, q) of dom(Q): d = 1 uses path = {node}, d = 2 uses path = q.
struct DomKey {
  int level = 2;
  NodeSeq path;

  std::string str() const;
  friend auto operator<=>(const DomKey&, const DomKey&) = default;
  friend bool operator==(const DomKey&, const DomKey&) = default;
};

std::vector<DomKey> domain(const LevelLe2Tree& q);

using OrdTuple2 = std::map<DomKey, UOrd>;

// A (possibly extended) description of a level <=2 tree. Level 1 uses
// node1 (empty for the constant); level 2 uses (q, tree, nodes).
struct Le2Description {
  enum class Kind { Level1, Discontinuous, Continuous, Extended };

  int level = 2;
  Desc1 node1;
  DomStar q;
  Level1Tree tree;
  std::vector<ExtNode> nodes;

  Kind kind(const LevelLe2Tree& t) const;
  std::string str() const;
  friend bool operator==(const Le2Description&, const Le2Description&) = default;
};

// Throws BadDescription if d is not an extended description of t.
void check_description(const LevelLe2Tree& t, const Le2Description& d);
bool is_regular_description(const LevelLe2Tree& t, const Le2Description& d);
// desc(Q) followed by the extended non-descriptions, each group in BK order.
std::vector<Le2Description> q_descriptions(const LevelLe2Tree& t, bool include_extended = true);
std::strong_ordering description_compare(const Le2Description& a, const Le2Description& b);

// Interleaved alpha (+)_Q q. Level 1 keeps rep1; level 2 keeps the
// countable entries alpha_{p_0}, ... in order and q in dom*.
struct Rep2Element {
  int level = 2;
  Rep1Element rep1;
  std::vector<CtblOrd> alphas;
  DomStar q;

  std::string str() const;
};

bool valid_rep2(const LevelLe2Tree& t, const Rep2Element& x);
std::strong_ordering rep2_compare(const LevelLe2Tree& t, const Rep2Element& x, const Rep2Element& y);

struct RespectVerdict {
  bool ok = true;
  std::string clause;

  explicit operator bool() const { return ok; }
};

RespectVerdict respects_le2(const LevelLe2Tree& t, const OrdTuple2& beta);
RespectVerdict weakly_respects_le2(const LevelLe2Tree& t, const OrdTuple2& beta);
UOrd evaluate_description(const LevelLe2Tree& t, const OrdTuple2& beta, const Le2Description& d);

// Domain shape of a level <=2 tree: the level-1 tree and the level-2 domain.
struct DomainShape {
  Level1Tree t1;
  std::vector<NodeSeq> dom2;
};

std::vector<LevelLe2Tree> trees_with_domain(const DomainShape& shape);
LevelLe2Tree recover_tree(const DomainShape& shape, const OrdTuple2& beta);

// Level-2 tower (Q_1, ..., Q_n); card(Q_i) = i.
void validate_level2_tower(const std::vector<Level2Tree>& towers);
bool s2_member(const std::vector<Level2Tree>& towers, const std::vector<UOrd>& alphas, bool weak);

}  // namespace uctk
