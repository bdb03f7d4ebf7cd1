#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uctk/level2.hpp"

namespace uctk {

// (Q, (d, q, P)). The pending node is stored as a DomKey: level 0 with an
// empty path stands for (0, -1).
struct PartialLevelLe2Tree {
  LevelLe2Tree base;
  DomKey key;
  Level1Tree p;

  int degree() const { return key.level; }
  std::string ext_str() const;
  std::string str() const { return "(" + base.str() + ", " + ext_str() + ")"; }
  friend bool operator==(const PartialLevelLe2Tree&, const PartialLevelLe2Tree&) = default;
  friend auto operator<=>(const PartialLevelLe2Tree&, const PartialLevelLe2Tree&) = default;
};

PartialLevelLe2Tree validate_partial_le2(const LevelLe2Tree& base, const DomKey& key, const Level1Tree& p);

enum class UcfCase { DegreeZero = 1, LevelOneInner = 2, LevelOneTop = 3, NextSibling = 4, Parent = 5 };

struct UcfResult {
  UcfCase which;
  // Empty for (0, -1).
  std::optional<Le2Description> description;

  std::string str() const { return description ? description->str() : "(0, -1)"; }
};

UcfResult ucf(const PartialLevelLe2Tree& pt);
int cf3(const PartialLevelLe2Tree& pt);
// Degree 1 yields one tree; degree 2 yields one per label of the new node,
// the degree-0 label first and then nodes in BK order.
std::vector<LevelLe2Tree> completion_le2(const PartialLevelLe2Tree& pt);
bool is_completion(const PartialLevelLe2Tree& pt, const LevelLe2Tree& q);
// Tuples on dom(Q) plus the pending key.
bool respects_partial_le2(const PartialLevelLe2Tree& pt, const OrdTuple2& beta);

// The level <=2 tree of cardinality 1.
LevelLe2Tree card_one_le2();

struct PotentialTower2 {
  LevelLe2Tree tree;
  std::vector<std::pair<DomKey, Level1Tree>> steps;
};

class Level3Tree {
 public:
  using Entries = std::map<NodeSeq, PartialLevelLe2Tree>;

  Level3Tree() = default;

  const Entries& entries() const { return entries_; }
  std::size_t card() const { return entries_.size(); }
  bool contains(const NodeSeq& r) const { return entries_.count(r) > 0; }
  const PartialLevelLe2Tree& at(const NodeSeq& r) const;
  const LevelLe2Tree& tree(const NodeSeq& r) const { return at(r).base; }
  const DomKey& node(const NodeSeq& r) const { return at(r).key; }

  PotentialTower2 bracket(const NodeSeq& r) const;
  // R[r, Q] for a completion Q of R(r).
  PotentialTower2 bracket_with(const NodeSeq& r, const LevelLe2Tree& q) const;
  Level1Tree children(const NodeSeq& r) const;
  std::vector<DomStar> dom_star() const;
  std::vector<DomStar> minus(const NodeSeq& r) const;
  std::vector<DomStar> plus(const NodeSeq& r) const;

  std::string str() const;

  friend bool operator==(const Level3Tree&, const Level3Tree&) = default;

 private:
  friend Level3Tree validate_level3(const Entries& entries);
  Entries entries_;
};

Level3Tree validate_level3(const Level3Tree::Entries& entries);
bool is_regular_level3(const Level3Tree& r);

struct Level3Tower {
  std::vector<Level3Tree> trees;
  std::vector<bool> regular;
  // New domain node of each entry.
  std::vector<NodeSeq> new_nodes;
};

Level3Tower validate_level3_tower(const std::vector<Level3Tree>& trees);

// Interleaving (r(0), beta_{q_1}, r(1), ...) of r in dom*(R).
struct Rep3Element {
  DomStar r;
  std::vector<UOrd> betas;

  std::string str() const;
};

bool valid_rep3(const Level3Tree& t, const Rep3Element& x);
std::strong_ordering rep3_compare(const Level3Tree& t, const Rep3Element& x, const Rep3Element& y);

struct StructuralVerdict {
  bool valid = false;
  std::string reason;
  std::vector<NodeSeq> new_nodes;
};

// Structure only; the ordinal clause is never evaluated.
StructuralVerdict s3_structural_member(const std::vector<Level3Tree>& towers, bool minus_variant);

}  // namespace uctk
