#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uctk/level1.hpp"
#include "uctk/uord.hpp"

namespace uctk {

// Compressed partial level <=1 tower (P*, p-vector); the last entry of the
// node list may be -1.
struct PotentialTower1 {
  Level1Tree tree;
  std::vector<ExtNode> nodes;

  bool continuous() const { return tree.size() == nodes.size(); }
  std::string str() const;
  friend bool operator==(const PotentialTower1&, const PotentialTower1&) = default;
};

struct OrdAnalysis {
  std::vector<Node> signature;
  std::vector<UOrd> signature_seeds;
  bool essentially_continuous = false;
  // Node of W carrying the uniform cofinality; empty when it is omega.
  std::optional<Node> ucf_node;
  Cofinality uniform_cofinality;
  Level1Tower induced_tower;
  // Nodes added along the induced tower, p_0 .. p_{m-1}.
  std::vector<Node> tower_nodes;
  FactorMap1 factoring_map;
  std::vector<UOrd> approximation_sequence;
  PotentialTower1 potential_tower;
};

// Requires b limit with u_1 <= b < u_{card(W)+1}.
OrdAnalysis analyze(const UOrd& b, const Level1Tree& w);

}  // namespace uctk
