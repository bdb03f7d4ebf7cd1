#pragma once

#include <vector>

#include "uctk/level1.hpp"
#include "uctk/level2.hpp"
#include "uctk/level3.hpp"

namespace uctk {

// All level-1 trees with at most max_nodes nodes, grouped by size and
// listed in a fixed order within each size. The empty tree comes first.
std::vector<Level1Tree> level1_trees(std::size_t max_nodes);
std::vector<Level1Tree> regular_level1_trees(std::size_t max_nodes);

// Level-2 trees of cardinality 1..max_card.
std::vector<Level2Tree> level2_trees(std::size_t max_card);
// Level <=2 trees whose domain has at most max_card elements.
std::vector<LevelLe2Tree> level_le2_trees(std::size_t max_card);

// Partial level <=1 trees (P, t) with card(P) + degree <= max_nodes.
std::vector<PartialLevel1Tree> partial_le1_trees(std::size_t max_nodes);
// Every partial level <=2 tree over the given base.
std::vector<PartialLevelLe2Tree> partial_le2_extensions(const LevelLe2Tree& base);

// Level-3 trees with 1..max_card domain nodes.
std::vector<Level3Tree> level3_trees(std::size_t max_card);

}  // namespace uctk
