#include "uctk/enumerate.hpp"

#include <set>

namespace uctk {

namespace {

template <typename T, typename Grow>
std::vector<std::vector<T>> by_size(std::vector<T> start, std::size_t steps, Grow grow) {
  std::vector<std::vector<T>> layers{std::move(start)};
  for (std::size_t i = 0; i < steps; ++i) {
    std::set<T> next;
    for (const T& t : layers.back()) grow(t, next);
    layers.emplace_back(next.begin(), next.end());
  }
  return layers;
}

}  // namespace

std::vector<Level1Tree> level1_trees(std::size_t max_nodes) {
  auto layers = by_size<Level1Tree>({Level1Tree()}, max_nodes, [](const Level1Tree& p, std::set<Level1Tree>& out) {
    for (const Node& a : addable_nodes(p)) out.insert(with_node(p, a));
  });
  std::vector<Level1Tree> all;
  for (auto& l : layers) all.insert(all.end(), l.begin(), l.end());
  return all;
}

std::vector<Level1Tree> regular_level1_trees(std::size_t max_nodes) {
  std::vector<Level1Tree> out;
  for (Level1Tree& p : level1_trees(max_nodes))
    if (is_regular(p)) out.push_back(std::move(p));
  return out;
}

std::vector<Level2Tree> level2_trees(std::size_t max_card) {
  if (max_card == 0) return {};
  const Level2Tree root = validate_level2({{NodeSeq{}, PartialLevel1Tree{Level1Tree(), ExtNode(Node{0})}}});
  auto layers = by_size<Level2Tree>({root}, max_card - 1, [](const Level2Tree& t, std::set<Level2Tree>& out) {
    for (const auto& [q, v] : t.entries()) {
      if (v.degree() == 0) continue;
      const Level1Tree p = completion_le1(v);
      std::vector<ExtNode> labels{ExtNode::minus_one()};
      for (const Node& a : regular_addable_nodes(p)) labels.emplace_back(a);
      for (const Node& a : addable_nodes(t.children(q))) {
        for (const ExtNode& l : labels) {
          Level2Tree::Entries e = t.entries();
          e[seq_child(q, a)] = PartialLevel1Tree{p, l};
          out.insert(validate_level2(e));
        }
      }
    }
  });
  std::vector<Level2Tree> all;
  for (auto& l : layers) all.insert(all.end(), l.begin(), l.end());
  return all;
}

std::vector<LevelLe2Tree> level_le2_trees(std::size_t max_card) {
  std::vector<LevelLe2Tree> out;
  if (max_card == 0) return out;
  const auto ones = level1_trees(max_card - 1);
  const auto twos = level2_trees(max_card);
  for (std::size_t card = 1; card <= max_card; ++card)
    for (const Level1Tree& t1 : ones)
      for (const Level2Tree& t2 : twos)
        if (t1.size() + t2.card() == card) out.push_back(LevelLe2Tree{t1, t2});
  return out;
}

std::vector<PartialLevel1Tree> partial_le1_trees(std::size_t max_nodes) {
  std::vector<PartialLevel1Tree> out;
  for (const Level1Tree& p : regular_level1_trees(max_nodes)) {
    if (!p.empty()) out.push_back(PartialLevel1Tree{p, ExtNode::minus_one()});
    if (p.size() + 1 > max_nodes) continue;
    for (const Node& a : regular_addable_nodes(p)) out.push_back(PartialLevel1Tree{p, ExtNode(a)});
  }
  return out;
}

std::vector<PartialLevelLe2Tree> partial_le2_extensions(const LevelLe2Tree& base) {
  std::vector<PartialLevelLe2Tree> out{PartialLevelLe2Tree{base, DomKey{0, {}}, Level1Tree()}};
  for (const Node& a : addable_nodes(base.t1)) out.push_back(PartialLevelLe2Tree{base, DomKey{1, {a}}, Level1Tree()});
  for (const auto& [q, v] : base.t2.entries()) {
    if (v.degree() == 0) continue;
    const Level1Tree p = completion_le1(v);
    for (const Node& a : addable_nodes(base.t2.children(q)))
      out.push_back(validate_partial_le2(base, DomKey{2, seq_child(q, a)}, p));
  }
  return out;
}

std::vector<Level3Tree> level3_trees(std::size_t max_card) {
  std::vector<Level3Tree> all;
  if (max_card == 0) return all;
  auto extend = [](const Level3Tree& r, std::set<std::string>& seen, std::vector<Level3Tree>& out) {
    std::vector<NodeSeq> parents{NodeSeq{}};
    for (const auto& [k, v] : r.entries()) parents.push_back(k);
    for (const NodeSeq& up : parents) {
      std::vector<LevelLe2Tree> bases;
      if (up.empty()) {
        bases.push_back(card_one_le2());
      } else if (r.at(up).degree() > 0) {
        bases = completion_le2(r.at(up));
      }
      for (const Node& a : addable_nodes(r.children(up))) {
        for (const LevelLe2Tree& b : bases) {
          for (const PartialLevelLe2Tree& pt : partial_le2_extensions(b)) {
            Level3Tree::Entries e = r.entries();
            e[seq_child(up, a)] = pt;
            Level3Tree t = validate_level3(e);
            if (seen.insert(t.str()).second) out.push_back(std::move(t));
          }
        }
      }
    }
  };
  std::vector<Level3Tree> layer;
  std::set<std::string> seen;
  extend(Level3Tree(), seen, layer);
  for (std::size_t card = 1; card <= max_card; ++card) {
    all.insert(all.end(), layer.begin(), layer.end());
    if (card == max_card) break;
    std::vector<Level3Tree> next;
    seen.clear();
    for (const Level3Tree& r : layer) extend(r, seen, next);
    layer = std::move(next);
  }
  return all;
}

}  // namespace uctk
