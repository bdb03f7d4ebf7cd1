#include "uctk/analysis.hpp"

#include "uctk/bk_order.hpp"
#include "uctk/error.hpp"

namespace uctk {

std::string PotentialTower1::str() const {
  std::string s = "(" + tree.str() + ", (";
  for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? " " : "") + nodes[i].str();
  return s + "))";
}

namespace {

UOrd seed_of(const Level1Tree& p, const Node& n) { return UOrd::u(static_cast<unsigned>(p.rank(n)) + 1); }

// sum_{l < i} seed^{P}(p_l) * c_{l+1}
UOrd remapped_prefix(const Level1Tree& p, const std::vector<Node>& tower_nodes, const std::vector<UTerm>& terms,
                     std::size_t i) {
  UOrd r;
  for (std::size_t l = 0; l < i; ++l) r = r + UOrd::u(static_cast<unsigned>(p.rank(tower_nodes[l])) + 1, terms[l].coeff);
  return r;
}

}  // namespace

OrdAnalysis analyze(const UOrd& b, const Level1Tree& w) {
  if (b.is_countable()) throw Error("BelowOmega1", b.str() + " is below u1");
  if (!b.is_limit()) throw Error("NotALimit", b.str() + " is not a limit ordinal");
  if (b.top_level() > w.size())
    throw Error("OutOfRange", b.str() + " is not below u" + std::to_string(w.size() + 1) + " for " + w.str());

  OrdAnalysis a;
  const std::vector<UTerm>& terms = b.uterms();
  const std::size_t m = terms.size();
  for (const UTerm& t : terms) {
    a.signature.push_back(w.nodes()[t.level - 1]);
    a.signature_seeds.push_back(UOrd::u(t.level));
  }
  a.essentially_continuous = b.tail().is_zero() && terms.back().coeff == CtblOrd::natural(1);
  a.uniform_cofinality = cf_L(b);
  if (a.uniform_cofinality.kind == Cofinality::Kind::U) a.ucf_node = w.nodes()[a.uniform_cofinality.level - 1];

  // Induced tower: insert p_i into the gap of P_i matching w_i's position
  // among the signature nodes placed so far.
  std::vector<Level1Tree> trees{Level1Tree()};
  for (std::size_t i = 0; i < m; ++i) {
    std::optional<Node> lower, upper;
    std::optional<Node> lower_w, upper_w;
    for (std::size_t j = 0; j < i; ++j) {
      const Node& wj = a.signature[j];
      if (bk_less(wj, a.signature[i]) && (!lower_w || bk_less(*lower_w, wj))) {
        lower_w = wj;
        lower = a.tower_nodes[j];
      }
      if (bk_less(a.signature[i], wj) && (!upper_w || bk_less(wj, *upper_w))) {
        upper_w = wj;
        upper = a.tower_nodes[j];
      }
    }
    const Node p = gap_node(trees.back(), lower, upper);
    a.tower_nodes.push_back(p);
    trees.push_back(with_node(trees.back(), p));
  }
  a.induced_tower = validate_tower(trees);
  const Level1Tree& pm = trees.back();
  for (const Node& n : pm.nodes())
    for (std::size_t i = 0; i < m; ++i)
      if (a.tower_nodes[i] == n) a.factoring_map.images.push_back(a.signature[i]);

  a.approximation_sequence.push_back(UOrd::u(1));
  for (std::size_t i = 1; i < m; ++i) {
    // The free coordinates lie below w_{i-1}, so their supremum is the seed
    // of p_{i-1} in P_i.
    a.approximation_sequence.push_back(remapped_prefix(trees[i], a.tower_nodes, terms, i) +
                                       seed_of(trees[i], a.tower_nodes[i - 1]));
  }
  a.approximation_sequence.push_back(remapped_prefix(pm, a.tower_nodes, terms, m) + UOrd(b.tail()));

  a.potential_tower.tree = pm;
  a.potential_tower.nodes.assign(a.tower_nodes.begin(), a.tower_nodes.end());
  if (!a.essentially_continuous) {
    if (!a.ucf_node) {
      a.potential_tower.nodes.push_back(ExtNode::minus_one());
    } else {
      Node pre;
      for (std::size_t i = 0; i < m; ++i)
        if (a.signature[i] == *a.ucf_node) pre = a.tower_nodes[i];
      a.potential_tower.nodes.push_back(pre.child(static_cast<std::uint32_t>(pm.child_count(pre))));
    }
  }
  return a;
}

}  // namespace uctk
