#include "uctk/level1.hpp"

#include <algorithm>
#include <set>

#include "uctk/bk_order.hpp"
#include "uctk/error.hpp"

namespace uctk {

bool Level1Tree::contains(const Node& p) const { return std::find(nodes_.begin(), nodes_.end(), p) != nodes_.end(); }

std::size_t Level1Tree::rank(const Node& p) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), p);
  if (it == nodes_.end()) throw Error("NotInTree", p.str() + " is not a node of " + str());
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t Level1Tree::child_count(const Node& p) const {
  std::size_t c = 0;
  for (const Node& n : nodes_)
    if (n.size() == p.size() + 1 && p.is_prefix_of(n)) ++c;
  return c;
}

std::string Level1Tree::str() const {
  // Printed in lexicographic order so that the text form is canonical.
  std::vector<Node> lex = nodes_;
  std::sort(lex.begin(), lex.end());
  std::string s = "{";
  for (std::size_t i = 0; i < lex.size(); ++i) s += (i ? " " : "") + lex[i].str();
  return s + "}";
}

Level1Tree validate_level1(const std::vector<Node>& nodes) {
  const std::set<Node> set(nodes.begin(), nodes.end());
  if (set.count(Node())) throw Error("ContainsEmpty", "the empty node may not belong to a level-1 tree");
  for (const Node& t : set) {
    if (t.size() >= 2 && !set.count(t.parent()))
      throw Error("ClosureViolation", "ClosureViolation(" + t.str() + ", " + t.parent().str() + ")");
    const Node up = t.parent();
    for (std::uint32_t j = 0; j < t.last(); ++j) {
      const Node sib = up.child(j);
      if (!set.count(sib)) throw Error("ClosureViolation", "ClosureViolation(" + t.str() + ", " + sib.str() + ")");
    }
  }
  Level1Tree r;
  r.nodes_.assign(set.begin(), set.end());
  std::sort(r.nodes_.begin(), r.nodes_.end(), BkLess{});
  return r;
}

bool is_regular(const Level1Tree& p) { return !p.contains(Node{1}); }

Level1Tree with_node(const Level1Tree& p, const Node& t) {
  std::vector<Node> n = p.nodes();
  n.push_back(t);
  return validate_level1(n);
}

bool is_subtree(const Level1Tree& p, const Level1Tree& w) {
  for (const Node& n : p.nodes())
    if (!w.contains(n)) return false;
  return true;
}

std::vector<Node> addable_nodes(const Level1Tree& p) {
  std::vector<Node> out;
  out.push_back(Node().child(static_cast<std::uint32_t>(p.child_count(Node()))));
  for (const Node& n : p.nodes()) out.push_back(n.child(static_cast<std::uint32_t>(p.child_count(n))));
  std::sort(out.begin(), out.end(), BkLess{});
  return out;
}

std::vector<Node> regular_addable_nodes(const Level1Tree& p) {
  std::vector<Node> out;
  for (const Node& a : addable_nodes(p))
    if (!(a.size() == 1 && a.last() >= 1)) out.push_back(a);
  return out;
}

Node gap_node(const Level1Tree& p, const std::optional<Node>& lower, const std::optional<Node>& upper) {
  std::vector<Node> hits;
  for (const Node& a : addable_nodes(p)) {
    if (lower && !bk_less(*lower, a)) continue;
    if (upper && !bk_less(a, *upper)) continue;
    hits.push_back(a);
  }
  if (hits.size() != 1) throw Error("InternalError", "gap of " + p.str() + " is not realized by a unique addable node");
  return hits.front();
}

std::string Rep1Element::str() const {
  return n ? "(" + node.str() + ", " + std::to_string(*n) + ")" : "(" + node.str() + ")";
}

bool in_rep(const Level1Tree& p, const Rep1Element& x) { return p.contains(x.node); }

std::strong_ordering rep_compare(const Level1Tree& p, const Rep1Element& x, const Rep1Element& y) {
  if (!in_rep(p, x)) throw Error("NotInRep", x.str() + " is not in rep(" + p.str() + ")");
  if (!in_rep(p, y)) throw Error("NotInRep", y.str() + " is not in rep(" + p.str() + ")");
  std::strong_ordering c = bk_compare(x.node, y.node);
  if (c != 0) return c;
  if (x.n && y.n) return *x.n <=> *y.n;
  if (x.n.has_value() == y.n.has_value()) return std::strong_ordering::equal;
  // (p, n) lengthens (p).
  return x.n ? std::strong_ordering::less : std::strong_ordering::greater;
}

CtblOrd rep_order_type(const Level1Tree& p) {
  // Each node p contributes the block (p,0) < (p,1) < ... < (p).
  CtblOrd total;
  for (std::size_t i = 0; i < p.size(); ++i) total = total + CtblOrd::omega() + CtblOrd::natural(1);
  return total;
}

std::vector<Desc1> descriptions(const Level1Tree& p) {
  std::vector<Desc1> out;
  for (const Node& n : p.nodes()) out.push_back(Desc1{n});
  out.push_back(Desc1{});
  return out;
}

std::size_t desc_rank(const Level1Tree& p, const Desc1& d) {
  if (d.is_constant()) return p.size();
  if (!p.contains(*d.node)) throw Error("NotADescription", d.str() + " is not a description of " + p.str());
  return p.rank(*d.node);
}

UOrd seed(const Level1Tree& p, const Desc1& d) { return UOrd::u(static_cast<unsigned>(desc_rank(p, d)) + 1); }

std::string FactorMap1::str(const Level1Tree& source) const {
  std::string s = "{";
  for (std::size_t i = 0; i < images.size(); ++i) s += source.nodes()[i].str() + "->" + images[i].str() + ", ";
  return s + "()->()}";
}

bool is_factoring(const FactorMap1& sigma, const Level1Tree& p, const Level1Tree& w) {
  if (sigma.images.size() != p.size()) return false;
  for (std::size_t i = 0; i < sigma.images.size(); ++i) {
    if (!w.contains(sigma.images[i])) return false;
    if (i > 0 && !bk_less(sigma.images[i - 1], sigma.images[i])) return false;
  }
  return true;
}

std::vector<FactorMap1> factorings(const Level1Tree& p, const Level1Tree& w) {
  std::vector<FactorMap1> out;
  const std::size_t k = p.size(), n = w.size();
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    FactorMap1 f;
    for (std::size_t i : idx) f.images.push_back(w.nodes()[i]);
    out.push_back(std::move(f));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

bool factor_exists(const Level1Tree& p, const Level1Tree& w) { return !factorings(p, w).empty(); }

bool strict_factor_exists(const Level1Tree& p, const Level1Tree& w) {
  for (const FactorMap1& f : factorings(p, w)) {
    const std::optional<Node> top = f.images.empty() ? std::nullopt : std::optional<Node>(f.images.back());
    for (const Node& x : w.nodes())
      if (!top || bk_less(*top, x)) return true;
  }
  return false;
}

IndexMap factor_to_shift(const FactorMap1& sigma, const Level1Tree& p, const Level1Tree& w) {
  if (!is_factoring(sigma, p, w)) throw Error("NotAFactoring", sigma.str(p) + " does not factor (" + p.str() + ", " + w.str() + ")");
  std::vector<unsigned> im;
  for (const Node& x : sigma.images) im.push_back(static_cast<unsigned>(w.rank(x)) + 1);
  im.push_back(static_cast<unsigned>(w.size()) + 1);
  return IndexMap(static_cast<unsigned>(w.size()) + 1, std::move(im));
}

Level1Tower validate_tower(const std::vector<Level1Tree>& trees) {
  Level1Tower t;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (trees[i].size() != i)
      throw Error("CardinalityMismatch", "CardinalityMismatch(" + std::to_string(i) + "): card is " + std::to_string(trees[i].size()));
    if (i > 0 && !is_subtree(trees[i - 1], trees[i]))
      throw Error("NotSubtree", "NotSubtree(" + std::to_string(i - 1) + "," + std::to_string(i) + ")");
    t.trees.push_back(trees[i]);
    t.regular.push_back(is_regular(trees[i]));
  }
  return t;
}

bool respects_level1(const Level1Tree& p, const Assignment1& alpha) {
  if (alpha.size() != p.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto it = alpha.find(p.nodes()[i]);
    if (it == alpha.end() || !it->second.is_limit()) return false;
    if (i > 0 && !(alpha.at(p.nodes()[i - 1]) < it->second)) return false;
  }
  return true;
}

bool s1_member(const std::vector<Level1Tree>& towers, const std::vector<CtblOrd>& alphas) {
  std::vector<Level1Tree> full = towers;
  if (full.empty() || !full.front().empty()) full.insert(full.begin(), Level1Tree());
  const Level1Tower t = validate_tower(full);
  if (alphas.size() != full.size() - 1)
    throw Error("LengthMismatch", std::to_string(full.size() - 1) + " trees but " + std::to_string(alphas.size()) + " ordinals");
  for (std::size_t i = 1; i < full.size(); ++i)
    if (!t.regular[i]) throw Error("NotRegular", "NotRegular(" + std::to_string(i) + ")");
  Assignment1 beta;
  for (std::size_t i = 1; i < full.size(); ++i)
    for (const Node& n : full[i].nodes())
      if (!full[i - 1].contains(n)) beta[n] = alphas[i - 1];
  return respects_level1(full.back(), beta);
}

IndexMap inclusion_shift(const Level1Tree& p, const Level1Tree& p2) {
  if (!is_subtree(p, p2)) throw Error("NotSubtree", p.str() + " is not a subtree of " + p2.str());
  std::vector<unsigned> im;
  for (const Node& n : p.nodes()) im.push_back(static_cast<unsigned>(p2.rank(n)) + 1);
  im.push_back(static_cast<unsigned>(p2.size()) + 1);
  return IndexMap(static_cast<unsigned>(p2.size()) + 1, std::move(im));
}

namespace {

void check_embed_range(const Level1Tree& p, const UOrd& b) {
  if (b.top_level() > p.size() + 1)
    throw Error("OutOfRange", b.str() + " exceeds the seeds of " + p.str());
}

}  // namespace

UOrd tree_embed(const Level1Tree& p, const Level1Tree& p2, const UOrd& b) {
  const IndexMap sigma = inclusion_shift(p, p2);
  check_embed_range(p, b);
  return apply_shift(sigma, b);
}

UOrd tree_embed_sup(const Level1Tree& p, const Level1Tree& p2, const UOrd& b) {
  const IndexMap sigma = inclusion_shift(p, p2);
  check_embed_range(p, b);
  return apply_shift_sup(sigma, b);
}

}  // namespace uctk
