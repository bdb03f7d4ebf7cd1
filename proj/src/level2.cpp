#include "uctk/level2.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "uctk/bk_order.hpp"
#include "uctk/error.hpp"

namespace uctk {

PartialLevel1Tree validate_partial_le1(const Level1Tree& base, const ExtNode& node) {
  if (!is_regular(base)) throw Error("InvalidPartialTree", base.str() + " is not regular");
  if (node.is_minus_one()) {
    if (base.empty()) throw Error("InvalidPartialTree", "(" + base.str() + ", -1): degree 0 needs a nonempty tree");
    return PartialLevel1Tree{base, node};
  }
  if (base.contains(node.node())) throw Error("InvalidPartialTree", node.str() + " already belongs to " + base.str());
  Level1Tree ext;
  try {
    ext = with_node(base, node.node());
  } catch (const Error& e) {
    throw Error("InvalidPartialTree", "(" + base.str() + ", " + node.str() + "): " + e.what());
  }
  if (!is_regular(ext)) throw Error("InvalidPartialTree", "(" + base.str() + ", " + node.str() + ") is not regular");
  return PartialLevel1Tree{base, node};
}

Level1Tree completion_le1(const PartialLevel1Tree& pt) {
  if (pt.node.is_minus_one()) throw Error("DegreeZeroHasNoCompletion", pt.str() + " has no completion");
  return with_node(pt.base, pt.node.node());
}

PartialTower1 validate_partial_tower_le1(const std::vector<PartialLevel1Tree>& steps,
                                         const std::optional<Level1Tree>& completed) {
  PartialTower1 t;
  if (steps.empty()) {
    if (!completed || !completed->empty()) throw Error("BadFirstEntry", "an empty tower must be completed by the empty tree");
    t.completed = completed;
    return t;
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      validate_partial_le1(steps[i].base, steps[i].node);
    } catch (const Error& e) {
      throw Error(i == 0 ? "BadFirstEntry" : "NotCompletionAt", "entry " + std::to_string(i) + ": " + e.what());
    }
    if (i == 0) {
      if (!steps[0].base.empty()) throw Error("BadFirstEntry", "the first entry must have cardinality 1");
      continue;
    }
    if (steps[i - 1].degree() == 0 || !(completion_le1(steps[i - 1]) == steps[i].base))
      throw Error("NotCompletionAt", "NotCompletionAt(" + std::to_string(i) + ")");
  }
  if (completed) {
    if (steps.back().degree() == 0 || !(completion_le1(steps.back()) == *completed))
      throw Error("NotCompletionAt", "NotCompletionAt(" + std::to_string(steps.size()) + ")");
  }
  t.steps = steps;
  t.completed = completed;
  return t;
}

PotentialTower1 compress(const PartialTower1& t) {
  PotentialTower1 p;
  for (const PartialLevel1Tree& s : t.steps) p.nodes.push_back(s.node);
  p.tree = t.completed ? *t.completed : t.steps.back().base;
  return p;
}

PartialTower1 expand(const PotentialTower1& pt) {
  const bool cont = pt.tree.size() == pt.nodes.size();
  if (!cont && pt.tree.size() + 1 != pt.nodes.size())
    throw Error("BadFirstEntry", "potential tower " + pt.str() + " has mismatched lengths");
  std::vector<PartialLevel1Tree> steps;
  Level1Tree cur;
  for (std::size_t i = 0; i < pt.nodes.size(); ++i) {
    steps.push_back(PartialLevel1Tree{cur, pt.nodes[i]});
    if (i + 1 < pt.nodes.size() || cont) {
      if (pt.nodes[i].is_minus_one()) throw Error("NotCompletionAt", "NotCompletionAt(" + std::to_string(i + 1) + ")");
      cur = with_node(cur, pt.nodes[i].node());
    }
  }
  if (!(cur == pt.tree)) throw Error("NotCompletionAt", "potential tower " + pt.str() + " does not end at its tree");
  return validate_partial_tower_le1(steps, cont ? std::optional<Level1Tree>(cur) : std::nullopt);
}

const PartialLevel1Tree& Level2Tree::at(const NodeSeq& q) const {
  auto it = entries_.find(q);
  if (it == entries_.end()) throw Error("NotInDomain", seq_str(q) + " is not in the domain");
  return it->second;
}

PotentialTower1 Level2Tree::bracket(const DomStar& q) const {
  PotentialTower1 p;
  for (std::size_t l = 0; l <= q.seq.size(); ++l) p.nodes.push_back(node(seq_prefix(q.seq, l)));
  p.tree = q.minus_one ? completion_le1(at(q.seq)) : tree(q.seq);
  return p;
}

Level1Tree Level2Tree::children(const NodeSeq& q) const {
  std::vector<Node> kids;
  for (const auto& [k, v] : entries_)
    if (k.size() == q.size() + 1 && std::equal(q.begin(), q.end(), k.begin())) kids.push_back(k.back());
  return validate_level1(kids);
}

std::vector<DomStar> Level2Tree::dom_star() const {
  std::vector<DomStar> out;
  for (const auto& [k, v] : entries_) {
    out.push_back(DomStar{k, false});
    out.push_back(DomStar{k, true});
  }
  std::sort(out.begin(), out.end(), BkLess{});
  return out;
}

namespace {

std::vector<DomStar> sibling_side(const Level2Tree& t, const NodeSeq& q, const std::optional<Level1Tree>& tree_of_q,
                                  bool below) {
  if (q.empty()) throw Error("NotInDomain", "the root has no siblings");
  const NodeSeq up = seq_parent(q);
  const Level1Tree target = tree_of_q ? *tree_of_q : t.tree(q);
  std::vector<DomStar> out{DomStar{up, below}};
  const Level1Tree siblings = t.children(up);
  for (const Node& a : siblings.nodes()) {
    const NodeSeq s = seq_child(up, a);
    if (!(t.tree(s) == target)) continue;
    if (below ? bk_less(a, q.back()) : bk_less(q.back(), a)) out.push_back(DomStar{s, false});
  }
  std::sort(out.begin(), out.end(), BkLess{});
  return out;
}

}  // namespace

std::vector<DomStar> Level2Tree::minus(const NodeSeq& q, const std::optional<Level1Tree>& tree_of_q) const {
  return sibling_side(*this, q, tree_of_q, true);
}

std::vector<DomStar> Level2Tree::plus(const NodeSeq& q, const std::optional<Level1Tree>& tree_of_q) const {
  return sibling_side(*this, q, tree_of_q, false);
}

std::string Level2Tree::str() const {
  std::string s;
  for (const auto& [k, v] : entries_) {
    if (!s.empty()) s += "; ";
    s += seq_str(k) + " -> " + v.str();
  }
  return s;
}

Level2Tree validate_level2(const Level2Tree::Entries& entries) {
  auto root = entries.find(NodeSeq{});
  if (root == entries.end()) throw Error("RootNotCanonical", "the empty sequence must be in the domain");
  if (!(root->second == PartialLevel1Tree{Level1Tree(), ExtNode(Node{0})}))
    throw Error("RootNotCanonical", "the root must carry ({}, (0)), found " + root->second.str());
  for (const auto& [q, v] : entries) {
    if (q.empty()) continue;
    if (!entries.count(seq_parent(q))) throw Error("DomainNotTree", "parent of " + seq_str(q) + " is missing");
  }
  Level2Tree t;
  t.entries_ = entries;
  for (const auto& [q, v] : entries) {
    try {
      t.children(q);
    } catch (const Error& e) {
      throw Error("DomainNotTree", "children of " + seq_str(q) + ": " + e.what());
    }
    if (q.empty()) continue;
    const std::string where = "TowerViolation(" + seq_str(q) + ")";
    try {
      validate_partial_le1(v.base, v.node);
    } catch (const Error& e) {
      throw Error("TowerViolation", where + ": " + e.what());
    }
    const PartialLevel1Tree& up = entries.at(seq_parent(q));
    if (up.degree() == 0) throw Error("TowerViolation", where + ": parent has degree 0");
    if (!(completion_le1(up) == v.base))
      throw Error("TowerViolation", where + ": tree must be the completion " + completion_le1(up).str());
  }
  return t;
}

std::string LevelLe2Tree::str() const { return "<" + t1.str() + " | " + t2.str() + ">"; }

TypicalTrees typical_trees() {
  const PartialLevel1Tree root{Level1Tree(), ExtNode(Node{0})};
  const Level1Tree one = validate_level1({Node{0}});
  Level2Tree base = validate_level2({{NodeSeq{}, root}});
  TypicalTrees t;
  t.q0 = LevelLe2Tree{Level1Tree(), base};
  t.q1 = LevelLe2Tree{one, base};
  t.q20 = LevelLe2Tree{Level1Tree(), validate_level2({{NodeSeq{}, root}, {NodeSeq{Node{0}}, {one, ExtNode()}}})};
  t.q21 = LevelLe2Tree{Level1Tree(),
                       validate_level2({{NodeSeq{}, root}, {NodeSeq{Node{0}}, {one, ExtNode(Node{0, 0})}}})};
  return t;
}

std::string DomKey::str() const {
  if (level == 0) return "(0, -1)";
  if (level == 1) return "(1, " + path.front().str() + ")";
  return "(2, " + seq_str(path) + ")";
}

std::vector<DomKey> domain(const LevelLe2Tree& q) {
  std::vector<DomKey> out;
  for (const Node& n : q.t1.nodes()) out.push_back(DomKey{1, {n}});
  std::vector<NodeSeq> d2;
  for (const auto& [k, v] : q.t2.entries()) d2.push_back(k);
  std::sort(d2.begin(), d2.end(), BkLess{});
  for (const NodeSeq& k : d2) out.push_back(DomKey{2, k});
  return out;
}

Le2Description::Kind Le2Description::kind(const LevelLe2Tree& t) const {
  if (level == 1) return Kind::Level1;
  if (q.minus_one) return Kind::Continuous;
  return tree == t.t2.tree(q.seq) ? Kind::Discontinuous : Kind::Extended;
}

std::string Le2Description::str() const {
  if (level == 1) return "(1, " + node1.str() + ")";
  std::string s = "(2, (" + q.str() + ", " + tree.str() + ", (";
  for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? " " : "") + nodes[i].str();
  return s + ")))";
}

void check_description(const LevelLe2Tree& t, const Le2Description& d) {
  const std::string what = d.str() + " is not an extended description of " + t.str();
  if (d.level == 1) {
    if (d.node1.node && !t.t1.contains(*d.node1.node)) throw Error("BadDescription", what);
    return;
  }
  if (d.level != 2 || !t.t2.contains(d.q.seq)) throw Error("BadDescription", what);
  const PotentialTower1 given{d.tree, d.nodes};
  if (d.q.minus_one || !(given == t.t2.bracket(d.q))) {
    // Continuous descriptions and extended non-descriptions share Q[q^(-1)].
    if (t.t2.at(d.q.seq).degree() == 0 || !(given == t.t2.bracket(DomStar{d.q.seq, true})))
      throw Error("BadDescription", what);
  }
}

bool is_regular_description(const LevelLe2Tree& t, const Le2Description& d) {
  check_description(t, d);
  return d.kind(t) != Le2Description::Kind::Continuous;
}

namespace {

// Interleaved (seed^P_{p_0}, q(0), ...) used to order descriptions that
// share a tree.
std::vector<std::variant<UOrd, ExtNode>> description_point(const Le2Description& d) {
  std::vector<std::variant<UOrd, ExtNode>> out;
  std::vector<ExtNode> qs(d.q.seq.begin(), d.q.seq.end());
  if (d.q.minus_one) qs.push_back(ExtNode::minus_one());
  for (std::size_t i = 0; i < qs.size(); ++i) {
    out.emplace_back(seed(d.tree, Desc1{d.nodes[i].node()}));
    out.emplace_back(qs[i]);
  }
  return out;
}

std::strong_ordering entry_compare(const std::variant<UOrd, ExtNode>& a, const std::variant<UOrd, ExtNode>& b) {
  if (a.index() != b.index()) throw Error("InternalError", "interleaved entries of different kinds");
  if (a.index() == 0) return std::get<0>(a) <=> std::get<0>(b);
  return bk_compare(std::get<1>(a), std::get<1>(b));
}

}  // namespace

std::strong_ordering description_compare(const Le2Description& a, const Le2Description& b) {
  if (a.level != b.level) return a.level <=> b.level;
  if (a.level == 1) {
    if (a.node1.is_constant() || b.node1.is_constant())
      return a.node1.is_constant() == b.node1.is_constant()
                 ? std::strong_ordering::equal
                 : (a.node1.is_constant() ? std::strong_ordering::greater : std::strong_ordering::less);
    return bk_compare(*a.node1.node, *b.node1.node);
  }
  if (!(a.tree == b.tree)) return a.tree <=> b.tree;
  const auto pa = description_point(a), pb = description_point(b);
  return bk_compare(std::span<const std::variant<UOrd, ExtNode>>(pa), std::span<const std::variant<UOrd, ExtNode>>(pb),
                    entry_compare);
}

std::vector<Le2Description> q_descriptions(const LevelLe2Tree& t, bool include_extended) {
  std::vector<Le2Description> out;
  for (const Desc1& d : descriptions(t.t1)) {
    Le2Description e;
    e.level = 1;
    e.node1 = d;
    out.push_back(e);
  }
  std::vector<Le2Description> ext;
  for (const DomStar& q : t.t2.dom_star()) {
    if (q.minus_one && t.t2.at(q.seq).degree() == 0) continue;
    const PotentialTower1 b = t.t2.bracket(q);
    Le2Description e;
    e.q = q;
    e.tree = b.tree;
    e.nodes = b.nodes;
    out.push_back(e);
    if (q.minus_one && include_extended) {
      e.q.minus_one = false;
      ext.push_back(e);
    }
  }
  out.insert(out.end(), ext.begin(), ext.end());
  return out;
}

std::string Rep2Element::str() const {
  if (level == 1) return "1:" + rep1.str();
  std::string s = "2:(";
  std::vector<ExtNode> qs(q.seq.begin(), q.seq.end());
  if (q.minus_one) qs.push_back(ExtNode::minus_one());
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) s += ", ";
    s += (i < alphas.size() ? alphas[i].str() : "?") + ", " + qs[i].str();
  }
  return s + ")";
}

bool valid_rep2(const LevelLe2Tree& t, const Rep2Element& x) {
  if (x.level == 1) return in_rep(t.t1, x.rep1);
  if (x.level != 2 || !t.t2.contains(x.q.seq)) return false;
  const std::size_t k = x.q.seq.size();
  if (x.alphas.size() != k + (x.q.minus_one ? 1 : 0)) return false;
  Assignment1 alpha;
  for (std::size_t i = 0; i < k; ++i) alpha[t.t2.node(seq_prefix(x.q.seq, i)).node()] = x.alphas[i];
  if (!x.q.minus_one) return respects_level1(t.t2.tree(x.q.seq), alpha);
  const PartialLevel1Tree& last = t.t2.at(x.q.seq);
  if (!respects_level1(last.base, alpha)) return false;
  if (last.degree() == 0) return x.alphas.back().is_natural();
  alpha[last.node.node()] = x.alphas.back();
  return respects_level1(completion_le1(last), alpha);
}

std::strong_ordering rep2_compare(const LevelLe2Tree& t, const Rep2Element& x, const Rep2Element& y) {
  if (!valid_rep2(t, x)) throw Error("InvalidElement", x.str() + " is not in rep(" + t.str() + ")");
  if (!valid_rep2(t, y)) throw Error("InvalidElement", y.str() + " is not in rep(" + t.str() + ")");
  if (x.level != y.level) return x.level <=> y.level;
  if (x.level == 1) return rep_compare(t.t1, x.rep1, y.rep1);
  using Entry = std::variant<CtblOrd, ExtNode>;
  auto interleave = [](const Rep2Element& e) {
    std::vector<Entry> out;
    std::vector<ExtNode> qs(e.q.seq.begin(), e.q.seq.end());
    if (e.q.minus_one) qs.push_back(ExtNode::minus_one());
    for (std::size_t i = 0; i < qs.size(); ++i) {
      out.emplace_back(e.alphas[i]);
      out.emplace_back(qs[i]);
    }
    return out;
  };
  const auto a = interleave(x), b = interleave(y);
  return bk_compare(std::span<const Entry>(a), std::span<const Entry>(b), [](const Entry& u, const Entry& v) {
    if (u.index() == 0) return std::get<0>(u) <=> std::get<0>(v);
    return bk_compare(std::get<1>(u), std::get<1>(v));
  });
}

namespace {

void check_entries(const LevelLe2Tree& t, const OrdTuple2& beta) {
  const std::vector<DomKey> dom = domain(t);
  for (const DomKey& k : dom)
    if (!beta.count(k)) throw Error("MissingEntry", "no entry at " + k.str());
  for (const auto& [k, v] : beta)
    if (std::find(dom.begin(), dom.end(), k) == dom.end()) throw Error("MissingEntry", "entry at " + k.str() + " is outside the domain");
}

RespectVerdict fail(std::string clause) { return RespectVerdict{false, std::move(clause)}; }

}  // namespace

RespectVerdict respects_le2(const LevelLe2Tree& t, const OrdTuple2& beta) {
  check_entries(t, beta);
  Assignment1 level1;
  for (const Node& n : t.t1.nodes()) {
    const UOrd& b = beta.at(DomKey{1, {n}});
    if (!b.is_countable()) return fail("1: level-1 entry at " + n.str() + " is not countable");
    level1[n] = b.tail();
  }
  if (!respects_level1(t.t1, level1)) return fail("1: level-1 entries do not respect " + t.t1.str());

  std::vector<NodeSeq> dom2;
  for (const auto& [k, v] : t.t2.entries()) dom2.push_back(k);
  std::sort(dom2.begin(), dom2.end(), BkLess{});
  for (const NodeSeq& q : dom2) {
    const UOrd& b = beta.at(DomKey{2, q});
    if (q.empty()) {
      if (!(b == UOrd::u(1))) return fail("2: entry at () must be u1, found " + b.str());
      continue;
    }
    OrdAnalysis a;
    try {
      a = analyze(b, t.t2.tree(q));
    } catch (const Error& e) {
      return fail("2: " + seq_str(q) + ": " + e.code() + ": " + e.what());
    }
    const PotentialTower1 want = t.t2.bracket(DomStar{q, false});
    if (!(a.potential_tower == want))
      return fail("2: " + seq_str(q) + ": potential tower " + a.potential_tower.str() + " != " + want.str());
    for (std::size_t l = 0; l <= q.size(); ++l) {
      const UOrd& anc = beta.at(DomKey{2, seq_prefix(q, l)});
      if (!(a.approximation_sequence.at(l) == anc))
        return fail("2: " + seq_str(q) + ": approximation " + std::to_string(l) + " is " +
                    a.approximation_sequence[l].str() + ", entry is " + anc.str());
    }
  }
  for (const NodeSeq& q : dom2) {
    const Level1Tree kids = t.t2.children(q);
    for (std::size_t i = 1; i < kids.size(); ++i) {
      const UOrd& lo = beta.at(DomKey{2, seq_child(q, kids.nodes()[i - 1])});
      const UOrd& hi = beta.at(DomKey{2, seq_child(q, kids.nodes()[i])});
      if (!(lo < hi))
        return fail("3: children " + kids.nodes()[i - 1].str() + " and " + kids.nodes()[i].str() + " of " + seq_str(q) +
                    " are out of order");
    }
  }
  return RespectVerdict{};
}

RespectVerdict weakly_respects_le2(const LevelLe2Tree& t, const OrdTuple2& beta) {
  check_entries(t, beta);
  for (const auto& [q, v] : t.t2.entries()) {
    const UOrd& b = beta.at(DomKey{2, q});
    if (q.empty()) {
      if (!(b == UOrd::u(1))) return fail("entry at () must be u1, found " + b.str());
      continue;
    }
    const NodeSeq up = seq_parent(q);
    UOrd bound;
    try {
      bound = tree_embed(t.t2.tree(up), t.t2.tree(q), beta.at(DomKey{2, up}));
    } catch (const Error& e) {
      return fail(seq_str(q) + ": " + e.code() + ": " + e.what());
    }
    if (!(b < bound)) return fail(seq_str(q) + ": " + b.str() + " is not below " + bound.str());
  }
  return RespectVerdict{};
}

UOrd evaluate_description(const LevelLe2Tree& t, const OrdTuple2& beta, const Le2Description& d) {
  const RespectVerdict v = respects_le2(t, beta);
  if (!v) throw Error("NotRespecting", "tuple does not respect " + t.str() + ": " + v.clause);
  check_description(t, d);
  if (d.level == 1) {
    if (d.node1.is_constant()) throw Error("BadDescription", "the constant level-1 description has no tuple entry");
    return beta.at(DomKey{1, {*d.node1.node}});
  }
  const UOrd& bq = beta.at(DomKey{2, d.q.seq});
  switch (d.kind(t)) {
    case Le2Description::Kind::Discontinuous: return bq;
    case Le2Description::Kind::Extended: return tree_embed(t.t2.tree(d.q.seq), d.tree, bq);
    case Le2Description::Kind::Continuous: return tree_embed_sup(t.t2.tree(d.q.seq), d.tree, bq);
    default: break;
  }
  throw Error("BadDescription", d.str());
}

std::vector<LevelLe2Tree> trees_with_domain(const DomainShape& shape) {
  std::set<NodeSeq> dom(shape.dom2.begin(), shape.dom2.end());
  if (!dom.count(NodeSeq{})) throw Error("DomainNotTree", "the level-2 domain must contain ()");
  std::vector<NodeSeq> order(dom.begin(), dom.end());
  std::stable_sort(order.begin(), order.end(), [](const NodeSeq& a, const NodeSeq& b) { return a.size() < b.size(); });
  for (const NodeSeq& q : order)
    if (!q.empty() && !dom.count(seq_parent(q))) throw Error("DomainNotTree", "parent of " + seq_str(q) + " is missing");
  auto has_children = [&](const NodeSeq& q) {
    for (const NodeSeq& s : order)
      if (s.size() == q.size() + 1 && std::equal(q.begin(), q.end(), s.begin())) return true;
    return false;
  };

  std::vector<LevelLe2Tree> out;
  Level2Tree::Entries cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == order.size()) {
      out.push_back(LevelLe2Tree{shape.t1, validate_level2(cur)});
      return;
    }
    const NodeSeq& q = order[i];
    if (q.empty()) {
      cur[q] = PartialLevel1Tree{Level1Tree(), ExtNode(Node{0})};
      go(i + 1);
      return;
    }
    const Level1Tree base = completion_le1(cur.at(seq_parent(q)));
    std::vector<ExtNode> options;
    if (!has_children(q)) options.push_back(ExtNode::minus_one());
    for (const Node& a : regular_addable_nodes(base)) options.emplace_back(a);
    for (const ExtNode& o : options) {
      cur[q] = PartialLevel1Tree{base, o};
      go(i + 1);
    }
    cur.erase(q);
  };
  go(0);
  return out;
}

LevelLe2Tree recover_tree(const DomainShape& shape, const OrdTuple2& beta) {
  std::vector<LevelLe2Tree> found;
  for (const LevelLe2Tree& t : trees_with_domain(shape))
    if (respects_le2(t, beta)) found.push_back(t);
  if (found.empty()) throw Error("NoTreeFound", "no level <=2 tree on this domain is respected by the tuple");
  if (found.size() > 1)
    throw Error("MultipleFound", "tuple respects both " + found[0].str() + " and " + found[1].str());
  return found.front();
}

void validate_level2_tower(const std::vector<Level2Tree>& towers) {
  for (std::size_t i = 0; i < towers.size(); ++i) {
    if (towers[i].card() != i + 1)
      throw Error("InvalidTower", "entry " + std::to_string(i + 1) + " has cardinality " + std::to_string(towers[i].card()));
    if (i == 0) continue;
    for (const auto& [q, v] : towers[i - 1].entries())
      if (!towers[i].contains(q) || !(towers[i].at(q) == v))
        throw Error("InvalidTower", "entry " + std::to_string(i) + " is not a subtree of entry " + std::to_string(i + 1));
  }
}

bool s2_member(const std::vector<Level2Tree>& towers, const std::vector<UOrd>& alphas, bool weak) {
  validate_level2_tower(towers);
  if (alphas.size() != towers.size())
    throw Error("LengthMismatch", std::to_string(towers.size()) + " trees but " + std::to_string(alphas.size()) + " ordinals");
  if (towers.empty()) return true;
  OrdTuple2 beta;
  for (std::size_t i = 0; i < towers.size(); ++i)
    for (const auto& [q, v] : towers[i].entries())
      if (i == 0 || !towers[i - 1].contains(q)) beta[DomKey{2, q}] = alphas[i];
  const LevelLe2Tree t{Level1Tree(), towers.back()};
  return weak ? bool(weakly_respects_le2(t, beta)) : bool(respects_le2(t, beta));
}

}  // namespace uctk
