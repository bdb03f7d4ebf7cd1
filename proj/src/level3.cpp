#include "uctk/level3.hpp"

#include <algorithm>

#include "uctk/bk_order.hpp"
#include "uctk/error.hpp"

namespace uctk {

std::string PartialLevelLe2Tree::ext_str() const {
  std::string q;
  if (key.level == 0) q = "-1";
  else if (key.level == 1) q = key.path.front().str();
  else q = seq_str(key.path);
  return "(" + std::to_string(key.level) + ", " + q + ", " + p.str() + ")";
}

namespace {

[[noreturn]] void violation(const std::string& clause) { throw Error("CaseViolation", clause); }

}  // namespace

PartialLevelLe2Tree validate_partial_le2(const LevelLe2Tree& base, const DomKey& key, const Level1Tree& p) {
  PartialLevelLe2Tree pt{base, key, p};
  switch (key.level) {
    case 0:
      if (!key.path.empty() || !p.empty()) violation("degree 0 requires (0, -1, {})");
      return pt;
    case 1: {
      if (key.path.size() != 1) violation("degree 1 requires a single node");
      const Node& q = key.path.front();
      if (base.t1.contains(q)) violation("degree 1: " + q.str() + " already belongs to the level-1 part");
      try {
        with_node(base.t1, q);
      } catch (const Error& e) {
        violation(std::string("degree 1: level-1 part plus ") + q.str() + " is not a level-1 tree: " + e.what());
      }
      if (!p.empty()) violation("degree 1 requires P = {}");
      return pt;
    }
    case 2: {
      const NodeSeq& q = key.path;
      if (q.empty() || base.t2.contains(q)) violation("degree 2: " + seq_str(q) + " must be a new nonempty sequence");
      const NodeSeq up = seq_parent(q);
      if (!base.t2.contains(up)) violation("degree 2: parent of " + seq_str(q) + " is not in the domain");
      try {
        with_node(base.t2.children(up), q.back());
      } catch (const Error& e) {
        violation("degree 2: domain plus " + seq_str(q) + " is not a tree of level-1 trees: " + e.what());
      }
      if (base.t2.at(up).degree() == 0) violation("degree 2: the parent label has degree 0");
      const Level1Tree want = completion_le1(base.t2.at(up));
      if (!(p == want)) violation("degree 2: P must be the completion " + want.str());
      return pt;
    }
    default: violation("degree must be 0, 1 or 2");
  }
}

UcfResult ucf(const PartialLevelLe2Tree& pt) {
  const DomKey& k = pt.key;
  if (k.level == 0) return UcfResult{UcfCase::DegreeZero, std::nullopt};
  Le2Description d;
  if (k.level == 1) {
    const Node& q = k.path.front();
    if (q.size() > 1) {
      d.level = 1;
      d.node1 = Desc1{q.parent()};
      return UcfResult{UcfCase::LevelOneInner, d};
    }
    d.level = 2;
    d.q = DomStar{NodeSeq{}, false};
    d.nodes = {ExtNode(Node{0})};
    return UcfResult{UcfCase::LevelOneTop, d};
  }
  const Level2Tree& t2 = pt.base.t2;
  const NodeSeq up = seq_parent(k.path);
  const std::vector<DomStar> plus = t2.plus(k.path, pt.p);
  const DomStar least = plus.front();
  d.level = 2;
  if (!(least == DomStar{up, false})) {
    const PotentialTower1 b = t2.bracket(least);
    d.q = least;
    d.tree = b.tree;
    d.nodes = b.nodes;
    return UcfResult{UcfCase::NextSibling, d};
  }
  d.q = DomStar{up, false};
  d.tree = pt.p;
  d.nodes = t2.bracket(d.q).nodes;
  return UcfResult{UcfCase::Parent, d};
}

int cf3(const PartialLevelLe2Tree& pt) {
  if (pt.key.level == 0) return 0;
  if (pt.key.level == 1) {
    const Level1Tree ext = with_node(pt.base.t1, pt.key.path.front());
    if (ext.nodes().front() == pt.key.path.front()) return 1;
  }
  return 2;
}

std::vector<LevelLe2Tree> completion_le2(const PartialLevelLe2Tree& pt) {
  if (pt.key.level == 0) throw Error("DegreeZero", "a partial level <=2 tree of degree 0 has no completion");
  if (pt.key.level == 1) return {LevelLe2Tree{with_node(pt.base.t1, pt.key.path.front()), pt.base.t2}};
  std::vector<ExtNode> labels{ExtNode::minus_one()};
  for (const Node& a : regular_addable_nodes(pt.p)) labels.emplace_back(a);
  std::vector<LevelLe2Tree> out;
  for (const ExtNode& t : labels) {
    if (t.is_minus_one() && pt.p.empty()) continue;
    Level2Tree::Entries e = pt.base.t2.entries();
    e[pt.key.path] = PartialLevel1Tree{pt.p, t};
    out.push_back(LevelLe2Tree{pt.base.t1, validate_level2(e)});
  }
  return out;
}

bool is_completion(const PartialLevelLe2Tree& pt, const LevelLe2Tree& q) {
  if (pt.key.level == 0) return false;
  for (const LevelLe2Tree& c : completion_le2(pt))
    if (c == q) return true;
  return false;
}

bool respects_partial_le2(const PartialLevelLe2Tree& pt, const OrdTuple2& beta) {
  OrdTuple2 below = beta;
  auto it = below.find(pt.key);
  if (it == below.end()) throw Error("MissingEntry", "no entry at " + pt.key.str());
  const UOrd pending = it->second;
  below.erase(it);
  if (!respects_le2(pt.base, below)) return false;
  if (pt.key.level == 0) return pending.is_countable() && pending.tail().is_natural();
  for (const LevelLe2Tree& c : completion_le2(pt))
    if (respects_le2(c, beta)) return true;
  return false;
}

LevelLe2Tree card_one_le2() {
  return LevelLe2Tree{Level1Tree(), validate_level2({{NodeSeq{}, PartialLevel1Tree{Level1Tree(), ExtNode(Node{0})}}})};
}

const PartialLevelLe2Tree& Level3Tree::at(const NodeSeq& r) const {
  auto it = entries_.find(r);
  if (it == entries_.end()) throw Error("NotInDomain", seq_str(r) + " is not in the domain");
  return it->second;
}

PotentialTower2 Level3Tree::bracket(const NodeSeq& r) const {
  PotentialTower2 t;
  t.tree = tree(r);
  for (std::size_t l = 1; l <= r.size(); ++l) {
    const PartialLevelLe2Tree& e = at(seq_prefix(r, l));
    t.steps.emplace_back(e.key, e.p);
  }
  return t;
}

PotentialTower2 Level3Tree::bracket_with(const NodeSeq& r, const LevelLe2Tree& q) const {
  if (!is_completion(at(r), q)) throw Error("NotACompletion", q.str() + " is not a completion of R(" + seq_str(r) + ")");
  PotentialTower2 t = bracket(r);
  t.tree = q;
  return t;
}

Level1Tree Level3Tree::children(const NodeSeq& r) const {
  std::vector<Node> kids;
  for (const auto& [k, v] : entries_)
    if (k.size() == r.size() + 1 && std::equal(r.begin(), r.end(), k.begin())) kids.push_back(k.back());
  return validate_level1(kids);
}

std::vector<DomStar> Level3Tree::dom_star() const {
  std::vector<DomStar> out;
  for (const auto& [k, v] : entries_) {
    out.push_back(DomStar{k, false});
    out.push_back(DomStar{k, true});
  }
  std::sort(out.begin(), out.end(), BkLess{});
  return out;
}

namespace {

std::vector<DomStar> r_side(const Level3Tree& t, const NodeSeq& r, bool below) {
  const NodeSeq up = seq_parent(r);
  std::vector<DomStar> out{DomStar{up, below}};
  const Level1Tree siblings = t.children(up);
  for (const Node& a : siblings.nodes()) {
    const NodeSeq s = seq_child(up, a);
    if (!(t.tree(s) == t.tree(r))) continue;
    if (below ? bk_less(a, r.back()) : bk_less(r.back(), a)) out.push_back(DomStar{s, false});
  }
  std::sort(out.begin(), out.end(), BkLess{});
  return out;
}

}  // namespace

std::vector<DomStar> Level3Tree::minus(const NodeSeq& r) const { return r_side(*this, r, true); }
std::vector<DomStar> Level3Tree::plus(const NodeSeq& r) const { return r_side(*this, r, false); }

std::string Level3Tree::str() const {
  std::string s = "<<";
  bool first = true;
  for (const auto& [k, v] : entries_) {
    if (!first) s += "; ";
    first = false;
    s += seq_str(k) + " -> (" + v.base.str() + ", " + v.ext_str() + ")";
  }
  return s + ">>";
}

Level3Tree validate_level3(const Level3Tree::Entries& entries) {
  if (entries.count(NodeSeq{})) throw Error("EmptyKeyPresent", "() may not belong to the domain of a level-3 tree");
  for (const auto& [r, v] : entries)
    if (r.size() > 1 && !entries.count(seq_parent(r))) throw Error("DomainNotTree", "parent of " + seq_str(r) + " is missing");
  Level3Tree t;
  t.entries_ = entries;
  try {
    t.children(NodeSeq{});
    for (const auto& [r, v] : entries) t.children(r);
  } catch (const Error& e) {
    throw Error("DomainNotTree", e.what());
  }
  const LevelLe2Tree one = card_one_le2();
  for (const auto& [r, v] : entries) {
    const std::string where = "TowerViolation(" + seq_str(r) + ")";
    try {
      validate_partial_le2(v.base, v.key, v.p);
    } catch (const Error& e) {
      throw Error("TowerViolation", where + ": " + e.what());
    }
    if (r.size() == 1) {
      if (!(v.base == one)) throw Error("TowerViolation", where + ": the first tree must have cardinality 1");
      continue;
    }
    const PartialLevelLe2Tree& up = entries.at(seq_parent(r));
    if (!is_completion(up, v.base)) throw Error("TowerViolation", where + ": tree is not a completion of its parent entry");
  }
  return t;
}

bool is_regular_level3(const Level3Tree& r) { return !r.contains(NodeSeq{Node{1}}); }

Level3Tower validate_level3_tower(const std::vector<Level3Tree>& trees) {
  Level3Tower t;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (trees[i].card() != i + 1)
      throw Error("NotTower", "entry " + std::to_string(i) + " has cardinality " + std::to_string(trees[i].card()));
    NodeSeq fresh;
    for (const auto& [r, v] : trees[i].entries()) {
      if (i > 0 && trees[i - 1].contains(r)) {
        if (!(trees[i - 1].at(r) == v)) throw Error("NotTower", "entry " + std::to_string(i - 1) + " is not a subtree of entry " + std::to_string(i));
        continue;
      }
      fresh = r;
    }
    if (i > 0 && trees[i - 1].card() + 1 != trees[i].card()) throw Error("NotTower", "cardinalities do not chain");
    if (i > 0)
      for (const auto& [r, v] : trees[i - 1].entries())
        if (!trees[i].contains(r)) throw Error("NotTower", "entry " + std::to_string(i - 1) + " is not a subtree of entry " + std::to_string(i));
    t.trees.push_back(trees[i]);
    t.regular.push_back(is_regular_level3(trees[i]));
    t.new_nodes.push_back(fresh);
  }
  return t;
}

std::string Rep3Element::str() const {
  std::vector<ExtNode> rs(r.seq.begin(), r.seq.end());
  if (r.minus_one) rs.push_back(ExtNode::minus_one());
  std::string s = "(";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) s += ", " + (i - 1 < betas.size() ? betas[i - 1].str() : std::string("?")) + ", ";
    s += rs[i].str();
  }
  return s + ")";
}

namespace {

// The tuple on dom(R_tree(r)) (plus R_node(r) for the -1 form) read off the
// interleaving; the root entry is forced to u1.
OrdTuple2 tuple_of(const Level3Tree& t, const Rep3Element& x) {
  OrdTuple2 beta;
  beta[DomKey{2, NodeSeq{}}] = UOrd::u(1);
  const std::size_t k = x.r.seq.size();
  const std::size_t count = k - 1 + (x.r.minus_one ? 1 : 0);
  for (std::size_t i = 1; i <= count; ++i) beta[t.node(seq_prefix(x.r.seq, i))] = x.betas[i - 1];
  return beta;
}

}  // namespace

bool valid_rep3(const Level3Tree& t, const Rep3Element& x) {
  if (!t.contains(x.r.seq)) return false;
  const std::size_t k = x.r.seq.size();
  if (x.betas.size() != k - 1 + (x.r.minus_one ? 1 : 0)) return false;
  const OrdTuple2 beta = tuple_of(t, x);
  try {
    if (!x.r.minus_one) return bool(respects_le2(t.tree(x.r.seq), beta));
    return respects_partial_le2(t.at(x.r.seq), beta);
  } catch (const Error&) {
    return false;
  }
}

std::strong_ordering rep3_compare(const Level3Tree& t, const Rep3Element& x, const Rep3Element& y) {
  if (!valid_rep3(t, x)) throw Error("InvalidElement", x.str() + " is not in rep(R)");
  if (!valid_rep3(t, y)) throw Error("InvalidElement", y.str() + " is not in rep(R)");
  using Entry = std::variant<ExtNode, UOrd>;
  auto interleave = [](const Rep3Element& e) {
    std::vector<ExtNode> rs(e.r.seq.begin(), e.r.seq.end());
    if (e.r.minus_one) rs.push_back(ExtNode::minus_one());
    std::vector<Entry> out;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (i) out.emplace_back(e.betas[i - 1]);
      out.emplace_back(rs[i]);
    }
    return out;
  };
  const auto a = interleave(x), b = interleave(y);
  return bk_compare(std::span<const Entry>(a), std::span<const Entry>(b), [](const Entry& u, const Entry& v) {
    if (u.index() == 0) return bk_compare(std::get<0>(u), std::get<0>(v));
    return std::get<1>(u) <=> std::get<1>(v);
  });
}

StructuralVerdict s3_structural_member(const std::vector<Level3Tree>& towers, bool minus_variant) {
  (void)minus_variant;  // S3 and S3- differ only in the ordinal clause.
  StructuralVerdict v;
  Level3Tower t;
  try {
    t = validate_level3_tower(towers);
  } catch (const Error& e) {
    v.reason = std::string("NotTower: ") + e.what();
    return v;
  }
  for (std::size_t i = 0; i < t.regular.size(); ++i) {
    if (!t.regular[i]) {
      v.reason = "NotRegular(" + std::to_string(i) + ")";
      return v;
    }
  }
  v.valid = true;
  v.new_nodes = t.new_nodes;
  return v;
}

}  // namespace uctk
