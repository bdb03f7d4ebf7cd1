#include "uctk/bk_order.hpp"

#include <sstream>

#include "uctk/error.hpp"

namespace uctk {

Node Node::parent() const {
  if (entries_.empty()) throw Error("InvalidNode", "the empty node has no parent");
  return Node(std::vector<std::uint32_t>(entries_.begin(), entries_.end() - 1));
}

Node Node::child(std::uint32_t j) const {
  std::vector<std::uint32_t> e = entries_;
  e.push_back(j);
  return Node(std::move(e));
}

Node Node::prefix(std::size_t len) const {
  return Node(std::vector<std::uint32_t>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(len)));
}

Node Node::left_sibling() const {
  if (entries_.empty() || entries_.back() == 0) throw Error("InvalidNode", "node has no left sibling");
  std::vector<std::uint32_t> e = entries_;
  --e.back();
  return Node(std::move(e));
}

bool Node::is_prefix_of(const Node& other) const {
  if (entries_.size() > other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != other.entries_[i]) return false;
  return true;
}

std::string Node::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? " " : "") << entries_[i];
  os << ')';
  return os.str();
}

std::string seq_str(const NodeSeq& q) {
  std::string s = "(";
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? " " : "") + q[i].str();
  return s + ")";
}

NodeSeq seq_parent(const NodeSeq& q) {
  if (q.empty()) throw Error("InvalidNode", "the empty sequence has no parent");
  return NodeSeq(q.begin(), q.end() - 1);
}

NodeSeq seq_prefix(const NodeSeq& q, std::size_t len) {
  return NodeSeq(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(len));
}

NodeSeq seq_child(const NodeSeq& q, const Node& a) {
  NodeSeq r = q;
  r.push_back(a);
  return r;
}

std::string DomStar::str() const {
  if (!minus_one) return seq_str(seq);
  std::string s = "(";
  for (const Node& n : seq) s += n.str() + " ";
  return s + "-1)";
}

std::strong_ordering bk_compare(const Node& s, const Node& t) {
  return bk_compare(std::span<const std::uint32_t>(s.entries()), std::span<const std::uint32_t>(t.entries()),
                    [](std::uint32_t a, std::uint32_t b) { return a <=> b; });
}

std::strong_ordering bk_compare(const ExtNode& s, const ExtNode& t) {
  if (s.is_minus_one() || t.is_minus_one()) {
    if (s.is_minus_one() && t.is_minus_one()) return std::strong_ordering::equal;
    return s.is_minus_one() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return bk_compare(s.node(), t.node());
}

std::strong_ordering bk_compare(const NodeSeq& s, const NodeSeq& t) {
  return bk_compare(std::span<const Node>(s), std::span<const Node>(t),
                    [](const Node& a, const Node& b) { return bk_compare(a, b); });
}

std::strong_ordering bk_compare(const DomStar& s, const DomStar& t) {
  std::vector<ExtNode> a(s.seq.begin(), s.seq.end());
  std::vector<ExtNode> b(t.seq.begin(), t.seq.end());
  if (s.minus_one) a.push_back(ExtNode::minus_one());
  if (t.minus_one) b.push_back(ExtNode::minus_one());
  return bk_compare(std::span<const ExtNode>(a), std::span<const ExtNode>(b),
                    [](const ExtNode& x, const ExtNode& y) { return bk_compare(x, y); });
}

}  // namespace uctk
