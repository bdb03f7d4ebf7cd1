#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace uctk {

// Finite sequence of naturals. The built-in ordering is lexicographic and
// only serves as a container key; the tree order lives in bk_order.hpp.
class Node {
 public:
  Node() = default;
  Node(std::initializer_list<std::uint32_t> entries) : entries_(entries) {}
  explicit Node(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  std::uint32_t last() const { return entries_.back(); }
  const std::vector<std::uint32_t>& entries() const { return entries_; }

  Node parent() const;
  Node child(std::uint32_t j) const;
  Node prefix(std::size_t len) const;
  // Left sibling; requires a nonzero last entry.
  Node left_sibling() const;
  bool is_prefix_of(const Node& other) const;

  std::string str() const;

  friend auto operator<=>(const Node&, const Node&) = default;
  friend bool operator==(const Node&, const Node&) = default;

 private:
  std::vector<std::uint32_t> entries_;
};

// A node or the sentinel -1.
class ExtNode {
 public:
  ExtNode() = default;  // -1
  ExtNode(Node n) : node_(std::move(n)) {}

  static ExtNode minus_one() { return ExtNode(); }
  bool is_minus_one() const { return !node_.has_value(); }
  const Node& node() const { return *node_; }

  std::string str() const { return node_ ? node_->str() : "-1"; }

  friend auto operator<=>(const ExtNode&, const ExtNode&) = default;
  friend bool operator==(const ExtNode&, const ExtNode&) = default;

 private:
  std::optional<Node> node_;
};

// Sequence of nodes; the domain elements of level-2 and level-3 trees.
using NodeSeq = std::vector<Node>;

std::string seq_str(const NodeSeq& q);
NodeSeq seq_parent(const NodeSeq& q);
NodeSeq seq_prefix(const NodeSeq& q, std::size_t len);
NodeSeq seq_child(const NodeSeq& q, const Node& a);

// Element of dom* at levels 2 and 3: either q itself or q followed by -1.
struct DomStar {
  NodeSeq seq;
  bool minus_one = false;

  std::string str() const;
  friend auto operator<=>(const DomStar&, const DomStar&) = default;
  friend bool operator==(const DomStar&, const DomStar&) = default;
};

}  // namespace uctk
