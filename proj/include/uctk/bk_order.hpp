#pragma once

// Brouwer-Kleene order on finite sequences over a linearly ordered alphabet:
// s < t iff s properly extends t, or s(k) < t(k) at the first difference.

#include <compare>
#include <cstddef>
#include <span>

#include "uctk/node.hpp"

namespace uctk {

template <typename A, typename Cmp>
std::strong_ordering bk_compare(std::span<const A> s, std::span<const A> t, Cmp&& cmp) {
  const std::size_t n = s.size() < t.size() ? s.size() : t.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::strong_ordering c = cmp(s[i], t[i]);
    if (c != 0) return c;
  }
  if (s.size() == t.size()) return std::strong_ordering::equal;
  return s.size() > t.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering bk_compare(const Node& s, const Node& t);
// -1 sorts below every node.
std::strong_ordering bk_compare(const ExtNode& s, const ExtNode& t);
std::strong_ordering bk_compare(const NodeSeq& s, const NodeSeq& t);
// q followed by -1 is compared as the sequence with a trailing -1 entry.
std::strong_ordering bk_compare(const DomStar& s, const DomStar& t);

inline bool bk_less(const Node& s, const Node& t) { return bk_compare(s, t) < 0; }

struct BkLess {
  bool operator()(const Node& s, const Node& t) const { return bk_compare(s, t) < 0; }
  bool operator()(const ExtNode& s, const ExtNode& t) const { return bk_compare(s, t) < 0; }
  bool operator()(const NodeSeq& s, const NodeSeq& t) const { return bk_compare(s, t) < 0; }
  bool operator()(const DomStar& s, const DomStar& t) const { return bk_compare(s, t) < 0; }
};

}  // namespace uctk
