#include "uctk/text.hpp"

#include <cctype>

#include "uctk/error.hpp"

namespace uctk::text {

namespace {

const std::string kEmptySet = "\xE2\x88\x85";

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at(char c) {
    ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool at_str(const std::string& t) {
    ws();
    return s_.compare(i_, t.size(), t) == 0;
  }
  bool eat(char c) {
    if (!at(c)) return false;
    ++i_;
    return true;
  }
  bool eat_str(const std::string& t) {
    if (!at_str(t)) return false;
    i_ += t.size();
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_str(const std::string& t) {
    if (!eat_str(t)) fail("expected '" + t + "'");
  }
  // Optional comma between list items.
  void sep() { eat(','); }
  bool done() {
    ws();
    return i_ == s_.size();
  }
  void finish() {
    if (!done()) fail("unexpected trailing input");
  }

  std::uint64_t number() {
    ws();
    const std::size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail("expected a natural number");
    try {
      return std::stoull(s_.substr(b, i_ - b));
    } catch (const std::exception&) {
      fail("number out of range");
    }
  }

  // Raw text of an ordinal, up to a top-level separator or closing bracket.
  std::string ordinal_text() {
    ws();
    const std::size_t b = i_;
    int depth = 0;
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (c == '(') ++depth;
      if (c == ')' || c == ']' || c == '>' || c == '}') {
        if (depth == 0) break;
        if (c == ')') --depth;
      }
      if (depth == 0 && (c == ',' || c == ';')) break;
      ++i_;
    }
    std::string t = s_.substr(b, i_ - b);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    if (t.empty()) fail("expected an ordinal");
    return t;
  }

  template <typename F>
  auto ordinal(F parse) {
    const std::size_t b = i_;
    const std::string t = ordinal_text();
    try {
      return parse(t);
    } catch (const Error& e) {
      i_ = b;
      fail(e.what());
    }
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw Error("SyntaxError", "col " + std::to_string(i_ + 1) + ": " + msg + " in '" + s_ + "'");
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

Node node(Cursor& c) {
  if (c.eat_str(kEmptySet)) return Node();
  c.expect('(');
  std::vector<std::uint32_t> v;
  while (!c.eat(')')) {
    const std::uint64_t n = c.number();
    if (n > 0xffffffffULL) c.fail("node entry too large");
    v.push_back(static_cast<std::uint32_t>(n));
    c.sep();
  }
  return Node(std::move(v));
}

ExtNode ext_node(Cursor& c) {
  if (c.eat_str("-1")) return ExtNode::minus_one();
  return ExtNode(node(c));
}

Level1Tree level1(Cursor& c) {
  if (c.eat_str(kEmptySet)) return Level1Tree();
  c.expect('{');
  std::vector<Node> v;
  while (!c.eat('}')) {
    v.push_back(node(c));
    c.sep();
  }
  return validate_level1(v);
}

// Sequence of nodes with an optional trailing -1.
DomStar dom_star(Cursor& c) {
  DomStar d;
  if (c.eat_str(kEmptySet)) return d;
  c.expect('(');
  while (!c.eat(')')) {
    if (d.minus_one) c.fail("-1 must be the last entry");
    if (c.eat_str("-1")) {
      d.minus_one = true;
    } else {
      d.seq.push_back(node(c));
    }
    c.sep();
  }
  return d;
}

NodeSeq seq(Cursor& c) {
  DomStar d = dom_star(c);
  if (d.minus_one) c.fail("-1 is not allowed here");
  return d.seq;
}

// Unvalidated; level-2 entries are checked as a whole by validate_level2.
PartialLevel1Tree raw_partial_le1(Cursor& c) {
  c.expect('(');
  Level1Tree p = level1(c);
  c.expect(',');
  ExtNode t = ext_node(c);
  c.expect(')');
  return PartialLevel1Tree{p, t};
}

PartialLevel1Tree partial_le1(Cursor& c) {
  const PartialLevel1Tree pt = raw_partial_le1(c);
  return validate_partial_le1(pt.base, pt.node);
}

Level2Tree level2_entries(Cursor& c) {
  Level2Tree::Entries e;
  do {
    if (c.at('>') || c.done()) break;
    NodeSeq q = seq(c);
    c.expect_str("->");
    if (e.count(q)) c.fail("duplicate key " + seq_str(q));
    e[q] = raw_partial_le1(c);
  } while (c.eat(';'));
  return validate_level2(e);
}

Level2Tree level2(Cursor& c) {
  if (c.eat('<')) {
    Level2Tree t = level2_entries(c);
    c.expect('>');
    return t;
  }
  return level2_entries(c);
}

LevelLe2Tree le2(Cursor& c) {
  c.expect('<');
  Level1Tree t1 = level1(c);
  c.expect('|');
  Level2Tree t2 = level2_entries(c);
  c.expect('>');
  return LevelLe2Tree{t1, t2};
}

Rep1Element rep1(Cursor& c) {
  c.expect('(');
  Rep1Element x{node(c), std::nullopt};
  c.sep();
  if (!c.at(')')) x.n = c.number();
  c.expect(')');
  return x;
}

DomKey dom_key_body(Cursor& c, std::uint64_t d) {
  if (d == 0) {
    c.expect_str("-1");
    return DomKey{0, {}};
  }
  if (d == 1) return DomKey{1, {node(c)}};
  if (d == 2) return DomKey{2, seq(c)};
  c.fail("degree must be 0, 1 or 2");
}

Level3Tree level3(Cursor& c) {
  c.expect_str("<<");
  Level3Tree::Entries e;
  do {
    if (c.at('>')) break;
    NodeSeq r = seq(c);
    c.expect_str("->");
    c.expect('(');
    LevelLe2Tree base = le2(c);
    c.expect(',');
    c.expect('(');
    const std::uint64_t d = c.number();
    c.expect(',');
    DomKey k = dom_key_body(c, d);
    c.expect(',');
    Level1Tree p = level1(c);
    c.expect(')');
    c.expect(')');
    if (e.count(r)) c.fail("duplicate key " + seq_str(r));
    e[r] = validate_partial_le2(base, k, p);
  } while (c.eat(';'));
  c.expect_str(">>");
  return validate_level3(e);
}

template <typename T, typename F>
T whole(const std::string& s, F f) {
  Cursor c(s);
  T out = f(c);
  c.finish();
  return out;
}

}  // namespace

Node parse_node(const std::string& s) { return whole<Node>(s, node); }
ExtNode parse_ext_node(const std::string& s) { return whole<ExtNode>(s, ext_node); }
Level1Tree parse_level1(const std::string& s) { return whole<Level1Tree>(s, level1); }

std::vector<Level1Tree> parse_tower1(const std::string& s) {
  return whole<std::vector<Level1Tree>>(s, [](Cursor& c) {
    std::vector<Level1Tree> v;
    c.expect('[');
    while (!c.eat(']')) {
      v.push_back(level1(c));
      c.sep();
    }
    return v;
  });
}

NodeSeq parse_seq(const std::string& s) { return whole<NodeSeq>(s, seq); }
DomStar parse_dom_star(const std::string& s) { return whole<DomStar>(s, dom_star); }
PartialLevel1Tree parse_partial_le1(const std::string& s) { return whole<PartialLevel1Tree>(s, partial_le1); }
Level2Tree parse_level2(const std::string& s) { return whole<Level2Tree>(s, level2); }

std::vector<Level2Tree> parse_tower2(const std::string& s) {
  return whole<std::vector<Level2Tree>>(s, [](Cursor& c) {
    std::vector<Level2Tree> v;
    c.expect('[');
    while (!c.eat(']')) {
      c.expect('<');
      v.push_back(level2_entries(c));
      c.expect('>');
      c.sep();
    }
    return v;
  });
}

LevelLe2Tree parse_le2(const std::string& s) { return whole<LevelLe2Tree>(s, le2); }

DomainShape parse_shape(const std::string& s) {
  return whole<DomainShape>(s, [](Cursor& c) {
    DomainShape d;
    c.expect('<');
    d.t1 = level1(c);
    c.expect('|');
    do {
      if (c.at('>')) break;
      d.dom2.push_back(seq(c));
    } while (c.eat(';'));
    c.expect('>');
    return d;
  });
}

Rep1Element parse_rep1(const std::string& s) { return whole<Rep1Element>(s, rep1); }

Rep2Element parse_rep2(const std::string& s) {
  return whole<Rep2Element>(s, [](Cursor& c) {
    Rep2Element x;
    if (c.eat_str("1:")) {
      x.level = 1;
      x.rep1 = rep1(c);
      return x;
    }
    c.expect_str("2:");
    c.expect('(');
    while (!c.eat(')')) {
      if (x.q.minus_one) c.fail("-1 must be the last entry");
      x.alphas.push_back(c.ordinal(parse_ctbl));
      c.expect(',');
      ExtNode e = ext_node(c);
      if (e.is_minus_one()) x.q.minus_one = true;
      else x.q.seq.push_back(e.node());
      c.sep();
    }
    return x;
  });
}

Le2Description parse_description(const std::string& s) {
  return whole<Le2Description>(s, [](Cursor& c) {
    Le2Description d;
    c.expect('(');
    const std::uint64_t level = c.number();
    c.expect(',');
    if (level == 1) {
      d.level = 1;
      Node n = node(c);
      if (!n.empty()) d.node1.node = n;
    } else if (level == 2) {
      c.expect('(');
      d.q = dom_star(c);
      c.expect(',');
      d.tree = level1(c);
      c.expect(',');
      c.expect('(');
      while (!c.eat(')')) {
        d.nodes.push_back(ext_node(c));
        c.sep();
      }
      c.expect(')');
    } else {
      c.fail("description level must be 1 or 2");
    }
    c.expect(')');
    return d;
  });
}

DomKey parse_dom_key(const std::string& s) {
  return whole<DomKey>(s, [](Cursor& c) {
    c.expect('(');
    const std::uint64_t d = c.number();
    c.expect(',');
    DomKey k = dom_key_body(c, d);
    c.expect(')');
    return k;
  });
}

OrdTuple2 parse_tuple2(const std::string& s) {
  return whole<OrdTuple2>(s, [](Cursor& c) {
    OrdTuple2 t;
    do {
      if (c.done()) break;
      const std::uint64_t d = c.number();
      DomKey k = dom_key_body(c, d);
      c.expect('=');
      if (t.count(k)) c.fail("duplicate key " + k.str());
      t[k] = c.ordinal(parse_uord);
    } while (c.eat(';'));
    return t;
  });
}

Assignment1 parse_assignment1(const std::string& s) {
  return whole<Assignment1>(s, [](Cursor& c) {
    Assignment1 a;
    do {
      if (c.done()) break;
      Node n = node(c);
      c.expect('=');
      if (a.count(n)) c.fail("duplicate key " + n.str());
      a[n] = c.ordinal(parse_ctbl);
    } while (c.eat(';'));
    return a;
  });
}

PartialLevelLe2Tree parse_partial_le2(const LevelLe2Tree& base, const std::string& s) {
  return whole<PartialLevelLe2Tree>(s, [&](Cursor& c) {
    c.expect('(');
    const std::uint64_t d = c.number();
    c.expect(',');
    DomKey k = dom_key_body(c, d);
    c.expect(',');
    Level1Tree p = level1(c);
    c.expect(')');
    return validate_partial_le2(base, k, p);
  });
}

Level3Tree parse_level3(const std::string& s) { return whole<Level3Tree>(s, level3); }

std::vector<Level3Tree> parse_tower3(const std::string& s) {
  return whole<std::vector<Level3Tree>>(s, [](Cursor& c) {
    std::vector<Level3Tree> v;
    c.expect('[');
    while (!c.eat(']')) {
      v.push_back(level3(c));
      c.sep();
    }
    return v;
  });
}

Rep3Element parse_rep3(const std::string& s) {
  return whole<Rep3Element>(s, [](Cursor& c) {
    Rep3Element x;
    c.expect('(');
    bool first = true;
    while (!c.eat(')')) {
      if (x.r.minus_one) c.fail("-1 must be the last entry");
      if (!first) {
        x.betas.push_back(c.ordinal(parse_uord));
        c.expect(',');
      }
      first = false;
      ExtNode e = ext_node(c);
      if (e.is_minus_one()) {
        if (x.r.seq.empty()) c.fail("the first entry must be a node");
        x.r.minus_one = true;
      } else {
        x.r.seq.push_back(e.node());
      }
      c.sep();
    }
    if (x.r.seq.empty()) c.fail("expected at least one node");
    return x;
  });
}

namespace {

template <typename T, typename F>
std::vector<T> ord_list(const std::string& s, F parse) {
  return whole<std::vector<T>>(s, [&](Cursor& c) {
    std::vector<T> v;
    c.expect('[');
    while (!c.eat(']')) {
      v.push_back(c.ordinal(parse));
      c.sep();
    }
    return v;
  });
}

}  // namespace

std::vector<CtblOrd> parse_ctbl_list(const std::string& s) { return ord_list<CtblOrd>(s, parse_ctbl); }
std::vector<UOrd> parse_uord_list(const std::string& s) { return ord_list<UOrd>(s, parse_uord); }

std::string tuple2_str(const OrdTuple2& t) {
  std::string s;
  for (const auto& [k, v] : t) {
    if (!s.empty()) s += "; ";
    s += std::to_string(k.level) + " ";
    if (k.level == 0) s += "-1";
    else if (k.level == 1) s += k.path.front().str();
    else s += seq_str(k.path);
    s += " = " + v.str();
  }
  return s;
}

std::string assignment1_str(const Assignment1& a) {
  std::string s;
  for (const auto& [k, v] : a) s += (s.empty() ? "" : "; ") + k.str() + " = " + v.str();
  return s;
}

std::string tower1_str(const std::vector<Level1Tree>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + t[i].str();
  return s + "]";
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool have = false, quoted = false;
  int depth = 0;
  std::size_t quote_col = 0, open_col = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') quoted = false;
      else cur += ch;
      continue;
    }
    if (ch == '"') {
      quoted = have = true;
      quote_col = i + 1;
      continue;
    }
    if (depth == 0 && std::isspace(static_cast<unsigned char>(ch))) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
      continue;
    }
    if (ch == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      cur += "->";
      ++i;
      have = true;
      continue;
    }
    if (ch == '(' || ch == '{' || ch == '[' || ch == '<') {
      if (depth == 0) open_col = i + 1;
      ++depth;
    }
    if ((ch == ')' || ch == '}' || ch == ']' || ch == '>') && depth > 0) --depth;
    cur += ch;
    have = true;
  }
  if (quoted) throw Error("SyntaxError", "col " + std::to_string(quote_col) + ": unterminated quote");
  if (depth != 0) throw Error("SyntaxError", "col " + std::to_string(open_col) + ": unbalanced brackets");
  if (have) out.push_back(cur);
  return out;
}

}  // namespace uctk::text
