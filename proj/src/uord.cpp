#include "uctk/uord.hpp"

#include <cctype>
#include <sstream>

#include "uctk/error.hpp"

namespace uctk {

UOrd::UOrd(std::vector<UTerm> uterms, CtblOrd tail) : uterms_(std::move(uterms)), tail_(std::move(tail)) {
  for (std::size_t i = 0; i < uterms_.size(); ++i) {
    if (uterms_[i].level == 0) throw Error("InvalidOrdinal", "u-levels start at 1");
    if (uterms_[i].coeff.is_zero()) throw Error("InvalidOrdinal", "zero u-coefficient");
    if (i > 0 && uterms_[i].level >= uterms_[i - 1].level)
      throw Error("InvalidOrdinal", "u-levels must strictly decrease");
  }
}

UOrd UOrd::u(unsigned level, const CtblOrd& coeff) {
  if (coeff.is_zero()) return UOrd();
  return UOrd({UTerm{level, coeff}}, CtblOrd());
}

UOrd operator+(const UOrd& a, const UOrd& b) {
  if (b.uterms_.empty()) {
    UOrd r = a;
    r.tail_ = a.tail_ + b.tail_;
    return r;
  }
  const unsigned lead = b.uterms_.front().level;
  UOrd r;
  for (const UTerm& t : a.uterms_) {
    if (t.level < lead) break;
    r.uterms_.push_back(t);
  }
  std::size_t start = 0;
  if (!r.uterms_.empty() && r.uterms_.back().level == lead) {
    r.uterms_.back().coeff = r.uterms_.back().coeff + b.uterms_.front().coeff;
    start = 1;
  }
  for (std::size_t i = start; i < b.uterms_.size(); ++i) r.uterms_.push_back(b.uterms_[i]);
  r.tail_ = b.tail_;
  return r;
}

std::strong_ordering operator<=>(const UOrd& a, const UOrd& b) {
  const std::size_t n = a.uterms_.size() < b.uterms_.size() ? a.uterms_.size() : b.uterms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::strong_ordering c = a.uterms_[i].level <=> b.uterms_[i].level;
    if (c != 0) return c;
    c = a.uterms_[i].coeff <=> b.uterms_[i].coeff;
    if (c != 0) return c;
  }
  if (a.uterms_.size() != b.uterms_.size()) return a.uterms_.size() <=> b.uterms_.size();
  return a.tail_ <=> b.tail_;
}

std::string UOrd::str() const {
  std::string out;
  for (const UTerm& t : uterms_) {
    if (!out.empty()) out += " + ";
    out += "u" + std::to_string(t.level);
    if (t.coeff == CtblOrd::natural(1)) continue;
    const bool bare = t.coeff.terms().size() == 1;
    out += "*" + (bare ? t.coeff.str(false) : "(" + t.coeff.str(false) + ")");
  }
  if (!tail_.is_zero() || out.empty()) {
    if (!out.empty()) out += " + ";
    out += tail_.str();
  }
  return out;
}

namespace {

// Splits a UOrd expression on top-level '+'.
std::vector<std::string> split_sum(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

UOrd parse_uord(const std::string& text) {
  UOrd r;
  for (const std::string& raw : split_sum(text)) {
    const std::string part = trim(raw);
    if (part.empty()) throw Error("SyntaxError", "ordinal '" + text + "': empty summand");
    if (part[0] != 'u' && part[0] != 'U') {
      r = r + UOrd(parse_ctbl(part));
      continue;
    }
    std::size_t i = 1;
    unsigned level = 0;
    if (i >= part.size() || !std::isdigit(static_cast<unsigned char>(part[i])))
      throw Error("SyntaxError", "ordinal '" + text + "': expected a level after 'u'");
    while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) level = level * 10 + (part[i++] - '0');
    if (level == 0) throw Error("SyntaxError", "ordinal '" + text + "': u-levels start at 1");
    CtblOrd coeff = CtblOrd::natural(1);
    const std::string rest = trim(part.substr(i));
    if (!rest.empty()) {
      if (rest[0] != '*') throw Error("SyntaxError", "ordinal '" + text + "': expected '*' after u" + std::to_string(level));
      coeff = parse_ctbl(rest.substr(1));
    }
    r = r + UOrd::u(level, coeff);
  }
  return r;
}

std::string Cofinality::str() const {
  switch (kind) {
    case Kind::Zero: return "zero";
    case Kind::Successor: return "successor";
    case Kind::Omega: return "w";
    case Kind::U: return "u" + std::to_string(level);
  }
  return "";
}

Cofinality cf_L(const UOrd& b) {
  if (!b.tail().is_zero())
    return b.tail().is_successor() ? Cofinality{Cofinality::Kind::Successor, 0} : Cofinality{Cofinality::Kind::Omega, 0};
  if (b.uterms().empty()) return Cofinality{Cofinality::Kind::Zero, 0};
  const UTerm& last = b.uterms().back();
  if (last.coeff.is_limit()) return Cofinality{Cofinality::Kind::Omega, 0};
  return Cofinality{Cofinality::Kind::U, last.level};
}

IndexMap::IndexMap(unsigned n_prime, std::vector<unsigned> images) : n_prime_(n_prime), images_(std::move(images)) {
  unsigned prev = 0;
  for (unsigned v : images_) {
    if (v <= prev) throw Error("InvalidIndexMap", "index map must be strictly increasing from 1");
    if (v > n_prime_) throw Error("InvalidIndexMap", "index map exceeds its codomain");
    prev = v;
  }
}

IndexMap IndexMap::identity(unsigned n) {
  std::vector<unsigned> im(n);
  for (unsigned i = 0; i < n; ++i) im[i] = i + 1;
  return IndexMap(n, std::move(im));
}

unsigned IndexMap::operator()(unsigned k) const {
  if (k == 0) return 0;
  if (k > images_.size()) throw Error("LevelOutOfRange", "level " + std::to_string(k) + " outside the index map domain");
  return images_[k - 1];
}

std::string IndexMap::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? "," : "") + std::to_string(images_[i]);
  return s + "]:" + std::to_string(n_prime_);
}

IndexMap compose(const IndexMap& outer, const IndexMap& inner) {
  if (inner.n_prime() > outer.n()) throw Error("InvalidIndexMap", "maps do not compose");
  std::vector<unsigned> im;
  for (unsigned k = 1; k <= inner.n(); ++k) im.push_back(outer(inner(k)));
  return IndexMap(outer.n_prime(), std::move(im));
}

IndexMap parse_index_map(const std::string& text) {
  const std::string s = trim(text);
  const std::size_t close = s.find(']');
  if (s.empty() || s[0] != '[' || close == std::string::npos)
    throw Error("SyntaxError", "index map '" + text + "': expected [images] or [images]:n'");
  std::vector<unsigned> im;
  std::string body = s.substr(1, close - 1);
  for (char& c : body)
    if (c == ',') c = ' ';
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("SyntaxError", "index map '" + text + "': bad image '" + tok + "'");
    im.push_back(static_cast<unsigned>(std::stoul(tok)));
  }
  unsigned n_prime = im.empty() ? 0 : im.back();
  const std::string rest = trim(s.substr(close + 1));
  if (!rest.empty()) {
    if (rest[0] != ':' || rest.size() < 2) throw Error("SyntaxError", "index map '" + text + "': expected ':n'");
    const std::string num = trim(rest.substr(1));
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("SyntaxError", "index map '" + text + "': bad codomain");
    n_prime = static_cast<unsigned>(std::stoul(num));
  }
  return IndexMap(n_prime, std::move(im));
}

UOrd apply_shift(const IndexMap& sigma, const UOrd& b) {
  std::vector<UTerm> terms;
  for (const UTerm& t : b.uterms()) {
    if (t.level > sigma.n())
      throw Error("LevelOutOfRange", "u" + std::to_string(t.level) + " outside the domain of " + sigma.str());
    terms.push_back(UTerm{sigma(t.level), t.coeff});
  }
  return UOrd(std::move(terms), b.tail());
}

bool shift_is_continuous_at(const IndexMap& sigma, const UOrd& b) {
  const Cofinality cf = cf_L(b);
  if (cf.kind != Cofinality::Kind::U) return true;
  return sigma(cf.level) == sigma(cf.level - 1) + 1;
}

UOrd apply_shift_sup(const IndexMap& sigma, const UOrd& b) {
  if (!b.is_limit()) throw Error("NotALimit", b.str() + " is not a limit ordinal");
  UOrd shifted = apply_shift(sigma, b);
  if (shift_is_continuous_at(sigma, b)) return shifted;
  // b = delta + u_k
  const unsigned k = b.uterms().back().level;
  std::vector<UTerm> terms = b.uterms();
  terms.back().coeff = terms.back().coeff.predecessor();
  if (terms.back().coeff.is_zero()) terms.pop_back();
  const UOrd delta(std::move(terms), CtblOrd());
  return apply_shift(sigma, delta) + UOrd::u(sigma(k - 1) + 1);
}

std::pair<IndexMap, IndexMap> decompose_shift(const IndexMap& sigma, unsigned k) {
  if (k < 1 || k > sigma.n()) throw Error("LevelOutOfRange", "k outside 1.." + std::to_string(sigma.n()));
  if (sigma(k) <= sigma(k - 1) + 1)
    throw Error("CriterionFails", "sigma(" + std::to_string(k) + ") = sigma(" + std::to_string(k - 1) + ") + 1");
  const unsigned n = sigma.n();
  std::vector<unsigned> sk, tk;
  for (unsigned i = 1; i <= n + 1; ++i) {
    if (i < k) sk.push_back(sigma(i));
    else if (i == k) sk.push_back(sigma(k - 1) + 1);
    else sk.push_back(sigma(i - 1));
  }
  for (unsigned i = 1; i <= n; ++i) tk.push_back(i < k ? i : i + 1);
  IndexMap sigma_k(sigma.n_prime(), std::move(sk));
  IndexMap tau_k(n + 1, std::move(tk));
  if (!(compose(sigma_k, tau_k) == sigma)) throw Error("InternalError", "decomposition does not recompose");
  return {sigma_k, tau_k};
}

}  // namespace uctk
