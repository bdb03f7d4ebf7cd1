#include "uctk/ctbl_ord.hpp"

#include <cctype>

#include "uctk/error.hpp"

namespace uctk {

CtblOrd::CtblOrd(std::vector<CnfTerm> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff == 0) throw Error("InvalidOrdinal", "zero coefficient in normal form");
    if (i > 0 && !(terms_[i].exponent < terms_[i - 1].exponent))
      throw Error("InvalidOrdinal", "exponents must strictly decrease");
  }
}

CtblOrd CtblOrd::natural(std::uint64_t n) {
  CtblOrd r;
  if (n > 0) r.terms_.push_back(CnfTerm{CtblOrd(), n});
  return r;
}

CtblOrd CtblOrd::omega() { return omega_pow(natural(1)); }

CtblOrd CtblOrd::omega_pow(const CtblOrd& exponent, std::uint64_t coeff) {
  CtblOrd r;
  if (coeff > 0) r.terms_.push_back(CnfTerm{exponent, coeff});
  return r;
}

bool CtblOrd::is_natural() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

bool CtblOrd::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

bool CtblOrd::is_limit() const { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

std::uint64_t CtblOrd::finite_part() const { return is_successor() ? terms_.back().coeff : 0; }

CtblOrd CtblOrd::predecessor() const {
  if (!is_successor()) throw Error("NotASuccessor", "ordinal " + str() + " has no predecessor");
  CtblOrd r = *this;
  if (--r.terms_.back().coeff == 0) r.terms_.pop_back();
  return r;
}

CtblOrd operator+(const CtblOrd& a, const CtblOrd& b) {
  if (b.is_zero()) return a;
  const CtblOrd& lead = b.terms_.front().exponent;
  CtblOrd r;
  for (const CnfTerm& t : a.terms_) {
    if (t.exponent < lead) break;
    r.terms_.push_back(t);
  }
  std::size_t start = 0;
  if (!r.terms_.empty() && r.terms_.back().exponent == lead) {
    r.terms_.back().coeff += b.terms_.front().coeff;
    start = 1;
  }
  for (std::size_t i = start; i < b.terms_.size(); ++i) r.terms_.push_back(b.terms_[i]);
  return r;
}

CtblOrd operator*(const CtblOrd& a, const CtblOrd& b) {
  if (a.is_zero() || b.is_zero()) return CtblOrd();
  CtblOrd r;
  for (const CnfTerm& t : b.terms_) {
    CtblOrd part;
    if (t.exponent.is_zero()) {
      part = a;
      part.terms_.front().coeff *= t.coeff;
    } else {
      part = CtblOrd::omega_pow(a.terms_.front().exponent + t.exponent, t.coeff);
    }
    r = r + part;
  }
  return r;
}

std::strong_ordering operator<=>(const CtblOrd& a, const CtblOrd& b) {
  const std::size_t n = a.terms_.size() < b.terms_.size() ? a.terms_.size() : b.terms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::strong_ordering c = a.terms_[i].exponent <=> b.terms_[i].exponent;
    if (c != 0) return c;
    c = a.terms_[i].coeff <=> b.terms_[i].coeff;
    if (c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const CtblOrd& a, const CtblOrd& b) { return (a <=> b) == 0; }

namespace {

bool is_atom(const CtblOrd& e) { return e.is_natural() || e == CtblOrd::omega(); }

}  // namespace

std::string CtblOrd::str(bool spaced) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += spaced ? " + " : "+";
    const CnfTerm& t = terms_[i];
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += "w";
    if (!(t.exponent == natural(1))) {
      out += "^";
      out += is_atom(t.exponent) ? t.exponent.str(false) : "(" + t.exponent.str(false) + ")";
    }
    if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
  }
  return out;
}

namespace {

class CtblParser {
 public:
  explicit CtblParser(const std::string& s) : s_(s) {}

  CtblOrd parse() {
    CtblOrd r = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error("SyntaxError", "ordinal '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  CtblOrd sum() {
    CtblOrd r = product();
    while (eat('+')) r = r + product();
    return r;
  }
  CtblOrd product() {
    CtblOrd r = power();
    while (eat('*')) r = r * power();
    return r;
  }
  CtblOrd power() {
    skip();
    if (pos_ < s_.size() && (s_[pos_] == 'w' || s_[pos_] == 'W')) {
      ++pos_;
      if (eat('^')) return CtblOrd::omega_pow(power());
      return CtblOrd::omega();
    }
    CtblOrd base = primary();
    if (eat('^')) {
      CtblOrd e = power();
      if (!base.is_natural() || !e.is_natural()) fail("only w may carry a transfinite exponent");
      std::uint64_t b = base.finite_part(), r = 1;
      for (std::uint64_t i = 0; i < e.finite_part(); ++i) r *= b;
      return CtblOrd::natural(r);
    }
    return base;
  }
  CtblOrd primary() {
    skip();
    if (eat('(')) {
      CtblOrd r = sum();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a natural, w, or '('");
    std::uint64_t n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) n = n * 10 + (s_[pos_++] - '0');
    return CtblOrd::natural(n);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

CtblOrd parse_ctbl(const std::string& text) { return CtblParser(text).parse(); }

}  // namespace uctk
