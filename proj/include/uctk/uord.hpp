#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "uctk/ctbl_ord.hpp"

namespace uctk {

struct UTerm {
  unsigned level = 1;
  CtblOrd coeff;

  friend bool operator==(const UTerm&, const UTerm&) = default;
};

// Ordinal below u_omega of the form u_{k1}*c1 + ... + u_{kj}*cj + tail with
// k1 > ... > kj >= 1, nonzero countable coefficients and a countable tail.
class UOrd {
 public:
  UOrd() = default;
  UOrd(std::vector<UTerm> uterms, CtblOrd tail);
  explicit UOrd(CtblOrd tail) : tail_(std::move(tail)) {}

  static UOrd u(unsigned level, const CtblOrd& coeff = CtblOrd::natural(1));

  const std::vector<UTerm>& uterms() const { return uterms_; }
  const CtblOrd& tail() const { return tail_; }

  bool is_zero() const { return uterms_.empty() && tail_.is_zero(); }
  bool is_countable() const { return uterms_.empty(); }
  bool is_successor() const { return tail_.is_successor(); }
  bool is_limit() const { return !is_zero() && !is_successor(); }
  unsigned top_level() const { return uterms_.empty() ? 0 : uterms_.front().level; }

  std::string str() const;

  friend UOrd operator+(const UOrd& a, const UOrd& b);
  friend std::strong_ordering operator<=>(const UOrd& a, const UOrd& b);
  friend bool operator==(const UOrd& a, const UOrd& b) = default;

 private:
  std::vector<UTerm> uterms_;
  CtblOrd tail_;
};

inline std::strong_ordering ord_compare(const UOrd& a, const UOrd& b) { return a <=> b; }
inline UOrd ord_add(const UOrd& a, const UOrd& b) { return a + b; }

UOrd parse_uord(const std::string& text);

// L-cofinality: 0, successor, omega, or u_level.
struct Cofinality {
  enum class Kind { Zero, Successor, Omega, U };
  Kind kind = Kind::Zero;
  unsigned level = 0;

  std::string str() const;
  friend bool operator==(const Cofinality&, const Cofinality&) = default;
};

Cofinality cf_L(const UOrd& b);

// Strictly increasing map {1..n} -> {1..n'}, with sigma(0) = 0.
class IndexMap {
 public:
  IndexMap() = default;
  IndexMap(unsigned n_prime, std::vector<unsigned> images);

  static IndexMap identity(unsigned n);

  unsigned n() const { return static_cast<unsigned>(images_.size()); }
  unsigned n_prime() const { return n_prime_; }
  unsigned operator()(unsigned k) const;
  const std::vector<unsigned>& images() const { return images_; }

  std::string str() const;

  friend bool operator==(const IndexMap&, const IndexMap&) = default;

 private:
  unsigned n_prime_ = 0;
  std::vector<unsigned> images_;
};

// outer after inner; requires inner.n_prime() <= outer.n().
IndexMap compose(const IndexMap& outer, const IndexMap& inner);

IndexMap parse_index_map(const std::string& text);

UOrd apply_shift(const IndexMap& sigma, const UOrd& b);
UOrd apply_shift_sup(const IndexMap& sigma, const UOrd& b);
// True when the continuity criterion makes j^sigma_sup agree with j^sigma.
bool shift_is_continuous_at(const IndexMap& sigma, const UOrd& b);
std::pair<IndexMap, IndexMap> decompose_shift(const IndexMap& sigma, unsigned k);

}  // namespace uctk
