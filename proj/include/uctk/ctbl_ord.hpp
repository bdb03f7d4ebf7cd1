#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace uctk {

struct CnfTerm;

// Countable ordinal below epsilon_0 in Cantor normal form: a sum of
// omega^e * c with strictly decreasing exponents e and positive naturals c.
class CtblOrd {
 public:
  CtblOrd() = default;
  explicit CtblOrd(std::vector<CnfTerm> terms);

  static CtblOrd natural(std::uint64_t n);
  static CtblOrd omega();
  static CtblOrd omega_pow(const CtblOrd& exponent, std::uint64_t coeff = 1);

  const std::vector<CnfTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_natural() const;
  bool is_successor() const;
  bool is_limit() const;
  // Finite part; the whole value when is_natural().
  std::uint64_t finite_part() const;
  // Requires is_successor().
  CtblOrd predecessor() const;

  std::string str(bool spaced = true) const;

  friend CtblOrd operator+(const CtblOrd& a, const CtblOrd& b);
  friend CtblOrd operator*(const CtblOrd& a, const CtblOrd& b);
  friend std::strong_ordering operator<=>(const CtblOrd& a, const CtblOrd& b);
  friend bool operator==(const CtblOrd& a, const CtblOrd& b);

 private:
  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  CtblOrd exponent;
  std::uint64_t coeff = 1;

  friend bool operator==(const CnfTerm& a, const CnfTerm& b) {
    return a.coeff == b.coeff && a.exponent == b.exponent;
  }
};

// Reads the ordinal grammar: sums and products of naturals, w, and w^x.
CtblOrd parse_ctbl(const std::string& text);

}  // namespace uctk
