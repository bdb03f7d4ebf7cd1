#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uctk/analysis.hpp"
#include "uctk/level1.hpp"
#include "uctk/level2.hpp"
#include "uctk/level3.hpp"

// Independent oracles and the executable invariant suites run by
// `uctk check-lemmas` and the acceptance binary.
namespace uctk::checks {

// Order type of rep(P) computed by sorting a truncated sample of rep(P)
// with a separate comparator and reading off its block structure.
CtblOrd rank_order_type(const Level1Tree& p);

// j^sigma_sup through the decomposition recursion sigma = sigma_k o tau_k,
// bottoming out at maps that fix every level below the cofinality.
UOrd shift_sup_by_decomposition(const IndexMap& sigma, const UOrd& b);

// The level-1 tower induced by a signature, found by search.
std::vector<Level1Tree> induced_tower_by_search(const std::vector<Node>& signature, const Level1Tree& w);

// Approximation sequence computed by evaluating b as a function on
// additively closed countable ordinals and taking suprema numerically.
// Coefficients and tail of b must lie below w^(w^2).
std::vector<UOrd> approximation_by_evaluation(const UOrd& b, const Level1Tree& w);
// Essential continuity decided the same way.
bool continuity_by_evaluation(const UOrd& b, const Level1Tree& w);

// Respecting tuple built from the shape of the tree; empty when the
// construction does not yield a respecting tuple.
std::optional<OrdTuple2> witness_tuple(const LevelLe2Tree& t);

// Random material for the corpora.
CtblOrd random_coeff(std::mt19937_64& rng, bool successor);
UOrd random_uord(std::mt19937_64& rng, unsigned max_level, bool limit);
IndexMap random_index_map(std::mt19937_64& rng, unsigned max_n, unsigned extra);
Level1Tree random_level1(std::mt19937_64& rng, std::size_t max_nodes);

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failed = 0;
  // First few counterexamples, verbatim.
  std::vector<std::string> counterexamples;
  // Named counters reported with the suite (coverage, vacuous cases, ...).
  std::map<std::string, std::size_t> counters;

  bool ok() const { return failed == 0 && cases > 0; }
  void check(bool pass, const std::string& what);
};

SuiteResult suite_bk_order(std::uint64_t seed, std::size_t samples);
SuiteResult suite_ordinal_arithmetic(std::uint64_t seed, std::size_t samples);
SuiteResult suite_order_type(std::size_t max_nodes);
SuiteResult suite_factoring(std::size_t max_nodes);
SuiteResult suite_shift(std::uint64_t seed, std::size_t samples, unsigned max_level);
SuiteResult suite_analysis(std::uint64_t seed, std::size_t samples);
SuiteResult suite_ucf_lemmas(std::size_t max_nodes, std::size_t betas_per_config);
SuiteResult suite_uniqueness(std::size_t max_card);
SuiteResult suite_descriptions(std::size_t max_card);
SuiteResult suite_respect_hierarchy(std::uint64_t seed, std::size_t max_card);
SuiteResult suite_rep2(std::size_t max_card);
SuiteResult suite_tree_property(std::size_t bound);
SuiteResult suite_ucf_coverage(std::size_t max_card);
SuiteResult suite_level3(std::size_t max_card);
SuiteResult suite_roundtrip(std::uint64_t seed, std::size_t samples);

// Every suite at sizes scaled from bound.
std::vector<SuiteResult> run_all(std::size_t bound, std::uint64_t seed);

}  // namespace uctk::checks
