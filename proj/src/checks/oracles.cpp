#include <algorithm>
#include <functional>

#include "uctk/bk_order.hpp"
#include "uctk/checks.hpp"
#include "uctk/error.hpp"

namespace uctk::checks {

namespace {

[[noreturn]] void oracle_failure(const std::string& what) { throw Error("OracleFailure", what); }

// Separate Brouwer-Kleene comparison on raw entry vectors.
bool raw_bk_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() > b.size();
}

struct Sample {
  std::vector<std::uint32_t> node;
  int n;  // -1 for the bare point (p)
};

bool sample_less(const Sample& x, const Sample& y) {
  if (x.node != y.node) return raw_bk_less(x.node, y.node);
  if (x.n < 0 || y.n < 0) return y.n < 0 && x.n >= 0;
  return x.n < y.n;
}

}  // namespace

CtblOrd rank_order_type(const Level1Tree& p) {
  constexpr int kTrunc = 6;
  std::vector<Sample> v;
  for (const Node& a : p.nodes()) {
    for (int n = 0; n < kTrunc; ++n) v.push_back({a.entries(), n});
    v.push_back({a.entries(), -1});
  }
  std::sort(v.begin(), v.end(), sample_less);
  // Each (p) must be preceded by exactly its own (p, 0) ... (p, K-1), so every
  // block is an omega-sequence topped by its supremum.
  CtblOrd type;
  const CtblOrd block = CtblOrd::omega() + CtblOrd::natural(1);
  for (std::size_t i = 0; i < v.size(); i += kTrunc + 1) {
    for (int j = 0; j <= kTrunc; ++j) {
      const Sample& s = v[i + j];
      if (s.node != v[i].node || s.n != (j < kTrunc ? j : -1)) oracle_failure("rep(" + p.str() + ") is not a chain of blocks");
    }
    type = type + block;
  }
  return type;
}

UOrd shift_sup_by_decomposition(const IndexMap& sigma, const UOrd& b) {
  if (!b.is_limit()) throw Error("NotALimit", b.str() + " is not a limit");
  if (!b.tail().is_zero() || b.uterms().back().coeff.is_limit()) return apply_shift(sigma, b);
  const unsigned k = b.uterms().back().level;
  if (sigma(k) == sigma(k - 1) + 1) return apply_shift(sigma, b);
  bool fixes_below = true;
  for (unsigned i = 1; i < k; ++i) fixes_below = fixes_below && sigma(i) == i;
  if (!fixes_below) {
    const auto [sk, tk] = decompose_shift(sigma, k);
    return apply_shift(sk, shift_sup_by_decomposition(tk, b));
  }
  // Everything below u_k is fixed, so the supremum over b = d + u_k is j(d) + u_k.
  std::vector<UTerm> terms = b.uterms();
  CtblOrd& c = terms.back().coeff;
  c = c.predecessor();
  if (c.is_zero()) terms.pop_back();
  return apply_shift(sigma, UOrd(terms, CtblOrd())) + UOrd::u(k);
}

std::vector<Level1Tree> induced_tower_by_search(const std::vector<Node>& signature, const Level1Tree& w) {
  (void)w;
  std::vector<Level1Tree> trees{Level1Tree()};
  std::vector<Node> placed;
  for (std::size_t i = 0; i < signature.size(); ++i) {
    std::vector<Node> hits;
    for (const Node& a : addable_nodes(trees.back())) {
      bool same = true;
      for (std::size_t j = 0; j < i; ++j)
        same = same && bk_less(a, placed[j]) == bk_less(signature[i], signature[j]);
      if (same) hits.push_back(a);
    }
    if (hits.size() != 1) oracle_failure("no unique tower step for the signature");
    placed.push_back(hits.front());
    trees.push_back(with_node(trees.back(), hits.front()));
  }
  return trees;
}

namespace {

// w^(w^2 * a + w * k), a >= 1.
CtblOrd sample_point(std::uint64_t a, std::uint64_t k) {
  CtblOrd e = CtblOrd::omega_pow(CtblOrd::natural(2), a);
  if (k) e = e + CtblOrd::omega_pow(CtblOrd::natural(1), k);
  return CtblOrd::omega_pow(e);
}

CtblOrd evaluate(const UOrd& b, const std::vector<CtblOrd>& value_by_level) {
  CtblOrd r;
  for (const UTerm& t : b.uterms()) r = r + value_by_level[t.level - 1] * t.coeff;
  return r + b.tail();
}

CtblOrd infer_limit(const std::vector<CtblOrd>& m) {
  if (std::all_of(m.begin(), m.end(), [&](const CtblOrd& x) { return x == m.front(); })) return m.front();
  for (std::size_t i = 1; i < m.size(); ++i)
    if (!(m[i - 1] < m[i])) oracle_failure("samples are not increasing");
  std::size_t d = 0;
  for (;; ++d) {
    bool same = true;
    for (const CtblOrd& x : m) same = same && d < x.terms().size() && x.terms()[d] == m.front().terms()[d];
    if (!same) break;
  }
  for (const CtblOrd& x : m)
    if (d >= x.terms().size()) oracle_failure("samples diverge at a missing term");
  CtblOrd prefix(std::vector<CnfTerm>(m.back().terms().begin(), m.back().terms().begin() + static_cast<long>(d)));
  std::vector<CtblOrd> exps;
  for (const CtblOrd& x : m) exps.push_back(x.terms()[d].exponent);
  if (std::all_of(exps.begin(), exps.end(), [&](const CtblOrd& e) { return e == exps.front(); }))
    return prefix + CtblOrd::omega_pow(exps.front() + CtblOrd::natural(1));
  return prefix + CtblOrd::omega_pow(infer_limit(exps));
}

// Reads a value built from the points w^(w^2 * 2(r+1)) back as an
// ordinal in u_1, ..., u_n.
UOrd read_back(const CtblOrd& x) {
  std::map<unsigned, CtblOrd, std::greater<>> coeffs;
  CtblOrd tail;
  for (const CnfTerm& t : x.terms()) {
    const auto& et = t.exponent.terms();
    if (et.empty() || et.front().exponent < CtblOrd::natural(2)) {
      tail = tail + CtblOrd::omega_pow(t.exponent, t.coeff);
      continue;
    }
    if (!(et.front().exponent == CtblOrd::natural(2))) oracle_failure("value outside the sampled range");
    const std::uint64_t a = et.front().coeff;
    if (a % 2) oracle_failure("limit lands on an intermediate point");
    const CtblOrd rest(std::vector<CnfTerm>(et.begin() + 1, et.end()));
    coeffs[static_cast<unsigned>(a / 2)] = coeffs[static_cast<unsigned>(a / 2)] + CtblOrd::omega_pow(rest, t.coeff);
  }
  UOrd r;
  for (const auto& [level, c] : coeffs) r = r + UOrd::u(level, c);
  return r + UOrd(tail);
}

// All strictly increasing choices of `count` values from 1..k.
void increasing_choices(std::size_t count, std::uint64_t k, std::vector<std::uint64_t>& cur,
                        std::vector<std::vector<std::uint64_t>>& out) {
  if (cur.size() == count) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t v = cur.empty() ? 1 : cur.back() + 1; v <= k; ++v) {
    cur.push_back(v);
    increasing_choices(count, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<UOrd> approximation_by_evaluation(const UOrd& b, const Level1Tree& w) {
  const std::size_t m = b.uterms().size();
  std::vector<std::size_t> sig_rank;
  std::vector<Node> signature;
  for (const UTerm& t : b.uterms()) {
    sig_rank.push_back(t.level - 1);
    signature.push_back(w.nodes()[t.level - 1]);
  }
  const std::vector<Level1Tree> tower = induced_tower_by_search(signature, w);
  std::vector<Node> p_nodes;
  for (std::size_t i = 0; i < m; ++i)
    for (const Node& a : tower[i + 1].nodes())
      if (!tower[i].contains(a)) p_nodes.push_back(a);

  std::vector<UOrd> out{UOrd::u(1)};
  for (std::size_t i = 1; i <= m; ++i) {
    const Level1Tree& p = tower[i];
    // Exponent index a of each fixed W rank: value w^(w^2 * a).
    std::map<std::size_t, std::uint64_t> fixed;
    for (std::size_t l = 0; l < i; ++l) fixed[sig_rank[l]] = 2 * (p.rank(p_nodes[l]) + 1);
    // Free W ranks grouped by the exponent index just above them.
    std::map<std::uint64_t, std::vector<std::size_t>> gaps;
    for (std::size_t r = 0; r < w.size(); ++r) {
      if (fixed.count(r)) continue;
      auto up = fixed.upper_bound(r);
      gaps[up == fixed.end() ? 2 * (p.size() + 1) : up->second].push_back(r);
    }
    std::vector<CtblOrd> maxima;
    for (std::uint64_t k : {3, 4, 5}) {
      std::vector<std::vector<std::vector<std::uint64_t>>> per_gap;
      for (const auto& [a, ranks] : gaps) {
        std::vector<std::uint64_t> cur;
        per_gap.emplace_back();
        increasing_choices(ranks.size(), k, cur, per_gap.back());
      }
      CtblOrd best;
      std::vector<std::size_t> idx(per_gap.size(), 0);
      for (;;) {
        std::vector<CtblOrd> value(w.size());
        for (const auto& [r, a] : fixed) value[r] = sample_point(a, 0);
        std::size_t g = 0;
        for (const auto& [a, ranks] : gaps) {
          for (std::size_t j = 0; j < ranks.size(); ++j) value[ranks[j]] = sample_point(a - 1, per_gap[g][idx[g]][j]);
          ++g;
        }
        best = std::max(best, evaluate(b, value));
        std::size_t carry = 0;
        while (carry < idx.size() && ++idx[carry] == per_gap[carry].size()) idx[carry++] = 0;
        if (carry == idx.size()) break;
      }
      maxima.push_back(best);
    }
    out.push_back(read_back(infer_limit(maxima)));
  }
  return out;
}

bool continuity_by_evaluation(const UOrd& b, const Level1Tree& w) {
  std::vector<CtblOrd> value(w.size());
  for (std::size_t r = 0; r < w.size(); ++r) value[r] = sample_point(2 * (r + 1), 0);
  const CtblOrd at = evaluate(b, value);
  const std::size_t last = b.uterms().back().level - 1;
  std::vector<CtblOrd> below;
  for (std::uint64_t k : {3, 4, 5}) {
    std::vector<CtblOrd> v = value;
    v[last] = sample_point(2 * (last + 1) - 1, k);
    below.push_back(evaluate(b, v));
  }
  return infer_limit(below) == at;
}

std::optional<OrdTuple2> witness_tuple(const LevelLe2Tree& t) {
  OrdTuple2 beta;
  for (const Node& p : t.t1.nodes())
    beta[DomKey{1, {p}}] = UOrd(CtblOrd::omega() * CtblOrd::natural(t.t1.rank(p) + 1));
  beta[DomKey{2, {}}] = UOrd::u(1);
  // Map order lists every parent before its children.
  for (const auto& [q, v] : t.t2.entries()) {
    if (q.empty()) continue;
    const UOrd& up = beta.at(DomKey{2, seq_parent(q)});
    std::vector<UTerm> terms;
    for (const UTerm& u : up.uterms()) terms.push_back(UTerm{u.level + 1, u.coeff});
    CtblOrd& e = terms.back().coeff;
    if (!e.is_successor()) return std::nullopt;
    e = e.predecessor();
    if (e.is_zero()) terms.pop_back();
    const std::uint64_t r = t.t2.children(seq_parent(q)).rank(q.back());
    const CtblOrd w_r = CtblOrd::omega() * CtblOrd::natural(r);
    const CtblOrd c = v.degree() == 1 ? w_r + CtblOrd::natural(2) : CtblOrd::omega() * CtblOrd::natural(r + 1);
    beta[DomKey{2, q}] = UOrd(terms, CtblOrd()) + UOrd::u(1, c);
  }
  try {
    if (!respects_le2(t, beta)) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return beta;
}

CtblOrd random_coeff(std::mt19937_64& rng, bool successor) {
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
  const CtblOrd w = CtblOrd::omega();
  auto wp = [](std::uint64_t e, std::uint64_t c) { return CtblOrd::omega_pow(CtblOrd::natural(e), c); };
  CtblOrd c;
  switch (pick(0, 5)) {
    case 0: c = CtblOrd::natural(pick(1, 9)); break;
    case 1: c = w * CtblOrd::natural(pick(1, 5)) + CtblOrd::natural(pick(0, 5)); break;
    case 2: c = wp(2, pick(1, 3)) + w * CtblOrd::natural(pick(0, 3)) + CtblOrd::natural(pick(0, 3)); break;
    case 3: c = CtblOrd::omega_pow(w, pick(1, 3)) + w * CtblOrd::natural(pick(0, 3)) + CtblOrd::natural(pick(0, 3)); break;
    case 4: c = CtblOrd::omega_pow(w + CtblOrd::natural(1), pick(1, 2)) + CtblOrd::natural(pick(0, 4)); break;
    default:
      c = CtblOrd::omega_pow(w * CtblOrd::natural(2) + CtblOrd::natural(1)) + wp(3, pick(1, 3)) + CtblOrd::natural(pick(0, 3));
  }
  if (successor && !c.is_successor()) c = c + CtblOrd::natural(1);
  return c;
}

UOrd random_uord(std::mt19937_64& rng, unsigned max_level, bool limit) {
  std::vector<UTerm> terms;
  std::bernoulli_distribution half(0.5);
  for (unsigned l = max_level; l >= 1; --l)
    if (half(rng)) terms.push_back(UTerm{l, random_coeff(rng, false)});
  if (terms.empty()) {
    const unsigned l = std::uniform_int_distribution<unsigned>(1, max_level)(rng);
    terms.push_back(UTerm{l, random_coeff(rng, false)});
  }
  CtblOrd tail;
  if (half(rng)) {
    tail = random_coeff(rng, false);
    if (limit && tail.is_successor()) tail = tail + CtblOrd::omega();
  }
  return UOrd(terms, tail);
}

IndexMap random_index_map(std::mt19937_64& rng, unsigned max_n, unsigned extra) {
  const unsigned n = std::uniform_int_distribution<unsigned>(1, max_n)(rng);
  const unsigned np = n + std::uniform_int_distribution<unsigned>(0, extra)(rng);
  std::vector<unsigned> all(np);
  for (unsigned i = 0; i < np; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(n);
  std::sort(all.begin(), all.end());
  return IndexMap(np, all);
}

Level1Tree random_level1(std::mt19937_64& rng, std::size_t max_nodes) {
  Level1Tree p;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_nodes)(rng);
  while (p.size() < n) {
    const std::vector<Node> a = addable_nodes(p);
    p = with_node(p, a[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng)]);
  }
  return p;
}

}  // namespace uctk::checks
