#include <algorithm>
#include <set>

#include "uctk/bk_order.hpp"
#include "uctk/checks.hpp"
#include "uctk/enumerate.hpp"
#include "uctk/error.hpp"
#include "uctk/text.hpp"

namespace uctk::checks {

void SuiteResult::check(bool pass, const std::string& what) {
  ++cases;
  if (pass) return;
  ++failed;
  if (counterexamples.size() < 5) counterexamples.push_back(what);
}

namespace {

// Runs body and turns an unexpected kernel error into a failed case.
template <typename F>
void guarded(SuiteResult& s, const std::string& what, F body) {
  try {
    body();
  } catch (const Error& e) {
    s.check(false, what + ": " + e.code() + ": " + e.what());
  }
}

Node random_node(std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(std::uniform_int_distribution<std::size_t>(0, 3)(rng));
  for (auto& x : v) x = std::uniform_int_distribution<std::uint32_t>(0, 2)(rng);
  return Node(v);
}

Node concat(const Node& a, const Node& b) {
  std::vector<std::uint32_t> v = a.entries();
  v.insert(v.end(), b.entries().begin(), b.entries().end());
  return Node(v);
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Increasing maps P -> W counted by brute force over all |W|^|P| maps.
std::size_t count_increasing_maps(const Level1Tree& p, const Level1Tree& w) {
  const std::size_t n = p.size(), m = w.size();
  if (n == 0) return 1;
  if (m == 0) return 0;
  std::vector<std::size_t> img(n, 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) ok = bk_less(w.nodes()[img[i]], w.nodes()[img[i + 1]]);
    if (ok) ++count;
    std::size_t c = 0;
    while (c < n && ++img[c] == m) img[c++] = 0;
    if (c == n) break;
  }
  return count;
}

std::size_t index_of(const Level1Tree& p, const Node& a) { return p.rank(a); }

DomainShape shape_of(const LevelLe2Tree& t) {
  DomainShape s{t.t1, {}};
  for (const auto& [q, v] : t.t2.entries()) s.dom2.push_back(q);
  return s;
}

// In the additive fragment the uniform cofinality of an ordinal sits at its
// lowest u-level, so the pending node of every degree-1 entry must be the
// first child of its parent's pending node.
bool fragment_realizable(const LevelLe2Tree& t) {
  for (const auto& [q, v] : t.t2.entries()) {
    if (q.empty() || v.degree() == 0) continue;
    const ExtNode& up = t.t2.node(seq_parent(q));
    if (!(v.node.node() == up.node().child(0))) return false;
  }
  return true;
}

CtblOrd omega_times(std::uint64_t n) { return CtblOrd::omega() * CtblOrd::natural(n); }

// Betas with levels <= n and L-cofinality u_k (k >= 1) or omega (k == 0).
std::vector<UOrd> qualifying_betas(unsigned n, unsigned k, std::size_t count) {
  std::mt19937_64 rng(0x5eedULL + 131 * n + k);
  std::set<std::string> seen;
  std::vector<UOrd> out;
  for (std::size_t tries = 0; out.size() < count && tries < 100 * count; ++tries) {
    std::vector<UTerm> terms;
    std::bernoulli_distribution half(0.5);
    const unsigned lowest = k ? k + 1 : 1;
    for (unsigned l = n; l >= lowest; --l)
      if (half(rng)) terms.push_back(UTerm{l, random_coeff(rng, false)});
    CtblOrd tail;
    if (k) {
      terms.push_back(UTerm{k, random_coeff(rng, true)});
    } else {
      if (terms.empty() || half(rng)) {
        tail = random_coeff(rng, false);
        if (!tail.is_limit()) tail = tail + CtblOrd::omega();
      } else if (!terms.back().coeff.is_limit()) {
        terms.back().coeff = terms.back().coeff + CtblOrd::omega();
      }
    }
    UOrd b(terms, tail);
    if (seen.insert(b.str()).second) out.push_back(b);
  }
  return out;
}

SuiteResult make_suite(const std::string& name) {
  SuiteResult s;
  s.name = name;
  return s;
}

bool opposite(std::strong_ordering a, std::strong_ordering b) { return a == (0 <=> b); }

}  // namespace

SuiteResult suite_bk_order(std::uint64_t seed, std::size_t samples) {
  SuiteResult s = make_suite("bk-order");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Node a = random_node(rng), b = random_node(rng), c = random_node(rng);
    const auto ab = bk_compare(a, b), ba = bk_compare(b, a);
    s.check((ab < 0) == (ba > 0) && (ab == 0) == (a == b), "trichotomy " + a.str() + " " + b.str());
    if (ab < 0 && bk_compare(b, c) < 0) s.check(bk_compare(a, c) < 0, "transitivity " + a.str() + b.str() + c.str());
    Node e = random_node(rng);
    if (e.empty()) e = Node{0};
    s.check(bk_compare(concat(a, e), a) < 0, "lengthening " + a.str() + " " + e.str());
    if (ab < 0 && !a.is_prefix_of(b) && !b.is_prefix_of(a)) {
      const Node e2 = random_node(rng);
      s.check(bk_compare(concat(a, e), concat(b, e2)) < 0, "antitone prefix " + a.str() + " " + b.str());
    }
  }
  return s;
}

SuiteResult suite_ordinal_arithmetic(std::uint64_t seed, std::size_t samples) {
  SuiteResult s = make_suite("ordinal-arithmetic");
  std::mt19937_64 rng(seed + 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const UOrd a = random_uord(rng, 4, false), b = random_uord(rng, 4, false), c = random_uord(rng, 4, false);
    s.check((a + b) + c == a + (b + c), "associativity " + a.str() + " | " + b.str() + " | " + c.str());
    if (a < b) s.check(c + a < c + b, "left monotonicity " + a.str() + " < " + b.str() + " with " + c.str());
    s.check(((a < b) + (a == b) + (b < a)) == 1, "trichotomy " + a.str() + " " + b.str());
    s.check(parse_uord(a.str()) == a, "normal form round trip " + a.str());
    const CtblOrd x = random_coeff(rng, false), y = random_coeff(rng, false), z = random_coeff(rng, false);
    s.check((x + y) + z == x + (y + z), "countable associativity " + x.str() + " | " + y.str() + " | " + z.str());
  }
  return s;
}

SuiteResult suite_order_type(std::size_t max_nodes) {
  SuiteResult s = make_suite("order-type");
  for (const Level1Tree& p : level1_trees(max_nodes)) {
    if (p.empty()) continue;
    ++s.counters["trees"];
    const CtblOrd want = omega_times(p.size()) + CtblOrd::natural(1);
    guarded(s, p.str(), [&] {
      const CtblOrd got = rep_order_type(p), oracle = rank_order_type(p);
      s.check(got == oracle && got == want, p.str() + ": kernel " + got.str() + ", oracle " + oracle.str());
    });
  }
  return s;
}

SuiteResult suite_factoring(std::size_t max_nodes) {
  SuiteResult s = make_suite("factoring");
  const auto trees = level1_trees(max_nodes);
  for (const Level1Tree& p : trees) {
    for (const Level1Tree& w : trees) {
      ++s.counters["pairs"];
      const CtblOrd tp = rep_order_type(p), tw = rep_order_type(w);
      const std::string tag = "(" + p.str() + ", " + w.str() + ")";
      s.check(factor_exists(p, w) == (tp <= tw), "factor_exists " + tag);
      s.check(strict_factor_exists(p, w) == (tp < tw), "strict_factor_exists " + tag);
      const auto fs = factorings(p, w);
      s.check(fs.size() == count_increasing_maps(p, w) && fs.size() == binom(w.size(), p.size()), "factorings count " + tag);
      for (const FactorMap1& f : fs) {
        const IndexMap hat = factor_to_shift(f, p, w);
        bool seeds_ok = apply_shift(hat, seed(p, Desc1{})) == seed(w, Desc1{});
        for (std::size_t i = 0; i < p.size(); ++i)
          seeds_ok = seeds_ok && apply_shift(hat, seed(p, Desc1{p.nodes()[i]})) == seed(w, Desc1{f.images[i]});
        s.check(seeds_ok, "seed action " + f.str(p) + " " + tag);
      }
    }
    const auto self = factorings(p, p);
    s.check(std::find(self.begin(), self.end(), FactorMap1{p.nodes()}) != self.end(), "identity factors " + p.str());
  }
  // Composition on the smaller trees.
  std::vector<Level1Tree> small;
  for (const Level1Tree& p : trees)
    if (p.size() <= 3) small.push_back(p);
  for (const Level1Tree& p : small)
    for (const Level1Tree& w : small)
      for (const Level1Tree& v : small)
        for (const FactorMap1& f : factorings(p, w))
          for (const FactorMap1& g : factorings(w, v)) {
            FactorMap1 h;
            for (const Node& a : f.images) h.images.push_back(g.images[index_of(w, a)]);
            s.check(is_factoring(h, p, v), "composition " + p.str() + " " + w.str() + " " + v.str());
          }
  return s;
}

SuiteResult suite_shift(std::uint64_t seed, std::size_t samples, unsigned max_level) {
  SuiteResult s = make_suite("shift");
  std::mt19937_64 rng(seed + 2);
  for (std::size_t i = 0; i < samples; ++i) {
    const IndexMap sigma = random_index_map(rng, max_level, 3);
    const UOrd b = random_uord(rng, sigma.n(), true);
    const std::string tag = sigma.str() + " at " + b.str();
    guarded(s, tag, [&] {
      const UOrd closed = apply_shift_sup(sigma, b);
      const UOrd oracle = shift_sup_by_decomposition(sigma, b);
      s.check(closed == oracle, "closed form " + closed.str() + " vs recursion " + oracle.str() + " for " + tag);
      bool criterion = !b.tail().is_zero() || b.uterms().back().coeff.is_limit();
      if (!criterion) {
        const unsigned k = b.uterms().back().level;
        criterion = sigma(k) == sigma(k - 1) + 1;
      }
      s.check(criterion == (closed == apply_shift(sigma, b)), "continuity criterion for " + tag);
      ++s.counters[criterion ? "continuous" : "discontinuous"];
      const UOrd lower = random_uord(rng, sigma.n(), false);
      if (lower < b)
        s.check(apply_shift(sigma, lower) < closed && !(apply_shift(sigma, b) < closed), "sup bounds for " + tag);
      const IndexMap tau = random_index_map(rng, sigma.n(), 0);
      if (tau.n_prime() <= sigma.n()) {
        UOrd c = random_uord(rng, tau.n(), false);
        s.check(apply_shift(compose(sigma, tau), c) == apply_shift(sigma, apply_shift(tau, c)), "functoriality for " + tag);
      }
    });
  }
  return s;
}

SuiteResult suite_analysis(std::uint64_t seed, std::size_t samples) {
  SuiteResult s = make_suite("analysis");
  std::vector<Level1Tree> ws;
  for (const Level1Tree& w : level1_trees(3))
    if (!w.empty()) ws.push_back(w);
  std::mt19937_64 rng(seed + 3);
  for (std::size_t i = 0; i < samples; ++i) {
    const Level1Tree& w = ws[i % ws.size()];
    UOrd b = random_uord(rng, static_cast<unsigned>(w.size()), true);
    if (i % 3 == 0) {
      // Essentially continuous: last coefficient 1 and no tail.
      std::vector<UTerm> terms = b.uterms();
      terms.back().coeff = CtblOrd::natural(1);
      b = UOrd(terms, CtblOrd());
    }
    const std::string tag = b.str() + " over " + w.str();
    guarded(s, tag, [&] {
      const OrdAnalysis a = analyze(b, w);
      s.check(a.uniform_cofinality == cf_L(b), "ucf vs cf_L for " + tag);
      s.check(a.potential_tower.continuous() == a.essentially_continuous, "tower type for " + tag);
      s.check(continuity_by_evaluation(b, w) == a.essentially_continuous, "continuity oracle for " + tag);
      const auto approx = approximation_by_evaluation(b, w);
      std::string got, want;
      for (const UOrd& x : a.approximation_sequence) got += x.str() + "; ";
      for (const UOrd& x : approx) want += x.str() + "; ";
      s.check(approx == a.approximation_sequence, "approximations for " + tag + ": kernel " + got + "oracle " + want);
      s.check(induced_tower_by_search(a.signature, w) == a.induced_tower.trees, "induced tower for " + tag);
      const Level1Tree& pm = a.induced_tower.trees.back();
      bool map_ok = is_factoring(a.factoring_map, pm, w);
      for (std::size_t j = 0; j < a.tower_nodes.size(); ++j)
        map_ok = map_ok && a.factoring_map.images[pm.rank(a.tower_nodes[j])] == a.signature[j];
      s.check(map_ok, "factoring map for " + tag);
      s.check(apply_shift(factor_to_shift(a.factoring_map, pm, w), a.approximation_sequence.back()) == b,
              "last approximation recovers b for " + tag);
      if (a.ucf_node && !a.essentially_continuous) {
        const Node& top = a.potential_tower.nodes.back().node();
        validate_partial_le1(pm, top);
        s.check(a.factoring_map.images[pm.rank(top.parent())] == *a.ucf_node, "ucf node for " + tag);
      }
      ++s.counters[a.essentially_continuous ? "continuous" : "discontinuous"];
    });
  }
  return s;
}

SuiteResult suite_ucf_lemmas(std::size_t max_nodes, std::size_t betas_per_config) {
  SuiteResult s = make_suite("level2-ucf-lemmas");
  const auto ws = level1_trees(max_nodes);
  std::map<std::pair<unsigned, unsigned>, std::vector<UOrd>> cache;
  auto betas = [&](unsigned n, unsigned k) -> const std::vector<UOrd>& {
    auto key = std::make_pair(n, k);
    if (!cache.count(key)) cache[key] = qualifying_betas(n, k, betas_per_config);
    return cache[key];
  };
  auto predecessor = [](const Level1Tree& w, const Node& a) -> std::optional<Node> {
    const std::size_t r = w.rank(a);
    if (r == 0) return std::nullopt;
    return w.nodes()[r - 1];
  };

  for (const PartialLevel1Tree& pt : partial_le1_trees(max_nodes)) {
    const Level1Tree& base = pt.base;
    // First identity: (P-, p) with completion P.
    if (pt.degree() == 1 && pt.node.node().size() > 1) {
      const Level1Tree p = completion_le1(pt);
      const Node& t = pt.node.node();
      const unsigned k = static_cast<unsigned>(base.rank(t.parent())) + 1;
      const auto& bs = betas(static_cast<unsigned>(base.size()), k);
      for (const Level1Tree& w : ws) {
        for (const FactorMap1& f : factorings(p, w)) {
          const auto pred = predecessor(w, f.images[p.rank(t)]);
          if (!pred) continue;
          FactorMap1 g = f;
          g.images[p.rank(t)] = *pred;
          if (!is_factoring(g, p, w)) continue;
          ++s.counters["first-configs"];
          const IndexMap sh = factor_to_shift(f, p, w), gh = factor_to_shift(g, p, w);
          const IndexMap inc = inclusion_shift(base, p);
          for (const UOrd& b : bs) {
            const std::string tag = "first identity " + pt.str() + " " + w.str() + " " + f.str(p) + " " + b.str();
            guarded(s, tag, [&] {
              const UOrd lhs = apply_shift(sh, tree_embed_sup(base, p, b));
              const UOrd rhs = apply_shift_sup(gh, tree_embed(base, p, b));
              const UOrd lhs_o = apply_shift(sh, shift_sup_by_decomposition(inc, b));
              const UOrd rhs_o = shift_sup_by_decomposition(gh, apply_shift(inc, b));
              s.check(lhs == rhs && lhs_o == rhs_o && lhs == lhs_o, tag + ": " + lhs.str() + " vs " + rhs.str());
            });
          }
        }
      }
    }
    // Second identity, both cases.
    std::optional<Level1Tree> plus;
    unsigned k = 0;
    if (pt.degree() == 0) {
      plus = base;
    } else if (pt.node.node().size() > 1) {
      plus = completion_le1(pt);
      k = static_cast<unsigned>(base.rank(pt.node.node().parent())) + 1;
    }
    if (!plus) continue;
    const auto& bs = betas(static_cast<unsigned>(base.size()), k);
    for (const Level1Tree& w : ws) {
      for (const FactorMap1& f : factorings(base, w)) {
        FactorMap1 g;
        if (pt.degree() == 0) {
          g = f;
        } else {
          const Node& t = pt.node.node();
          const auto pred = predecessor(w, f.images[base.rank(t.parent())]);
          if (!pred) continue;
          for (const Node& a : plus->nodes()) g.images.push_back(a == t ? *pred : f.images[base.rank(a)]);
          if (!is_factoring(g, *plus, w)) continue;
        }
        ++s.counters[pt.degree() == 0 ? "second-configs-omega" : "second-configs-seed"];
        const IndexMap sh = factor_to_shift(f, base, w), gh = factor_to_shift(g, *plus, w);
        for (const UOrd& b : bs) {
          const std::string tag = "second identity " + pt.str() + " " + w.str() + " " + f.str(base) + " " + b.str();
          guarded(s, tag, [&] {
            const UOrd lhs = apply_shift(sh, b);
            const UOrd rhs = apply_shift_sup(gh, tree_embed(base, *plus, b));
            const UOrd rhs_o = shift_sup_by_decomposition(gh, tree_embed(base, *plus, b));
            s.check(lhs == rhs && rhs == rhs_o, tag + ": " + lhs.str() + " vs " + rhs.str());
          });
        }
      }
    }
  }
  std::size_t smallest = SIZE_MAX;
  for (const auto& [key, v] : cache) smallest = std::min(smallest, v.size());
  s.counters["min-betas-per-config"] = cache.empty() ? 0 : smallest;
  return s;
}

SuiteResult suite_uniqueness(std::size_t max_card) {
  SuiteResult s = make_suite("uniqueness");
  for (const LevelLe2Tree& t : level_le2_trees(max_card)) {
    ++s.counters["trees"];
    const auto w = witness_tuple(t);
    if (!w) {
      // No tuple of the additive fragment respects such a tree.
      ++s.counters["vacuous"];
      s.check(!fragment_realizable(t), "no witness for realizable tree " + t.str());
      continue;
    }
    guarded(s, t.str(), [&] {
      std::size_t hits = 0;
      for (const LevelLe2Tree& c : trees_with_domain(shape_of(t))) hits += bool(respects_le2(c, *w));
      s.check(hits == 1 && recover_tree(shape_of(t), *w) == t, "recovery of " + t.str());
    });
  }
  return s;
}

SuiteResult suite_descriptions(std::size_t max_card) {
  SuiteResult s = make_suite("description-evaluation");
  for (const LevelLe2Tree& t : level_le2_trees(max_card)) {
    const auto w = witness_tuple(t);
    if (!w) continue;
    ++s.counters["trees"];
    guarded(s, t.str(), [&] {
      std::map<Level1Tree, std::vector<std::pair<Le2Description, UOrd>>> by_tree;
      for (const Le2Description& d : q_descriptions(t, true)) {
        if (d.level != 2) continue;
        const UOrd v = evaluate_description(t, *w, d);
        const auto kind = d.kind(t);
        if (kind == Le2Description::Kind::Continuous) {
          ++s.counters["continuous"];
          const UOrd want = shift_sup_by_decomposition(inclusion_shift(t.t2.tree(d.q.seq), d.tree), w->at(DomKey{2, d.q.seq}));
          s.check(v == want, "continuous value " + d.str() + " in " + t.str());
        } else if (kind == Le2Description::Kind::Discontinuous) {
          s.check(v == w->at(DomKey{2, d.q.seq}), "discontinuous value " + d.str() + " in " + t.str());
        }
        by_tree[d.tree].emplace_back(d, v);
      }
      for (auto& [tree, ds] : by_tree) {
        std::sort(ds.begin(), ds.end(), [](const auto& a, const auto& b) { return description_compare(a.first, b.first) < 0; });
        for (std::size_t i = 1; i < ds.size(); ++i)
          s.check(ds[i - 1].second < ds[i].second,
                  "monotonicity " + ds[i - 1].first.str() + " then " + ds[i].first.str() + " in " + t.str());
      }
    });
  }
  return s;
}

SuiteResult suite_respect_hierarchy(std::uint64_t seed, std::size_t max_card) {
  SuiteResult s = make_suite("respect-hierarchy");
  std::mt19937_64 rng(seed + 4);
  const auto tt = typical_trees();
  auto tuple = [](const UOrd& b) { return OrdTuple2{{DomKey{2, {}}, UOrd::u(1)}, {DomKey{2, {Node{0}}}, b}}; };
  const UOrd u1w = UOrd::u(1, CtblOrd::omega()), u12 = UOrd::u(1, CtblOrd::natural(2));
  s.check(bool(respects_le2(tt.q21, tuple(u12))) && !respects_le2(tt.q20, tuple(u12)), "(u1, u1*2) picks Q21");
  s.check(bool(respects_le2(tt.q20, tuple(u1w))) && !respects_le2(tt.q21, tuple(u1w)), "(u1, u1*w) picks Q20");
  s.check(bool(weakly_respects_le2(tt.q21, tuple(u12))) && !weakly_respects_le2(tt.q21, tuple(UOrd::u(2))),
          "weak respect examples on Q21");
  for (const LevelLe2Tree& t : level_le2_trees(max_card)) {
    // Trees without a witness get a tuple of random values instead.
    std::optional<OrdTuple2> w = witness_tuple(t);
    if (!w) {
      ++s.counters["random-base-trees"];
      w.emplace();
      for (const DomKey& k : domain(t))
        (*w)[k] = k.level == 1 ? UOrd(omega_times(t.t1.rank(k.path.front()) + 1))
                               : random_uord(rng, static_cast<unsigned>(t.t2.tree(k.path).size()) + 1, true);
    }
    std::vector<OrdTuple2> corpus{*w};
    for (const auto& [k, v] : *w) {
      if (k.level != 2 || k.path.empty()) continue;
      for (int j = 0; j < 4; ++j) {
        OrdTuple2 x = *w;
        x[k] = random_uord(rng, static_cast<unsigned>(t.t2.tree(k.path).size()) + 1, true);
        corpus.push_back(x);
      }
      OrdTuple2 x = *w;
      x[k] = v + UOrd::u(1);
      corpus.push_back(x);
    }
    for (const OrdTuple2& x : corpus) {
      guarded(s, t.str(), [&] {
        const bool r = bool(respects_le2(t, x)), wk = bool(weakly_respects_le2(t, x));
        s.check(!r || wk, "respects but not weakly: " + t.str() + " with " + text::tuple2_str(x));
        ++s.counters[r ? "respecting" : (wk ? "weak-only" : "neither")];
      });
    }
  }
  return s;
}

SuiteResult suite_rep2(std::size_t max_card) {
  SuiteResult s = make_suite("rep2-order");
  const CtblOrd big = CtblOrd::omega_pow(CtblOrd::omega_pow(CtblOrd::omega()));
  for (const LevelLe2Tree& t : level_le2_trees(max_card)) {
    std::vector<Rep2Element> xs;
    for (const Node& p : t.t1.nodes()) {
      xs.push_back(Rep2Element{1, Rep1Element{p, std::nullopt}, {}, {}});
      xs.push_back(Rep2Element{1, Rep1Element{p, 2}, {}, {}});
    }
    for (const DomStar& q : t.t2.dom_star()) {
      for (std::uint64_t scale : {1, 2}) {
        Rep2Element x{2, {}, {}, q};
        const Level1Tree tree = t.t2.tree(q.seq);
        for (std::size_t i = 0; i < q.seq.size(); ++i)
          x.alphas.push_back(omega_times(scale * (tree.rank(t.t2.node(seq_prefix(q.seq, i)).node()) + 1)));
        if (q.minus_one) {
          const PartialLevel1Tree& last = t.t2.at(q.seq);
          if (last.degree() == 0) {
            x.alphas.push_back(CtblOrd::natural(scale + 2));
          } else {
            const Level1Tree full = completion_le1(last);
            x.alphas.clear();
            for (std::size_t i = 0; i < q.seq.size(); ++i)
              x.alphas.push_back(omega_times(scale * (full.rank(t.t2.node(seq_prefix(q.seq, i)).node()) + 1)));
            x.alphas.push_back(omega_times(scale * (full.rank(last.node.node()) + 1)));
          }
        }
        xs.push_back(x);
      }
    }
    const Rep2Element top{2, {}, {}, DomStar{}};
    for (const Rep2Element& x : xs) {
      s.check(valid_rep2(t, x), "generated element " + x.str() + " invalid in " + t.str());
      if (!valid_rep2(t, x)) return s;
    }
    for (const Rep2Element& x : xs) {
      for (const Rep2Element& y : xs) {
        const auto c = rep2_compare(t, x, y);
        s.check(opposite(c, rep2_compare(t, y, x)), "antisymmetry " + x.str() + " " + y.str());
        for (const Rep2Element& z : xs)
          if (c < 0 && rep2_compare(t, y, z) < 0) s.check(rep2_compare(t, x, z) < 0, "transitivity in " + t.str());
      }
      if (x.level == 2 && x.q == DomStar{}) continue;
      s.check(rep2_compare(t, x, top) < 0, "top element above " + x.str());
      const Rep2Element cof{2, {}, {big}, DomStar{{}, true}};
      s.check(valid_rep2(t, cof) && rep2_compare(t, x, cof) < 0, "cofinal (beta, -1) above " + x.str());
    }
  }
  return s;
}

SuiteResult suite_tree_property(std::size_t bound) {
  SuiteResult s = make_suite("tree-property");
  const CtblOrd w = CtblOrd::omega();
  // Worked examples.
  const Level1Tree one = validate_level1({Node{0}}), two = validate_level1({Node{0}, Node{0, 0}});
  s.check(s1_member({one}, {w}), "S1 example ({(0)}), (w)");
  s.check(!s1_member({one, two}, {w, omega_times(2)}), "S1 example (w, w*2)");
  s.check(s1_member({}, {}), "S1 root");
  const Level2Tree c1 = typical_trees().q0.t2, q21 = typical_trees().q21.t2;
  const UOrd u1 = UOrd::u(1), u12 = UOrd::u(1, CtblOrd::natural(2)), u2 = UOrd::u(2);
  s.check(s2_member({c1}, {u1}, false) && s2_member({c1}, {u1}, true), "S2 example card 1");
  s.check(s2_member({c1, q21}, {u1, u12}, false) && s2_member({c1, q21}, {u1, u12}, true), "S2 example (u1, u1*2)");
  s.check(!s2_member({c1, q21}, {u1, u2}, false) && !s2_member({c1, q21}, {u1, u2}, true), "S2 example (u1, u2)");

  // S1 over chains of regular trees.
  std::vector<std::vector<Level1Tree>> chains{{one}};
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (chains[i].back().size() >= bound) continue;
    for (const Node& a : regular_addable_nodes(chains[i].back())) {
      auto c = chains[i];
      c.push_back(with_node(c.back(), a));
      chains.push_back(c);
    }
  }
  for (const auto& chain : chains) {
    const Level1Tree& last = chain.back();
    std::vector<CtblOrd> good, bad;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      Node fresh;
      for (const Node& a : chain[i].nodes())
        if (i == 0 || !chain[i - 1].contains(a)) fresh = a;
      good.push_back(omega_times(last.rank(fresh) + 1));
      bad.push_back(omega_times(i + 1));
    }
    for (const auto& alphas : {good, bad}) {
      const bool in = s1_member(chain, alphas);
      if (&alphas == &good) s.check(in, "S1 generated node " + text::tower1_str(chain));
      if (!in) continue;
      ++s.counters["s1-accepted"];
      for (std::size_t j = 0; j <= chain.size(); ++j)
        s.check(s1_member(std::vector<Level1Tree>(chain.begin(), chain.begin() + static_cast<long>(j)),
                          std::vector<CtblOrd>(alphas.begin(), alphas.begin() + static_cast<long>(j))),
                "S1 initial segment of " + text::tower1_str(chain));
    }
  }

  // S2 over towers read off level-2 trees with a witness.
  for (const Level2Tree& q : level2_trees(bound)) {
    const LevelLe2Tree t{Level1Tree(), q};
    const auto wt = witness_tuple(t);
    if (!wt) continue;
    std::vector<Level2Tree> towers;
    std::vector<UOrd> alphas;
    Level2Tree::Entries e;
    for (const auto& [k, v] : q.entries()) {
      e[k] = v;
      towers.push_back(validate_level2(e));
      alphas.push_back(wt->at(DomKey{2, k}));
    }
    for (bool weak : {false, true}) {
      s.check(s2_member(towers, alphas, weak), "S2 generated node " + q.str());
      ++s.counters["s2-accepted"];
      for (std::size_t j = 0; j <= towers.size(); ++j)
        s.check(s2_member(std::vector<Level2Tree>(towers.begin(), towers.begin() + static_cast<long>(j)),
                          std::vector<UOrd>(alphas.begin(), alphas.begin() + static_cast<long>(j)), weak),
                "S2 initial segment of " + q.str());
    }
  }
  return s;
}

SuiteResult suite_ucf_coverage(std::size_t max_card) {
  SuiteResult s = make_suite("ucf-coverage");
  for (const LevelLe2Tree& base : level_le2_trees(max_card)) {
    for (const PartialLevelLe2Tree& pt : partial_le2_extensions(base)) {
      const std::string tag = pt.str();
      guarded(s, tag, [&] {
        const UcfResult r = ucf(pt);
        ++s.counters["ucf-case-" + std::to_string(static_cast<int>(r.which))];
        const int cf = cf3(pt);
        ++s.counters["cf-" + std::to_string(cf)];
        s.check((cf == 0) == (pt.degree() == 0), "cf3 vs degree for " + tag);
        if (pt.degree() == 0) {
          s.check(!r.description && r.which == UcfCase::DegreeZero, "degree 0 ucf for " + tag);
          return;
        }
        check_description(base, *r.description);
        s.check(is_regular_description(base, *r.description), "ucf " + r.str() + " not regular for " + tag);
        for (const LevelLe2Tree& c : completion_le2(pt)) {
          bool ok = c.card() == base.card() + 1;
          if (pt.degree() == 2) ok = ok && c.t2.tree(pt.key.path) == pt.p;
          s.check(ok, "completion " + c.str() + " of " + tag);
        }
      });
    }
  }
  for (int c = 1; c <= 5; ++c)
    s.check(s.counters["ucf-case-" + std::to_string(c)] > 0, "ucf case " + std::to_string(c) + " never exercised");
  for (int c = 0; c <= 2; ++c)
    s.check(s.counters["cf-" + std::to_string(c)] > 0, "cf3 value " + std::to_string(c) + " never exercised");
  const LevelLe2Tree q21 = typical_trees().q21;
  const PartialLevelLe2Tree ex = validate_partial_le2(q21, DomKey{2, {Node{0}, Node{0}}}, validate_level1({Node{0}, Node{0, 0}}));
  const UcfResult r = ucf(ex);
  s.check(r.which == UcfCase::Parent && r.str() == "(2, (((0)), {(0) (0 0)}, ((0) (0 0))))", "worked case-5 example: " + r.str());
  return s;
}

SuiteResult suite_level3(std::size_t max_card) {
  SuiteResult s = make_suite("level3");
  for (const Level3Tree& r : level3_trees(max_card)) {
    ++s.counters["trees"];
    const std::string tag = r.str();
    guarded(s, tag, [&] {
      s.check(validate_level3(r.entries()) == r, "revalidation of " + tag);
      s.check(text::parse_level3(r.str()) == r, "text round trip of " + tag);
      // Tower through the domain in key order.
      std::vector<Level3Tree> towers;
      Level3Tree::Entries e;
      for (const auto& [k, v] : r.entries()) {
        e[k] = v;
        towers.push_back(validate_level3(e));
      }
      bool all_regular = true;
      for (const Level3Tree& x : towers) all_regular = all_regular && is_regular_level3(x);
      const StructuralVerdict sv = s3_structural_member(towers, false);
      s.check(sv.valid == all_regular, "structural verdict for " + tag);
      ++s.counters[is_regular_level3(r) ? "regular" : "non-regular"];

      std::vector<Rep3Element> xs;
      for (const auto& [k, v] : r.entries()) {
        if (const auto w = witness_tuple(r.tree(k))) {
          Rep3Element x{DomStar{k, false}, {}};
          for (std::size_t i = 1; i < k.size(); ++i) x.betas.push_back(w->at(r.node(seq_prefix(k, i))));
          xs.push_back(x);
        }
        if (v.degree() == 0) {
          Rep3Element x{DomStar{k, true}, {}};
          const auto w = witness_tuple(v.base);
          if (!w) continue;
          for (std::size_t i = 1; i < k.size(); ++i) x.betas.push_back(w->at(r.node(seq_prefix(k, i))));
          x.betas.push_back(UOrd(CtblOrd::natural(3)));
          xs.push_back(x);
          continue;
        }
        for (const LevelLe2Tree& c : completion_le2(v)) {
          const auto w = witness_tuple(c);
          if (!w) continue;
          Rep3Element x{DomStar{k, true}, {}};
          for (std::size_t i = 1; i <= k.size(); ++i) x.betas.push_back(w->at(r.node(seq_prefix(k, i))));
          xs.push_back(x);
        }
      }
      for (const Rep3Element& x : xs) s.check(valid_rep3(r, x), "generated element " + x.str() + " in " + tag);
      for (const Rep3Element& x : xs)
        for (const Rep3Element& y : xs) {
          if (!valid_rep3(r, x) || !valid_rep3(r, y)) continue;
          const auto c = rep3_compare(r, x, y);
          s.check(opposite(c, rep3_compare(r, y, x)), "antisymmetry " + x.str() + " " + y.str());
          for (const Rep3Element& z : xs)
            if (valid_rep3(r, z) && c < 0 && rep3_compare(r, y, z) < 0)
              s.check(rep3_compare(r, x, z) < 0, "transitivity in " + tag);
        }
      s.counters["rep3-elements"] += xs.size();
    });
  }
  return s;
}

SuiteResult suite_roundtrip(std::uint64_t seed, std::size_t samples) {
  SuiteResult s = make_suite("text-round-trip");
  std::mt19937_64 rng(seed + 5);
  const auto le2 = level_le2_trees(4);
  for (std::size_t i = 0; i < samples; ++i) {
    guarded(s, "round trip", [&] {
      const Level1Tree p = random_level1(rng, 6);
      s.check(text::parse_level1(p.str()) == p && text::parse_level1(p.str()).str() == p.str(), "level-1 " + p.str());
      const UOrd b = random_uord(rng, 6, false);
      s.check(parse_uord(b.str()) == b && parse_uord(b.str()).str() == b.str(), "ordinal " + b.str());
      const LevelLe2Tree& q = le2[i % le2.size()];
      s.check(text::parse_le2(q.str()) == q, "level <=2 " + q.str());
    });
  }
  return s;
}

std::vector<SuiteResult> run_all(std::size_t bound, std::uint64_t seed) {
  const std::size_t small = std::min<std::size_t>(bound, 3);
  return {
      suite_bk_order(seed, 200 * bound),
      suite_ordinal_arithmetic(seed, 200 * bound),
      suite_order_type(bound + 2),
      suite_factoring(bound),
      suite_shift(seed, 2500 * bound, 6),
      suite_analysis(seed, 250 * bound),
      suite_ucf_lemmas(bound, 100),
      suite_uniqueness(bound),
      suite_descriptions(bound),
      suite_respect_hierarchy(seed, bound),
      suite_rep2(small),
      suite_tree_property(bound),
      suite_ucf_coverage(small),
      suite_level3(small),
      suite_roundtrip(seed, 250 * bound),
  };
}

}  // namespace uctk::checks
