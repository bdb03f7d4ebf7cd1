#include "uctk/cli.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>

#include "uctk/analysis.hpp"
#include "uctk/bk_order.hpp"
#include "uctk/checks.hpp"
#include "uctk/enumerate.hpp"
#include "uctk/error.hpp"
#include "uctk/text.hpp"

namespace uctk::cli {

using json = nlohmann::ordered_json;

namespace {

using Args = std::vector<std::string>;

[[noreturn]] void arity(const std::string& cmd, const std::string& usage) {
  throw Error("ArityError", cmd + " expects " + usage);
}

void need(const Args& a, std::size_t lo, std::size_t hi, const std::string& usage) {
  const std::size_t n = a.size() - 1;
  if (n < lo || n > hi) arity(a[0], usage);
}

std::string ltrim(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

bool starts(const std::string& s, const std::string& p) { return ltrim(s).rfind(p, 0) == 0; }

const std::string kEmpty = "\xE2\x88\x85";

enum class Kind { Level1, Level2, Le2, Level3, Tower1, Tower2, Tower3, Partial1, Node, Ordinal };

Kind detect(const std::string& raw) {
  const std::string s = ltrim(raw);
  if (starts(s, "<<")) return Kind::Level3;
  if (starts(s, "<")) {
    const std::string in = ltrim(s.substr(1));
    if (starts(in, "{")) return Kind::Le2;
    if (starts(in, kEmpty) && starts(in.substr(kEmpty.size()), "|")) return Kind::Le2;
    return Kind::Level2;
  }
  if (starts(s, "[")) {
    const std::string in = ltrim(s.substr(1));
    if (starts(in, "<<")) return Kind::Tower3;
    if (starts(in, "<")) return Kind::Tower2;
    return Kind::Tower1;
  }
  if (starts(s, "{") || s == kEmpty) return Kind::Level1;
  if (starts(s, "({") || starts(s, "(" + kEmpty)) return Kind::Partial1;
  if (starts(s, "(") || s == "-1") return Kind::Node;
  return Kind::Ordinal;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Level1: return "level1";
    case Kind::Level2: return "level2";
    case Kind::Le2: return "level<=2";
    case Kind::Level3: return "level3";
    case Kind::Tower1: return "tower1";
    case Kind::Tower2: return "tower2";
    case Kind::Tower3: return "tower3";
    case Kind::Partial1: return "partial1";
    case Kind::Node: return "node";
    case Kind::Ordinal: return "ordinal";
  }
  return "";
}

std::string order_word(std::strong_ordering c) { return c < 0 ? "less" : (c > 0 ? "greater" : "equal"); }

template <typename T>
json strs(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json bools(const std::vector<bool>& v) {
  json a = json::array();
  for (bool b : v) a.push_back(b);
  return a;
}

// A false verdict is a domain rejection.
int verdict(json& r, const char* key, bool v) {
  r[key] = v;
  return v ? Ok : Rejected;
}

using Handler = std::function<int(const Args&, const Options&, json&)>;

int cmd_validate(const Args& a, const Options&, json& r) {
  need(a, 1, 2, "<object> or <level<=2 tree> <(d, q, P)>");
  if (a.size() == 3) {
    const PartialLevelLe2Tree pt = text::parse_partial_le2(text::parse_le2(a[1]), a[2]);
    r["kind"] = "partial-level<=2";
    r["valid"] = true;
    r["degree"] = pt.degree();
    r["canonical"] = pt.str();
    return Ok;
  }
  const Kind k = detect(a[1]);
  r["kind"] = kind_name(k);
  std::string canonical;
  switch (k) {
    case Kind::Level1: canonical = text::parse_level1(a[1]).str(); break;
    case Kind::Level2: canonical = "<" + text::parse_level2(a[1]).str() + ">"; break;
    case Kind::Le2: canonical = text::parse_le2(a[1]).str(); break;
    case Kind::Level3: canonical = text::parse_level3(a[1]).str(); break;
    case Kind::Partial1: {
      const PartialLevel1Tree pt = text::parse_partial_le1(a[1]);
      r["degree"] = pt.degree();
      canonical = pt.str();
      break;
    }
    case Kind::Node: canonical = text::parse_ext_node(a[1]).str(); break;
    case Kind::Ordinal: canonical = parse_uord(a[1]).str(); break;
    case Kind::Tower1: {
      const Level1Tower t = validate_tower(text::parse_tower1(a[1]));
      r["valid"] = true;
      r["regular"] = bools(t.regular);
      r["canonical"] = text::tower1_str(t.trees);
      return Ok;
    }
    case Kind::Tower2: {
      const auto t = text::parse_tower2(a[1]);
      validate_level2_tower(t);
      r["valid"] = true;
      r["length"] = t.size();
      return Ok;
    }
    case Kind::Tower3: {
      const Level3Tower t = validate_level3_tower(text::parse_tower3(a[1]));
      r["valid"] = true;
      r["regular"] = bools(t.regular);
      r["new_nodes"] = json::array();
      for (const NodeSeq& q : t.new_nodes) r["new_nodes"].push_back(seq_str(q));
      return Ok;
    }
  }
  r["valid"] = true;
  r["canonical"] = canonical;
  return Ok;
}

int cmd_regular(const Args& a, const Options&, json& r) {
  need(a, 1, 1, "<level-1 or level-3 tree>");
  const Kind k = detect(a[1]);
  r["kind"] = kind_name(k);
  if (k == Kind::Level3) return verdict(r, "regular", is_regular_level3(text::parse_level3(a[1])));
  if (k == Kind::Partial1) return verdict(r, "regular", is_regular(text::parse_partial_le1(a[1]).base));
  return verdict(r, "regular", is_regular(text::parse_level1(a[1])));
}

int cmd_compare(const Args& a, const Options&, json& r) {
  need(a, 2, 3, "<x> <y>, or <tree> <x> <y> for representation elements");
  if (a.size() == 3) {
    const Kind k = detect(a[1]);
    if (k == Kind::Node) {
      r["order"] = "bk";
      r["result"] = order_word(bk_compare(text::parse_ext_node(a[1]), text::parse_ext_node(a[2])));
    } else {
      r["order"] = "ordinal";
      r["result"] = order_word(parse_uord(a[1]) <=> parse_uord(a[2]));
    }
    return Ok;
  }
  const Kind k = detect(a[1]);
  if (k == Kind::Level1) {
    const Level1Tree p = text::parse_level1(a[1]);
    const Rep1Element x = text::parse_rep1(a[2]), y = text::parse_rep1(a[3]);
    for (const Rep1Element* e : {&x, &y})
      if (!in_rep(p, *e)) throw Error("NotInRep", e->str() + " is not in rep(" + p.str() + ")");
    r["order"] = "rep1";
    r["result"] = order_word(rep_compare(p, x, y));
  } else if (k == Kind::Le2) {
    const LevelLe2Tree t = text::parse_le2(a[1]);
    const Rep2Element x = text::parse_rep2(a[2]), y = text::parse_rep2(a[3]);
    for (const Rep2Element* e : {&x, &y})
      if (!valid_rep2(t, *e)) throw Error("NotInRep", e->str() + " is not in rep(" + t.str() + ")");
    r["order"] = "rep2";
    r["result"] = order_word(rep2_compare(t, x, y));
  } else if (k == Kind::Level3) {
    const Level3Tree t = text::parse_level3(a[1]);
    const Rep3Element x = text::parse_rep3(a[2]), y = text::parse_rep3(a[3]);
    for (const Rep3Element* e : {&x, &y})
      if (!valid_rep3(t, *e)) throw Error("NotInRep", e->str() + " is not in rep(" + t.str() + ")");
    r["order"] = "rep3";
    r["result"] = order_word(rep3_compare(t, x, y));
  } else {
    throw Error("UsageError", "the first of three arguments must be a level-1, level <=2 or level-3 tree");
  }
  return Ok;
}

int cmd_order_type(const Args& a, const Options&, json& r) {
  need(a, 1, 1, "<level-1 tree>");
  r["order_type"] = rep_order_type(text::parse_level1(a[1])).str(false);
  return Ok;
}

int cmd_descriptions(const Args& a, const Options&, json& r) {
  need(a, 1, 1, "<level-1 or level <=2 tree>");
  if (detect(a[1]) == Kind::Level1) {
    const Level1Tree p = text::parse_level1(a[1]);
    std::vector<Desc1> ds = descriptions(p);
    r["count"] = ds.size();
    r["descriptions"] = strs(ds);
    return Ok;
  }
  const LevelLe2Tree t = text::parse_le2(a[1]);
  const auto plain = q_descriptions(t, false);
  const auto all = q_descriptions(t, true);
  r["count"] = plain.size();
  r["descriptions"] = strs(plain);
  json kinds = json::array();
  for (const Le2Description& d : plain) {
    switch (d.kind(t)) {
      case Le2Description::Kind::Level1: kinds.push_back("level1"); break;
      case Le2Description::Kind::Discontinuous: kinds.push_back("discontinuous"); break;
      case Le2Description::Kind::Continuous: kinds.push_back("continuous"); break;
      case Le2Description::Kind::Extended: kinds.push_back("extended"); break;
    }
  }
  r["kinds"] = kinds;
  json ext = json::array();
  for (std::size_t i = plain.size(); i < all.size(); ++i) ext.push_back(all[i].str());
  r["extended"] = ext;
  return Ok;
}

int cmd_seed(const Args& a, const Options&, json& r) {
  need(a, 2, 2, "<level-1 tree> <node or ()>");
  const Level1Tree p = text::parse_level1(a[1]);
  const Node n = text::parse_node(a[2]);
  const Desc1 d = n.empty() ? Desc1{} : Desc1{n};
  r["seed"] = seed(p, d).str();
  return Ok;
}

int cmd_factorings(const Args& a, const Options&, json& r) {
  need(a, 2, 2, "<P> <W>");
  const Level1Tree p = text::parse_level1(a[1]), w = text::parse_level1(a[2]);
  const auto fs = factorings(p, w);
  r["count"] = fs.size();
  r["exists"] = factor_exists(p, w);
  r["strict_exists"] = strict_factor_exists(p, w);
  json maps = json::array(), shifts = json::array();
  for (const FactorMap1& f : fs) {
    maps.push_back(f.str(p));
    shifts.push_back(factor_to_shift(f, p, w).str());
  }
  r["maps"] = maps;
  r["shifts"] = shifts;
  return Ok;
}

int cmd_tower(const Args& a, const Options& o, json& r) {
  need(a, 1, 1, "<tower>");
  const Kind k = detect(a[1]);
  if (k != Kind::Tower1 && k != Kind::Tower2 && k != Kind::Tower3) throw Error("UsageError", "expected a tower [..]");
  return cmd_validate(a, o, r);
}

int cmd_s1(const Args& a, const Options&, json& r) {
  need(a, 2, 2, "<tower> <[alphas]>");
  const auto towers = text::parse_tower1(a[1]);
  const auto alphas = text::parse_ctbl_list(a[2]);
  return verdict(r, "member", s1_member(towers, alphas));
}

int cmd_analyze(const Args& a, const Options&, json& r) {
  need(a, 2, 2, "<ordinal> <W>");
  const UOrd b = parse_uord(a[1]);
  const Level1Tree w = text::parse_level1(a[2]);
  const OrdAnalysis x = analyze(b, w);
  r["signature"] = strs(x.signature);
  r["signature_seeds"] = strs(x.signature_seeds);
  r["essentially_continuous"] = x.essentially_continuous;
  r["uniform_cofinality"] = x.uniform_cofinality.str();
  r["ucf_node"] = x.ucf_node ? x.ucf_node->str() : "none";
  r["induced_tower"] = text::tower1_str(x.induced_tower.trees);
  r["tower_nodes"] = strs(x.tower_nodes);
  r["factoring_map"] = x.factoring_map.str(x.induced_tower.trees.back());
  r["approximations"] = strs(x.approximation_sequence);
  r["potential_tower"] = x.potential_tower.str();
  return Ok;
}

int cmd_cfl(const Args& a, const Options&, json& r) {
  need(a, 1, 1, "<ordinal>");
  r["cf"] = cf_L(parse_uord(a[1])).str();
  return Ok;
}

int cmd_shift(const Args& a, const Options&, json& r) {
  need(a, 2, 2, "<[images]:n'> <ordinal>");
  r["value"] = apply_shift(parse_index_map(a[1]), parse_uord(a[2])).str();
  return Ok;
}

int cmd_shift_sup(const Args& a, const Options&, json& r) {
  need(a, 2, 2, "<[images]:n'> <ordinal>");
  const IndexMap s = parse_index_map(a[1]);
  const UOrd b = parse_uord(a[2]);
  r["value"] = apply_shift_sup(s, b).str();
  r["continuous"] = shift_is_continuous_at(s, b);
  return Ok;
}

int respect_common(const Args& a, json& r, bool weak) {
  if (detect(a[1]) == Kind::Level1) {
    if (weak || a.size() != 3) arity(a[0], "<level <=2 tree> <tuple>");
    return verdict(r, "respects", respects_level1(text::parse_level1(a[1]), text::parse_assignment1(a[2])));
  }
  const LevelLe2Tree t = text::parse_le2(a[1]);
  if (a.size() == 4) {
    if (weak) arity(a[0], "<level <=2 tree> <tuple>");
    const PartialLevelLe2Tree pt = text::parse_partial_le2(t, a[2]);
    return verdict(r, "respects", respects_partial_le2(pt, text::parse_tuple2(a[3])));
  }
  const RespectVerdict v = weak ? weakly_respects_le2(t, text::parse_tuple2(a[2])) : respects_le2(t, text::parse_tuple2(a[2]));
  const int s = verdict(r, weak ? "weakly_respects" : "respects", v.ok);
  if (!v.ok) r["clause"] = v.clause;
  return s;
}

int cmd_respects(const Args& a, const Options&, json& r) {
  need(a, 2, 3, "<P> <assignment>, <Q> <tuple> or <Q> <(d, q, P)> <tuple>");
  return respect_common(a, r, false);
}

int cmd_weak_respects(const Args& a, const Options&, json& r) {
  need(a, 2, 2, "<level <=2 tree> <tuple>");
  return respect_common(a, r, true);
}

int cmd_eval_desc(const Args& a, const Options&, json& r) {
  need(a, 3, 3, "<Q> <tuple> <description>");
  const LevelLe2Tree t = text::parse_le2(a[1]);
  r["value"] = evaluate_description(t, text::parse_tuple2(a[2]), text::parse_description(a[3])).str();
  return Ok;
}

int cmd_recover(const Args& a, const Options&, json& r) {
  need(a, 2, 2, "<shape> <tuple>");
  const DomainShape shape = text::parse_shape(a[1]);
  r["candidates"] = trees_with_domain(shape).size();
  r["tree"] = recover_tree(shape, text::parse_tuple2(a[2])).str();
  return Ok;
}

int cmd_s2(const Args& a, const Options&, json& r) {
  need(a, 2, 2, "<level-2 tower> <[alphas]>");
  const auto towers = text::parse_tower2(a[1]);
  const auto alphas = text::parse_uord_list(a[2]);
  const bool weak = s2_member(towers, alphas, true);
  const int s = verdict(r, "member", s2_member(towers, alphas, false));
  r["weak_member"] = weak;
  return s;
}

PartialLevelLe2Tree partial2(const Args& a) { return text::parse_partial_le2(text::parse_le2(a[1]), a[2]); }

int cmd_ucf(const Args& a, const Options&, json& r) {
  need(a, 2, 2, "<Q> <(d, q, P)>");
  const PartialLevelLe2Tree pt = partial2(a);
  const UcfResult u = ucf(pt);
  r["case"] = static_cast<int>(u.which);
  r["ucf"] = u.str();
  if (u.description) r["regular"] = is_regular_description(pt.base, *u.description);
  return Ok;
}

int cmd_cf3(const Args& a, const Options&, json& r) {
  need(a, 2, 2, "<Q> <(d, q, P)>");
  r["cf3"] = cf3(partial2(a));
  return Ok;
}

int cmd_complete(const Args& a, const Options&, json& r) {
  need(a, 1, 2, "<(P, t)> or <Q> <(d, q, P)>");
  if (a.size() == 2) {
    r["completion"] = completion_le1(text::parse_partial_le1(a[1])).str();
    return Ok;
  }
  const auto cs = completion_le2(partial2(a));
  r["count"] = cs.size();
  r["completions"] = strs(cs);
  return Ok;
}

int cmd_s3_structural(const Args& a, const Options&, json& r) {
  need(a, 1, 1, "<level-3 tower>");
  const StructuralVerdict v = s3_structural_member(text::parse_tower3(a[1]), false);
  const int s = verdict(r, "valid", v.valid);
  if (!v.valid) r["reason"] = v.reason;
  r["new_nodes"] = json::array();
  for (const NodeSeq& q : v.new_nodes) r["new_nodes"].push_back(seq_str(q));
  return s;
}

std::size_t parse_size(const std::string& s) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error("SyntaxError", "col 1: expected a natural number, found '" + s + "'");
  return std::stoul(s);
}

int cmd_enumerate(const Args& a, const Options& o, json& r) {
  need(a, 1, 2, "<level1|regular1|partial1|level2|le2|level3> [size]");
  const std::size_t n = a.size() == 3 ? parse_size(a[2]) : o.bound;
  const std::string& what = a[1];
  json items = json::array();
  if (what == "level1") {
    items = strs(level1_trees(n));
  } else if (what == "regular1") {
    items = strs(regular_level1_trees(n));
  } else if (what == "partial1") {
    items = strs(partial_le1_trees(n));
  } else if (what == "level2") {
    for (const Level2Tree& t : level2_trees(n)) items.push_back("<" + t.str() + ">");
  } else if (what == "le2") {
    items = strs(level_le2_trees(n));
  } else if (what == "level3") {
    if (n > 3) throw Error("UsageError", "level3 enumeration is limited to size 3");
    items = strs(level3_trees(n));
  } else {
    throw Error("UsageError", "unknown family '" + what + "'");
  }
  r["family"] = what;
  r["size"] = n;
  r["count"] = items.size();
  r["items"] = items;
  return Ok;
}

int cmd_check_lemmas(const Args& a, const Options& o, json& r) {
  need(a, 0, 0, "no arguments; use --bound and --seed");
  r["bound"] = o.bound;
  r["seed"] = o.seed;
  bool all = true;
  json suites = json::object();
  for (const checks::SuiteResult& s : checks::run_all(o.bound, o.seed)) {
    json e;
    e["cases"] = s.cases;
    e["failed"] = s.failed;
    for (const auto& [k, v] : s.counters) e[k] = v;
    if (!s.counterexamples.empty()) e["counterexamples"] = s.counterexamples;
    suites[s.name] = e;
    all = all && s.ok();
  }
  const int st = verdict(r, "all_pass", all);
  r["suites"] = suites;
  return st;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"validate", cmd_validate},
      {"regular", cmd_regular},
      {"compare", cmd_compare},
      {"order-type", cmd_order_type},
      {"descriptions", cmd_descriptions},
      {"seed", cmd_seed},
      {"factorings", cmd_factorings},
      {"tower", cmd_tower},
      {"s1", cmd_s1},
      {"analyze", cmd_analyze},
      {"cfl", cmd_cfl},
      {"shift", cmd_shift},
      {"shift-sup", cmd_shift_sup},
      {"respects", cmd_respects},
      {"weak-respects", cmd_weak_respects},
      {"eval-desc", cmd_eval_desc},
      {"recover", cmd_recover},
      {"s2", cmd_s2},
      {"ucf", cmd_ucf},
      {"cf3", cmd_cf3},
      {"complete", cmd_complete},
      {"s3-structural", cmd_s3_structural},
      {"enumerate", cmd_enumerate},
      {"check-lemmas", cmd_check_lemmas},
  };
  return h;
}

bool is_usage_code(const std::string& code) {
  return code == "SyntaxError" || code == "ArityError" || code == "UsageError" || code == "UnknownCommand";
}

bool bare(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '=' || c == '\\') return false;
  return true;
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + scalar(v[i]);
    return s + "]";
  }
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out.emplace_back(prefix, scalar(v));
}

}  // namespace

Report run(const Args& args, const Options& opts) {
  Report rep;
  json& r = rep.body;
  r["command"] = args.empty() ? "" : args[0];
  std::string input;
  for (std::size_t i = 1; i < args.size(); ++i) input += (i > 1 ? " " : "") + args[i];
  r["input"] = input;
  r["status"] = "ok";
  try {
    if (args.empty()) throw Error("UsageError", "no command given");
    auto it = handlers().find(args[0]);
    if (it == handlers().end()) throw Error("UnknownCommand", "unknown command '" + args[0] + "'");
    json result = json::object();
    rep.status = it->second(args, opts, result);
    for (auto& [k, v] : result.items()) r[k] = v;
  } catch (const Error& e) {
    r["status"] = "error";
    r["code"] = e.code();
    r["detail"] = e.what();
    rep.status = is_usage_code(e.code()) ? UsageError : Rejected;
  }
  return rep;
}

std::string render(const Report& rep, const Options& opts) {
  if (opts.format == Format::Structured) return rep.body.dump(opts.pretty ? 2 : -1);
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(rep.body, "", kv);
  std::string s;
  if (opts.pretty) {
    std::size_t w = 0;
    for (const auto& [k, v] : kv) w = std::max(w, k.size());
    for (const auto& [k, v] : kv) s += k + std::string(w - k.size(), ' ') + " | " + v + "\n";
    return s;
  }
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += k + "=" + (bare(v) ? v : json(v).dump());
  }
  return s;
}

int run_batch(std::istream& in, const Options& opts, std::ostream& out) {
  int worst = Ok;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = ltrim(line);
    if (t.empty() || t[0] == '#') continue;
    Report rep;
    try {
      rep = run(text::tokenize(t), opts);
    } catch (const Error& e) {
      rep.body["command"] = "";
      rep.body["input"] = t;
      rep.body["status"] = "error";
      rep.body["code"] = e.code();
      rep.body["detail"] = e.what();
      rep.status = UsageError;
    }
    json withline;
    withline["line"] = lineno;
    for (auto& [k, v] : rep.body.items()) withline[k] = v;
    rep.body = withline;
    out << render(rep, opts) << '\n';
    worst = std::max(worst, rep.status);
  }
  return worst;
}

}  // namespace uctk::cli
