// Cross-module property harness.
//
// Runs the theorem-level properties that tie the modules together (expansion,
// derivative-route agreement, closedness, transition agreement, language
// equality, confluence, factor correspondence, construction isomorphism,
// tableau vs bounded oracle) over seeded random formulas, and reports
// per-property pass counts. Failures are data, not errors.

#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ltlf/automaton.hpp"
#include "ltlf/derivatives.hpp"
#include "ltlf/eval.hpp"
#include "ltlf/factors.hpp"
#include "ltlf/generate.hpp"
#include "ltlf/printer.hpp"
#include "ltlf/tableau.hpp"

namespace ltlf {

// ---------------------------------------------------------------------------
// Construction isomorphism
// ---------------------------------------------------------------------------
//
// Both constructions are serialized as guard-labelled graphs over
// conjunction-named nodes: the tableau maps pre-states to nodes and state
// children to edges; the automaton side closes the set-normal form of the
// formula under factor steps. The initial node is named "@init" on both
// sides, the top node "tt" keeps no outgoing edges (the tableau stops at tt,
// the automaton self-loops there), and the serializations must then be
// byte-identical.

namespace detail {

struct SerialEdge {
  Monomial guard;
  FormalConjunction target;
  std::string target_key;
};

inline std::string serialize_structure(std::map<std::string, std::vector<SerialEdge>> entries) {
  std::string out;
  for (auto& [key, edges] : entries) {
    std::sort(edges.begin(), edges.end(), [](const SerialEdge& a, const SerialEdge& b) {
      int c = compare(a.guard, b.guard);
      return c != 0 ? c < 0 : compare(a.target, b.target) < 0;
    });
    out += key;
    out += " ::";
    for (const auto& e : edges) {
      out += " [" + print(e.guard) + " -> " + e.target_key + "]";
    }
    out += '\n';
  }
  return out;
}

}  // namespace detail

/// Serializes the transition structure of the optimized tableau (built, not
/// eliminated).
inline std::string tableau_structure_serial(const TableauGraph& g) {
  std::map<std::string, std::vector<detail::SerialEdge>> entries;
  auto key_of = [&](std::size_t pi) -> std::string {
    if (pi == g.initial()) return "@init";
    if (g.prestates()[pi].is_tt) return "tt";
    return print(*g.prestates()[pi].conj);
  };
  for (std::size_t pi = 0; pi < g.prestates().size(); ++pi) {
    const auto& pre = g.prestates()[pi];
    auto& edges = entries[key_of(pi)];
    for (const auto& edge : pre.children) {
      const auto& st = g.states()[edge.state];
      FormalConjunction target = st.node.nexts;
      edges.push_back({st.node.literals, target, key_of(st.pd_child)});
    }
  }
  return detail::serialize_structure(std::move(entries));
}

/// Serializes the configuration graph of the factor-based construction: the
/// set-normal form of f seeds the closure, each conjunction's edges are its
/// factors, and the top configuration drops its self-loop.
inline std::string aa_structure_serial(const Formula& pnf) {
  ConjunctionSet seeds = simp(pnf);
  const bool single_seed = seeds.size() == 1;
  auto key_of = [&](const FormalConjunction& c) -> std::string {
    if (single_seed && c == seeds.front()) return "@init";
    if (c.is_top()) return "tt";
    return print(c);
  };

  std::map<std::string, std::vector<detail::SerialEdge>> entries;
  std::set<FormalConjunction> visited;
  std::deque<FormalConjunction> work;

  auto enqueue = [&](const FormalConjunction& c) {
    if (visited.insert(c).second) work.push_back(c);
  };

  if (single_seed) {
    enqueue(seeds.front());
  } else {
    auto& init_edges = entries["@init"];
    std::set<std::pair<Monomial, FormalConjunction>> seen_edges;
    for (const auto& seed : seeds)
      for (const auto& factor : factors_of(seed)) {
        if (!seen_edges.insert({factor.monomial, factor.next}).second) continue;
        init_edges.push_back({factor.monomial, factor.next, key_of(factor.next)});
        enqueue(factor.next);
      }
  }

  while (!work.empty()) {
    FormalConjunction c = work.front();
    work.pop_front();
    auto& edges = entries[key_of(c)];
    if (c.is_top()) continue;  // terminal on both sides
    for (const auto& factor : factors_of(c)) {
      edges.push_back({factor.monomial, factor.next, key_of(factor.next)});
      enqueue(factor.next);
    }
  }
  return detail::serialize_structure(std::move(entries));
}

// ---------------------------------------------------------------------------
// Property checks (single formula)
// ---------------------------------------------------------------------------

struct CaseContext {
  Formula formula;
  std::vector<LassoWord> lassos;
  std::vector<Symbol> symbols;  // the full alphabet over the corpus atoms
  std::vector<std::string> aps;
};

/// Checks return nullopt on success, otherwise the failing sub-case with
/// expected and actual values.
using CheckResult = std::optional<std::string>;

inline CheckResult check_expansion_theorem(const CaseContext& ctx) {
  Formula expanded = theta_lf(lf(ctx.formula));
  for (const auto& w : ctx.lassos) {
    bool expect = eval_lasso(ctx.formula, w);
    bool got = eval_lasso(expanded, w);
    if (got != expect)
      return "lasso " + to_string(w) + ": expected " + (expect ? "true" : "false") +
             ", linear form gave " + (got ? "true" : "false");
  }
  return std::nullopt;
}

inline CheckResult check_pderiv_equals_rho(const CaseContext& ctx) {
  for (const auto& x : ctx.symbols)
    if (pderiv_formula(ctx.formula, x) != rho(ctx.formula, x))
      return "symbol " + to_string(x) + ": factor route and direct route differ";
  return std::nullopt;
}

inline CheckResult check_closedness(const CaseContext& ctx) {
  auto base = iterated(ctx.formula);
  ConjunctionSet desc = descendants(ctx.formula);
  for (const auto& c : desc)
    if (!in_set_closure(c, base)) return "descendant " + print(c) + " outside the base set";
  for (const auto& c : simp(ctx.formula))
    if (!in_set_closure(c, base)) return "simp element " + print(c) + " outside the base set";
  if (desc.size() > descendant_bound(ctx.formula))
    return std::to_string(desc.size()) + " descendants exceed the bound " +
           std::to_string(descendant_bound(ctx.formula));
  return std::nullopt;
}

inline CheckResult check_delta_equals_rho(const CaseContext& ctx) {
  AlternatingAutomaton aa = build_aa(ctx.formula, ctx.aps);
  for (const auto& q : aa.states())
    for (const auto& x : ctx.symbols)
      if (aa.delta(q, x) != rho(q, x))
        return "state " + print(q) + ", symbol " + to_string(x) + ": delta differs from rho";
  return std::nullopt;
}

inline CheckResult check_language_equality(const CaseContext& ctx) {
  AlternatingAutomaton aa = build_aa(ctx.formula, ctx.aps);
  AlternatingAutomaton variant = build_aa(ctx.formula, ctx.aps, {.tt_empty_delta = true});
  for (const auto& w : ctx.lassos) {
    bool expect = eval_lasso(ctx.formula, w);
    if (aa.accepts_lasso(w).accepted != expect)
      return "lasso " + to_string(w) + ": oracle " + (expect ? "accepts" : "rejects") +
             ", automaton disagrees";
    if (variant.accepts_lasso(w).accepted != expect)
      return "lasso " + to_string(w) + ": tt-variant disagrees with the oracle";
  }
  return std::nullopt;
}

inline CheckResult check_confluence(const CaseContext& ctx) {
  auto left = rewrite_exhaust(ctx.formula, RewriteStrategy::LeftmostFirst);
  auto right = rewrite_exhaust(ctx.formula, RewriteStrategy::RightmostLast);
  bool same = left.size() == right.size();
  for (std::size_t i = 0; same && i < left.size(); ++i) same = left[i].node == right[i].node;
  if (!same)
    return "strategies produced " + std::to_string(left.size()) + " vs " +
           std::to_string(right.size()) + " state nodes";
  return std::nullopt;
}

inline CheckResult check_lf_correspondence(const CaseContext& ctx) {
  if (ctx.formula == make_ff()) return std::nullopt;  // excluded by the statement
  LinearFactorSet from_states;
  for (const auto& rs : rewrite_exhaust(ctx.formula)) from_states.push_back(node_to_factor(rs.node));
  sort_unique(from_states);
  LinearFactorSet factors = lf(ctx.formula);
  if (from_states != factors)
    return "rewriting produced " + std::to_string(from_states.size()) + " states vs " +
           std::to_string(factors.size()) + " factors";
  return std::nullopt;
}

inline CheckResult check_isomorphism(const CaseContext& ctx) {
  if (tableau_structure_serial(build_optimized(ctx.formula)) != aa_structure_serial(ctx.formula))
    return "tableau and automaton structures serialize differently";
  return std::nullopt;
}

inline CheckResult check_tableau_vs_oracle(const CaseContext& ctx) {
  Verdict v = is_satisfiable(ctx.formula);  // throws if a witness fails validation
  if (v.satisfiable && !eval_lasso(ctx.formula, *v.witness))
    return "witness " + to_string(*v.witness) + " fails the oracle";
  auto found = sat_search_bounded(ctx.formula, ctx.aps, 2, 3);
  if (found && !v.satisfiable)
    return "tableau says UNSAT but " + to_string(*found) + " is a model";
  bool original = !build_original(ctx.formula).initial_eliminated();
  if (v.satisfiable != original)
    return std::string("optimized says ") + (v.satisfiable ? "SAT" : "UNSAT") +
           ", original construction disagrees";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Harness
// ---------------------------------------------------------------------------

struct CrosscheckOptions {
  std::uint64_t seed = 1;
  int count = 100;
  int max_size = 10;
  std::vector<std::string> aps{"p", "q", "r"};
  int lassos_per_formula = 20;
  int max_prefix = 3;
  int max_loop = 4;
};

struct PropertyStat {
  std::string name;
  long long runs = 0;
  long long failures = 0;
};

struct CrosscheckReport {
  std::vector<PropertyStat> properties;
  long long cases = 0;
  double seconds = 0.0;
  std::vector<std::string> failure_details;  // capped

  bool ok() const {
    for (const auto& p : properties)
      if (p.failures > 0) return false;
    return true;
  }
};

inline CrosscheckReport run_crosscheck(const CrosscheckOptions& options) {
  using Check = CheckResult (*)(const CaseContext&);
  static const std::pair<const char*, Check> kChecks[] = {
      {"expansion-theorem", check_expansion_theorem},
      {"pderiv-equals-rho", check_pderiv_equals_rho},
      {"closedness", check_closedness},
      {"delta-equals-rho", check_delta_equals_rho},
      {"language-equality", check_language_equality},
      {"confluence", check_confluence},
      {"lf-correspondence", check_lf_correspondence},
      {"isomorphism", check_isomorphism},
      {"tableau-vs-oracle", check_tableau_vs_oracle},
  };

  CrosscheckReport report;
  for (const auto& [name, _] : kChecks) report.properties.push_back({name, 0, 0});

  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < options.count; ++i) {
    CaseContext ctx{random_pnf_formula(options.seed, static_cast<std::uint64_t>(i),
                                       options.max_size, options.aps),
                    {},
                    all_symbols(options.aps),
                    options.aps};
    for (int k = 0; k < options.lassos_per_formula; ++k)
      ctx.lassos.push_back(random_lasso(options.seed,
                                        static_cast<std::uint64_t>(i) * 1000 + k,
                                        options.max_prefix, options.max_loop, options.aps));
    for (std::size_t c = 0; c < std::size(kChecks); ++c) {
      ++report.properties[c].runs;
      CheckResult failure;
      try {
        failure = kChecks[c].second(ctx);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        ++report.properties[c].failures;
        if (report.failure_details.size() < 20)
          report.failure_details.push_back(std::string(kChecks[c].first) + " case " +
                                           std::to_string(i) + ": " + print(ctx.formula) +
                                           " — " + *failure);
      }
    }
    ++report.cases;
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ltlf
