// Alternating omega-automata built from iterated partial derivatives.
//
// States are the temporal subformulas reachable by derivation; transition
// alternatives out of a state are its linear factors, so delta(q, x) is the
// factor-based derivative of q by x. Each alternative is a formal
// conjunction of successor states (the empty conjunction discharges the
// branch). Acceptance is Buechi: release-rooted states (Always included, as
// G is ff-release) and tt are accepting.
//
// The automaton is 1-weak: every conjunct of delta(q, x) is q itself or a
// proper subformula, so each cycle is a self-loop and lasso acceptance can
// be decided by per-state fixpoints over the position ring, greatest for
// accepting states, least otherwise.

#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltlf/conjunction.hpp"
#include "ltlf/derivatives.hpp"
#include "ltlf/factors.hpp"
#include "ltlf/formula.hpp"
#include "ltlf/lasso.hpp"
#include "ltlf/printer.hpp"

namespace ltlf {

struct RunVerdict {
  bool accepted = false;
  std::optional<std::string> trace;  // per-state per-ring-position table
};

struct AaOptions {
  // Treat tt as a dead end: delta(tt, x) = {} and tt not accepting. With
  // normalized conjunctions no alternative ever references the tt state, so
  // verdicts are unchanged; the flag exists to check exactly that.
  bool tt_empty_delta = false;
};

class AlternatingAutomaton {
public:
  const std::vector<Formula>& states() const { return states_; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<FormalConjunction>& initial() const { return initial_; }

  bool is_accepting(const Formula& q) const { return accepting_[index_of(q)]; }

  std::vector<Formula> accepting_states() const {
    std::vector<Formula> out;
    for (std::size_t i = 0; i < states_.size(); ++i)
      if (accepting_[i]) out.push_back(states_[i]);
    return out;
  }

  /// The factor alternatives out of a state (transitions grouped by
  /// monomial guard).
  const LinearFactorSet& alternatives(const Formula& q) const {
    static const LinearFactorSet kEmpty;
    if (tt_empty_delta_ && q.kind() == Formula::Kind::True) return kEmpty;
    return alternatives_[index_of(q)];
  }

  ConjunctionSet delta(const Formula& q, const Symbol& x) const {
    check_symbol(x);
    ConjunctionSet out;
    for (const auto& factor : alternatives(q))
      if (monomial_sat(x, factor.monomial)) out.push_back(factor.next);
    sort_unique(out);
    return out;
  }

  /// Decides existence of an accepting run on prefix.loop^omega.
  RunVerdict accepts_lasso(const LassoWord& w) const {
    for (const auto& x : w.prefix) check_symbol(x);
    for (const auto& x : w.loop) check_symbol(x);
    const std::size_t n = w.prefix.size() + w.loop.size();
    auto succ = [&](std::size_t i) { return i + 1 < n ? i + 1 : w.prefix.size(); };

    // Process states bottom-up in the subformula order (size ascending):
    // every conjunct of an alternative is then either already solved or the
    // state itself.
    std::vector<std::size_t> order(states_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      std::size_t sa = formula_size(states_[a]), sb = formula_size(states_[b]);
      if (sa != sb) return sa < sb;
      return compare(states_[a], states_[b]) < 0;
    });

    std::map<Formula, std::vector<char>, FormulaLess> acc;
    for (std::size_t qi : order) {
      const Formula& q = states_[qi];
      const bool greatest = accepting_[qi] && !(tt_empty_delta_ && q.kind() == Formula::Kind::True);
      std::vector<char> cur(n, greatest ? 1 : 0);
      for (std::size_t round = 0; round <= n; ++round) {
        bool changed = false;
        std::vector<char> next(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
          bool v = false;
          for (const auto& factor : alternatives(q)) {
            if (!monomial_sat(symbol_at(w, i), factor.monomial)) continue;
            bool all = true;
            for (const Formula& conjunct : factor.next.elems()) {
              if (conjunct == q) {
                all = cur[succ(i)];
              } else {
                auto it = acc.find(conjunct);
                assert(it != acc.end() && "conjunct outside the subformula order");
                all = it->second[succ(i)];
              }
              if (!all) break;
            }
            if (all) {
              v = true;
              break;
            }
          }
          next[i] = v;
          changed |= next[i] != cur[i];
        }
        cur.swap(next);
        if (!changed) break;
      }
      acc.emplace(q, std::move(cur));
    }

    RunVerdict verdict;
    for (const auto& alt : initial_) {
      bool all = true;
      for (const Formula& q : alt.elems()) all = all && acc.at(q)[0];
      if (all) {
        verdict.accepted = true;
        break;
      }
    }

    std::string trace;
    for (std::size_t qi : order) {
      const Formula& q = states_[qi];
      trace += print(q);
      trace += ':';
      for (char v : acc.at(q)) trace += v ? " 1" : " 0";
      trace += '\n';
    }
    verdict.trace = std::move(trace);
    return verdict;
  }

  friend AlternatingAutomaton build_aa(const Formula& f, const std::vector<std::string>& extra_aps,
                                       const AaOptions& options);

private:
  std::size_t index_of(const Formula& q) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), q, FormulaLess{});
    if (it == states_.end() || *it != q) throw std::invalid_argument("not a state: " + print(q));
    return static_cast<std::size_t>(it - states_.begin());
  }

  void check_symbol(const Symbol& x) const {
    for (const auto& p : x.props())
      if (!std::binary_search(atoms_.begin(), atoms_.end(), p))
        throw std::invalid_argument("symbol proposition outside the automaton alphabet: " + p);
  }

  std::vector<Formula> states_;               // sorted
  std::vector<std::string> atoms_;            // sorted
  std::vector<LinearFactorSet> alternatives_; // per state
  std::vector<char> accepting_;               // per state
  std::vector<FormalConjunction> initial_;
  bool tt_empty_delta_ = false;
};

/// Builds the automaton of a PNF formula. `extra_aps` widens the declared
/// alphabet beyond the atoms of f (guards never mention them, so transitions
/// are unaffected).
inline AlternatingAutomaton build_aa(const Formula& f,
                                     const std::vector<std::string>& extra_aps = {},
                                     const AaOptions& options = {}) {
  detail::require_pnf(f, "build_aa");
  AlternatingAutomaton aa;
  aa.tt_empty_delta_ = options.tt_empty_delta;
  aa.states_ = iterated(f);
  std::set<std::string> aps;
  for (const auto& a : atoms_of(f)) aps.insert(a);
  for (const auto& a : extra_aps) aps.insert(a);
  aa.atoms_.assign(aps.begin(), aps.end());
  aa.initial_ = simp(f);
  for (const Formula& q : aa.states_) {
    aa.alternatives_.push_back(lf(q));
    bool accepting = q.kind() == Formula::Kind::True ||
                     q.kind() == Formula::Kind::Release ||
                     q.kind() == Formula::Kind::Always;
    aa.accepting_.push_back(accepting);
  }
#ifndef NDEBUG
  // The factor-based transition function coincides with the direct
  // derivative, and every alternative respects 1-weakness and closedness.
  for (const Formula& q : aa.states_) {
    if (!(options.tt_empty_delta && q.kind() == Formula::Kind::True))
      for (const Symbol& x : all_symbols(aa.atoms_))
        assert(aa.delta(q, x) == rho(q, x));
    auto subs = subformulae(q);
    for (const auto& factor : lf(q))
      for (const Formula& conjunct : factor.next.elems()) {
        assert((conjunct == q || subs.count(conjunct) == 1) && "not 1-weak");
        assert(std::binary_search(aa.states_.begin(), aa.states_.end(), conjunct,
                                  FormulaLess{}) &&
               "conjunct outside the state set");
      }
  }
#endif
  return aa;
}

/// Deterministic structured dump: states, initial alternatives, accepting
/// set and guard-grouped transitions. Top targets are empty conjunct lists.
inline std::string export_json(const AlternatingAutomaton& aa) {
  nlohmann::json j;
  j["atoms"] = aa.atoms();
  std::vector<std::string> states;
  for (const auto& q : aa.states()) states.push_back(print(q));
  j["states"] = states;
  std::vector<std::vector<std::string>> initial;
  for (const auto& alt : aa.initial()) {
    std::vector<std::string> elems;
    for (const auto& q : alt.elems()) elems.push_back(print(q));
    initial.push_back(std::move(elems));
  }
  j["initial"] = initial;
  std::vector<std::string> accepting;
  for (const auto& q : aa.accepting_states()) accepting.push_back(print(q));
  j["accepting"] = accepting;
  nlohmann::json transitions = nlohmann::json::array();
  for (const auto& q : aa.states()) {
    for (const auto& factor : aa.alternatives(q)) {
      nlohmann::json t;
      t["state"] = print(q);
      std::vector<std::string> guard;
      for (const auto& l : factor.monomial.literals())
        guard.push_back((l.negated ? "!" : "") + l.atom);
      t["guard"] = guard;
      std::vector<std::string> next;
      for (const auto& conjunct : factor.next.elems()) next.push_back(print(conjunct));
      t["next"] = next;
      transitions.push_back(std::move(t));
    }
  }
  j["transitions"] = transitions;
  return j.dump(2) + "\n";
}

/// Deterministic DOT rendering. Accepting states are double circles;
/// alternatives with more than one conjunct go through a point-shaped
/// conjunction node; empty conjunctions end in the tt sink.
inline std::string export_dot(const AlternatingAutomaton& aa) {
  std::string out = "digraph aa {\n  rankdir=LR;\n";
  auto node_id = [&](const Formula& q) {
    auto it = std::lower_bound(aa.states().begin(), aa.states().end(), q, FormulaLess{});
    return "q" + std::to_string(it - aa.states().begin());
  };
  bool needs_tt_sink = false;
  bool has_tt_state = std::any_of(aa.states().begin(), aa.states().end(), [](const Formula& q) {
    return q.kind() == Formula::Kind::True;
  });
  for (const auto& q : aa.states()) {
    out += "  " + node_id(q) + " [label=\"" + print(q) + "\", shape=" +
           (aa.is_accepting(q) ? "doublecircle" : "circle") + "];\n";
  }
  // Initial alternatives get arrows from unlabeled entry points.
  for (std::size_t k = 0; k < aa.initial().size(); ++k) {
    out += "  init" + std::to_string(k) + " [shape=point, label=\"\"];\n";
    const auto& alt = aa.initial()[k];
    if (alt.is_top()) {
      needs_tt_sink = !has_tt_state;
      out += "  init" + std::to_string(k) + " -> " +
             (has_tt_state ? node_id(make_tt()) : std::string("ttsink")) + ";\n";
    } else {
      for (const auto& q : alt.elems())
        out += "  init" + std::to_string(k) + " -> " + node_id(q) + ";\n";
    }
  }
  std::string edges;
  for (const auto& q : aa.states()) {
    const auto& alts = aa.alternatives(q);
    for (std::size_t k = 0; k < alts.size(); ++k) {
      const auto& factor = alts[k];
      std::string guard = print(factor.monomial);
      if (factor.next.size() > 1) {
        std::string cn = node_id(q) + "_a" + std::to_string(k);
        edges += "  " + cn + " [shape=point, label=\"\"];\n";
        edges += "  " + node_id(q) + " -> " + cn + " [label=\"" + guard + "\"];\n";
        for (const auto& conjunct : factor.next.elems())
          edges += "  " + cn + " -> " + node_id(conjunct) + ";\n";
      } else if (factor.next.size() == 1) {
        edges += "  " + node_id(q) + " -> " + node_id(factor.next.elems().front()) +
                 " [label=\"" + guard + "\"];\n";
      } else {
        std::string target = has_tt_state ? node_id(make_tt()) : std::string("ttsink");
        needs_tt_sink = needs_tt_sink || !has_tt_state;
        edges += "  " + node_id(q) + " -> " + target + " [label=\"" + guard + "\"];\n";
      }
    }
  }
  if (needs_tt_sink)
    out += "  ttsink [label=\"tt\", shape=doublecircle];\n";
  out += edges;
  out += "}\n";
  return out;
}

}  // namespace ltlf
