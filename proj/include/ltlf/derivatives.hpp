// Partial derivatives.
//
// Two routes compute the same sets: pderiv() filters linear factors by the
// consumed symbol, rho() is the direct structural recursion. descendants()
// closes a formula's set-normal form under derivation by every symbol over
// its atoms; iterated() gives the finite base set that bounds the closure.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <span>
#include <vector>

#include "ltlf/conjunction.hpp"
#include "ltlf/factors.hpp"
#include "ltlf/formula.hpp"
#include "ltlf/lasso.hpp"
#include "ltlf/monomial.hpp"

namespace ltlf {

namespace detail {

// Pairwise otimes-products of per-element derivative sets.
inline ConjunctionSet conjunction_products(const ConjunctionSet& xs, const ConjunctionSet& ys) {
  ConjunctionSet out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back(x.otimes(y));
  sort_unique(out);
  return out;
}

}  // namespace detail

/// Factor-based derivative of a single temporal formula.
inline ConjunctionSet pderiv(const Formula& f, const Symbol& x) {
  detail::require_pnf(f, "pderiv");
  ConjunctionSet out;
  for (const auto& factor : lf(f))
    if (monomial_sat(x, factor.monomial)) out.push_back(factor.next);
  sort_unique(out);
  return out;
}

/// Factor-based derivative of a formal conjunction: the top conjunction
/// derives to itself, otherwise the products of the element derivatives.
inline ConjunctionSet pderiv(const FormalConjunction& c, const Symbol& x) {
  ConjunctionSet out{FormalConjunction{}};
  for (const Formula& elem : c.elems()) out = detail::conjunction_products(out, pderiv(elem, x));
  return out;
}

/// Derivative of an arbitrary PNF formula via its set-normal form.
inline ConjunctionSet pderiv_formula(const Formula& f, const Symbol& x) {
  ConjunctionSet out;
  for (const auto& c : simp(f)) {
    ConjunctionSet d = pderiv(c, x);
    out.insert(out.end(), d.begin(), d.end());
  }
  sort_unique(out);
  return out;
}

/// Direct derivative, defined by structural recursion without computing
/// linear factors. Results are normalized formal conjunctions.
inline ConjunctionSet rho(const Formula& f, const Symbol& x) {
  detail::require_pnf(f, "rho");
  ConjunctionSet out;
  switch (f.kind()) {
    case Formula::Kind::True: out.push_back(FormalConjunction{}); break;
    case Formula::Kind::False: break;
    case Formula::Kind::Atom:
    case Formula::Kind::Not:
      if (monomial_sat(x, Monomial::of_literals({to_literal(f)})))
        out.push_back(FormalConjunction{});
      break;
    case Formula::Kind::Or: {
      out = rho(f.lhs(), x);
      ConjunctionSet rhs = rho(f.rhs(), x);
      out.insert(out.end(), rhs.begin(), rhs.end());
      break;
    }
    case Formula::Kind::And: out = detail::conjunction_products(rho(f.lhs(), x), rho(f.rhs(), x)); break;
    case Formula::Kind::Next: out = simp(f.child()); break;
    case Formula::Kind::Until: {
      out = rho(f.rhs(), x);
      FormalConjunction self = FormalConjunction::of(f);
      for (const auto& c : rho(f.lhs(), x)) out.push_back(c.otimes(self));
      break;
    }
    case Formula::Kind::Release: {
      out = detail::conjunction_products(rho(f.lhs(), x), rho(f.rhs(), x));
      FormalConjunction self = FormalConjunction::of(f);
      for (const auto& c : rho(f.rhs(), x)) out.push_back(c.otimes(self));
      break;
    }
    case Formula::Kind::Eventually: {
      out = rho(f.child(), x);
      out.push_back(FormalConjunction::of(f));
      break;
    }
    case Formula::Kind::Always: {
      FormalConjunction self = FormalConjunction::of(f);
      for (const auto& c : rho(f.child(), x)) out.push_back(c.otimes(self));
      break;
    }
  }
  sort_unique(out);
  return out;
}

/// One derivation step of a formal conjunction along the direct route.
inline ConjunctionSet rho_step(const FormalConjunction& c, const Symbol& x) {
  ConjunctionSet out{FormalConjunction{}};
  for (const Formula& elem : c.elems()) out = detail::conjunction_products(out, rho(elem, x));
  return out;
}

/// Word derivative: the empty word seeds with the set-normal form of f,
/// then each symbol maps every conjunction through rho_step.
inline ConjunctionSet rho_word(const Formula& f, std::span<const Symbol> word) {
  ConjunctionSet cur = simp(f);
  for (const Symbol& x : word) {
    ConjunctionSet next;
    for (const auto& c : cur) {
      ConjunctionSet d = rho_step(c, x);
      next.insert(next.end(), d.begin(), d.end());
    }
    sort_unique(next);
    cur = std::move(next);
  }
  return cur;
}

/// All derivatives of f by any word over P(atoms(f)): the least fixpoint of
/// rho_step starting from the set-normal form of f. Finite by construction.
inline ConjunctionSet descendants(const Formula& f) {
  const std::vector<Symbol> alphabet = all_symbols(atoms_of(f));
  std::set<FormalConjunction> seen;
  std::deque<FormalConjunction> work;
  for (const auto& c : simp(f))
    if (seen.insert(c).second) work.push_back(c);
  while (!work.empty()) {
    FormalConjunction c = work.front();
    work.pop_front();
    for (const Symbol& x : alphabet)
      for (const auto& d : rho_step(c, x))
        if (seen.insert(d).second) work.push_back(d);
  }
  return {seen.begin(), seen.end()};
}

/// Iterated derivatives: the temporal subformulas reachable by derivation,
/// i.e. the base every descendant conjunction draws its elements from.
inline std::vector<Formula> iterated(const Formula& f) {
  detail::require_pnf(f, "iterated");
  FormulaSet out;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    switch (g.kind()) {
      case Formula::Kind::And:
      case Formula::Kind::Or:
        self(self, g.lhs());
        self(self, g.rhs());
        break;
      case Formula::Kind::Until:
      case Formula::Kind::Release:
        out.insert(g);
        self(self, g.rhs());
        self(self, g.lhs());
        break;
      case Formula::Kind::Next:
      case Formula::Kind::Eventually:
      case Formula::Kind::Always:
        out.insert(g);
        self(self, g.child());
        break;
      default: out.insert(g); break;
    }
  };
  walk(walk, f);
  return {out.begin(), out.end()};
}

/// Membership of a conjunction in the closure universe over `base` without
/// enumerating it: top always belongs, otherwise every element must be in
/// the base (the canonical element order supplies the ascending indices).
inline bool in_set_closure(const FormalConjunction& c, const std::vector<Formula>& base) {
  for (const Formula& elem : c.elems())
    if (!std::binary_search(base.begin(), base.end(), elem, FormulaLess{})) return false;
  return true;
}

/// Upper bound certificate for |descendants(f)|: 2^|iterated(f)| + 1,
/// saturating instead of overflowing.
inline std::uint64_t descendant_bound(const Formula& f) {
  std::size_t n = iterated(f).size();
  if (n >= 63) return UINT64_MAX;
  return (std::uint64_t{1} << n) + 1;
}

}  // namespace ltlf
