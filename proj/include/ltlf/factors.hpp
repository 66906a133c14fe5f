// Linear factors.
//
// A linear factor <mu, c> pairs a monomial over the current symbol with a
// formal conjunction that must hold from the next position on; a set of
// factors is read as a disjunction. lf() decomposes a PNF formula into its
// factor set; theta_lf() maps a factor set back to a formula in linear form,
// and the two are inverse up to logical equivalence.

#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltlf/conjunction.hpp"
#include "ltlf/formula.hpp"
#include "ltlf/monomial.hpp"

namespace ltlf {

struct LinearFactor {
  Monomial monomial;        // never bottom
  FormalConjunction next;
};

inline int compare(const LinearFactor& a, const LinearFactor& b) {
  int c = compare(a.monomial, b.monomial);
  return c != 0 ? c : compare(a.next, b.next);
}
inline bool operator==(const LinearFactor& a, const LinearFactor& b) { return compare(a, b) == 0; }
inline bool operator<(const LinearFactor& a, const LinearFactor& b) { return compare(a, b) < 0; }

inline std::string print(const LinearFactor& f) {
  return "<" + print(f.monomial) + " | " + print(f.next) + ">";
}

/// Deduplicated factor set in canonical (monomial, next) order.
using LinearFactorSet = std::vector<LinearFactor>;

inline void sort_unique(LinearFactorSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

namespace detail {
inline void require_pnf(const Formula& f, const char* op) {
  if (!is_pnf(f)) throw std::invalid_argument(std::string(op) + ": formula must be in PNF");
}
}  // namespace detail

/// Set-based conjunctive normal form: a set of formal conjunctions whose
/// disjunction is equivalent to f. Temporal formulas map to their singleton,
/// conjunction distributes pairwise, disjunction takes the union.
inline ConjunctionSet simp(const Formula& f) {
  detail::require_pnf(f, "simp");
  switch (f.kind()) {
    case Formula::Kind::And: {
      ConjunctionSet lhs = simp(f.lhs());
      ConjunctionSet rhs = simp(f.rhs());
      ConjunctionSet out;
      out.reserve(lhs.size() * rhs.size());
      for (const auto& a : lhs)
        for (const auto& b : rhs) out.push_back(a.otimes(b));
      sort_unique(out);
      return out;
    }
    case Formula::Kind::Or: {
      ConjunctionSet out = simp(f.lhs());
      ConjunctionSet rhs = simp(f.rhs());
      out.insert(out.end(), rhs.begin(), rhs.end());
      sort_unique(out);
      return out;
    }
    default: return {FormalConjunction::of(f)};
  }
}

/// Linear factors of a PNF formula. Products with contradictory monomials
/// are dropped as they arise, so no factor ever carries a bottom monomial.
inline LinearFactorSet lf(const Formula& f) {
  detail::require_pnf(f, "lf");
  LinearFactorSet out;
  auto product = [](const LinearFactorSet& xs, const LinearFactorSet& ys) {
    LinearFactorSet prod;
    for (const auto& x : xs)
      for (const auto& y : ys) {
        Monomial m = smart_and(x.monomial, y.monomial);
        if (m.is_bottom()) continue;
        prod.push_back({std::move(m), x.next.otimes(y.next)});
      }
    return prod;
  };
  switch (f.kind()) {
    case Formula::Kind::False: break;
    case Formula::Kind::True:
      out.push_back({Monomial{}, FormalConjunction{}});
      break;
    case Formula::Kind::Atom:
    case Formula::Kind::Not:
      out.push_back({Monomial::of_literals({to_literal(f)}), FormalConjunction{}});
      break;
    case Formula::Kind::Or: {
      out = lf(f.lhs());
      LinearFactorSet rhs = lf(f.rhs());
      out.insert(out.end(), rhs.begin(), rhs.end());
      break;
    }
    case Formula::Kind::And: out = product(lf(f.lhs()), lf(f.rhs())); break;
    case Formula::Kind::Next:
      for (const auto& c : simp(f.child())) out.push_back({Monomial{}, c});
      break;
    case Formula::Kind::Until: {
      out = lf(f.rhs());
      FormalConjunction self = FormalConjunction::of(f);
      for (const auto& x : lf(f.lhs())) out.push_back({x.monomial, x.next.otimes(self)});
      break;
    }
    case Formula::Kind::Release: {
      out = product(lf(f.lhs()), lf(f.rhs()));
      FormalConjunction self = FormalConjunction::of(f);
      for (const auto& y : lf(f.rhs())) out.push_back({y.monomial, y.next.otimes(self)});
      break;
    }
    case Formula::Kind::Eventually: {
      out = lf(f.child());
      out.push_back({Monomial{}, FormalConjunction::of(f)});
      break;
    }
    case Formula::Kind::Always: {
      FormalConjunction self = FormalConjunction::of(f);
      for (const auto& x : lf(f.child())) out.push_back({x.monomial, x.next.otimes(self)});
      break;
    }
  }
  sort_unique(out);
  return out;
}

/// Factors of a formal conjunction: the pairwise factor products across its
/// elements; the empty conjunction has the single factor <tt, top>.
inline LinearFactorSet factors_of(const FormalConjunction& c) {
  LinearFactorSet out{{Monomial{}, FormalConjunction{}}};
  for (const Formula& elem : c.elems()) {
    LinearFactorSet next;
    for (const auto& x : out)
      for (const auto& y : lf(elem)) {
        Monomial m = smart_and(x.monomial, y.monomial);
        if (m.is_bottom()) continue;
        next.push_back({std::move(m), x.next.otimes(y.next)});
      }
    out = std::move(next);
  }
  sort_unique(out);
  return out;
}

/// The linear-form formula of a factor set: the disjunction over factors of
/// theta(monomial) and Next of the conjunction; the empty set is ff.
inline Formula theta_lf(const LinearFactorSet& s) {
  if (s.empty()) return make_ff();
  auto term = [](const LinearFactor& f) {
    return make_and(theta_monomial(f.monomial), make_next(f.next.to_formula()));
  };
  Formula out = term(s.front());
  for (std::size_t i = 1; i < s.size(); ++i) out = make_or(out, term(s[i]));
  return out;
}

}  // namespace ltlf
