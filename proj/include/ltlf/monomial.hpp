// Literals and monomials.
//
// A monomial is either bottom (unsatisfiable, the ff case) or a canonical
// sorted set of non-contradictory literals; the empty set denotes tt. The
// representation is unique.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ltlf/formula.hpp"
#include "ltlf/lasso.hpp"

namespace ltlf {

struct Literal {
  std::string atom;
  bool negated = false;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.atom == b.atom && a.negated == b.negated;
  }
  // Positive before negative within one atom.
  friend bool operator<(const Literal& a, const Literal& b) {
    if (a.atom != b.atom) return a.atom < b.atom;
    return a.negated < b.negated;
  }
};

inline Formula to_formula(const Literal& l) {
  Formula a = make_atom(l.atom);
  return l.negated ? make_not(a) : a;
}

/// The literal view of an Atom or Not(Atom) formula.
inline Literal to_literal(const Formula& f) {
  if (f.kind() == Formula::Kind::Atom) return Literal{f.atom_name(), false};
  if (f.kind() == Formula::Kind::Not && f.child().kind() == Formula::Kind::Atom)
    return Literal{f.child().atom_name(), true};
  throw std::invalid_argument("not a literal: " + std::to_string(static_cast<int>(f.kind())));
}

class Monomial {
public:
  /// The empty monomial (tt).
  Monomial() = default;

  static Monomial bottom() {
    Monomial m;
    m.bottom_ = true;
    return m;
  }

  /// Canonicalizes a literal set; a complementary pair collapses to bottom.
  static Monomial of_literals(std::vector<Literal> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 0; i + 1 < lits.size(); ++i)
      if (lits[i].atom == lits[i + 1].atom) return bottom();
    Monomial m;
    m.lits_ = std::move(lits);
    return m;
  }

  bool is_bottom() const { return bottom_; }
  bool is_top() const { return !bottom_ && lits_.empty(); }
  const std::vector<Literal>& literals() const { return lits_; }

  /// The atoms required present for satisfaction (the positive literals).
  std::vector<std::string> positive_atoms() const {
    std::vector<std::string> out;
    for (const auto& l : lits_)
      if (!l.negated) out.push_back(l.atom);
    return out;
  }

private:
  bool bottom_ = false;
  std::vector<Literal> lits_;
};

/// Smart conjunction: union of the literal sets, bottom on contradiction.
inline Monomial smart_and(const Monomial& a, const Monomial& b) {
  if (a.is_bottom() || b.is_bottom()) return Monomial::bottom();
  std::vector<Literal> lits = a.literals();
  lits.insert(lits.end(), b.literals().begin(), b.literals().end());
  return Monomial::of_literals(std::move(lits));
}

/// Whether the symbol satisfies the monomial: every positive literal's atom
/// present, every negative literal's atom absent. Bottom is never satisfied.
inline bool monomial_sat(const Symbol& x, const Monomial& m) {
  if (m.is_bottom()) return false;
  for (const auto& l : m.literals())
    if (x.has(l.atom) == l.negated) return false;
  return true;
}

/// The formula a monomial stands for: ff, tt, or the conjunction of its
/// literals in canonical order.
inline Formula theta_monomial(const Monomial& m) {
  if (m.is_bottom()) return make_ff();
  if (m.literals().empty()) return make_tt();
  Formula f = to_formula(m.literals().front());
  for (std::size_t i = 1; i < m.literals().size(); ++i)
    f = make_and(f, to_formula(m.literals()[i]));
  return f;
}

// Ordering for canonical factor sets: literal lists lexicographically,
// with the empty monomial (tt) after all non-empty ones and bottom last.
inline int compare(const Monomial& a, const Monomial& b) {
  auto rank = [](const Monomial& m) { return m.is_bottom() ? 2 : m.is_top() ? 1 : 0; };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (a.literals() < b.literals()) return -1;
  if (b.literals() < a.literals()) return 1;
  return 0;
}

inline bool operator==(const Monomial& a, const Monomial& b) { return compare(a, b) == 0; }
inline bool operator!=(const Monomial& a, const Monomial& b) { return compare(a, b) != 0; }
inline bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

inline std::string print(const Monomial& m) {
  if (m.is_bottom()) return "ff";
  if (m.literals().empty()) return "tt";
  std::string out;
  for (std::size_t i = 0; i < m.literals().size(); ++i) {
    if (i > 0) out += " & ";
    if (m.literals()[i].negated) out += '!';
    out += m.literals()[i].atom;
  }
  return out;
}

}  // namespace ltlf
