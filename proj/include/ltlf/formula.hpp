// Abstract syntax of linear temporal logic formulas.
//
// Formulas are immutable trees shared via shared_ptr; copying a Formula is
// cheap and every operation below is a pure function, so values can be used
// freely across threads.

#pragma once

#include <cassert>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ltlf {

class Formula {
public:
  // Declaration order doubles as the constructor rank used by compare():
  // False < True < Atom < Not < Next < Eventually < Always < Until <
  // Release < And < Or, then lexicographic on children, atoms by name.
  enum class Kind : std::uint8_t {
    False,
    True,
    Atom,
    Not,
    Next,
    Eventually,
    Always,
    Until,
    Release,
    And,
    Or,
  };

  Kind kind() const { return node_->kind; }

  const std::string& atom_name() const {
    assert(node_->kind == Kind::Atom);
    return node_->atom;
  }

  Formula child() const {
    assert(arity() == 1);
    return Formula(node_->lhs);
  }

  Formula lhs() const {
    assert(arity() == 2);
    return Formula(node_->lhs);
  }

  Formula rhs() const {
    assert(arity() == 2);
    return Formula(node_->rhs);
  }

  int arity() const {
    switch (node_->kind) {
      case Kind::False:
      case Kind::True:
      case Kind::Atom: return 0;
      case Kind::Not:
      case Kind::Next:
      case Kind::Eventually:
      case Kind::Always: return 1;
      default: return 2;
    }
  }

  friend Formula make_atom(std::string name);
  friend Formula make_tt();
  friend Formula make_ff();
  friend Formula make_not(Formula f);
  friend Formula make_next(Formula f);
  friend Formula make_eventually(Formula f);
  friend Formula make_always(Formula f);
  friend Formula make_and(Formula a, Formula b);
  friend Formula make_or(Formula a, Formula b);
  friend Formula make_until(Formula a, Formula b);
  friend Formula make_release(Formula a, Formula b);

private:
  struct Node {
    Kind kind;
    std::string atom;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula leaf(Kind k, std::string atom = {}) {
    return Formula(std::make_shared<const Node>(Node{k, std::move(atom), nullptr, nullptr}));
  }

  static Formula unary(Kind k, const Formula& f) {
    return Formula(std::make_shared<const Node>(Node{k, {}, f.node_, nullptr}));
  }

  static Formula binary(Kind k, const Formula& a, const Formula& b) {
    return Formula(std::make_shared<const Node>(Node{k, {}, a.node_, b.node_}));
  }

  std::shared_ptr<const Node> node_;
};

inline Formula make_atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be non-empty");
  return Formula::leaf(Formula::Kind::Atom, std::move(name));
}
inline Formula make_tt() { return Formula::leaf(Formula::Kind::True); }
inline Formula make_ff() { return Formula::leaf(Formula::Kind::False); }
inline Formula make_not(Formula f) { return Formula::unary(Formula::Kind::Not, f); }
inline Formula make_next(Formula f) { return Formula::unary(Formula::Kind::Next, f); }
inline Formula make_eventually(Formula f) { return Formula::unary(Formula::Kind::Eventually, f); }
inline Formula make_always(Formula f) { return Formula::unary(Formula::Kind::Always, f); }
inline Formula make_and(Formula a, Formula b) { return Formula::binary(Formula::Kind::And, a, b); }
inline Formula make_or(Formula a, Formula b) { return Formula::binary(Formula::Kind::Or, a, b); }
inline Formula make_until(Formula a, Formula b) { return Formula::binary(Formula::Kind::Until, a, b); }
inline Formula make_release(Formula a, Formula b) { return Formula::binary(Formula::Kind::Release, a, b); }

/// Total structural order: constructor rank first, then children, atoms by
/// name. Returns <0, 0, >0.
inline int compare(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.arity()) {
    case 0:
      if (a.kind() == Formula::Kind::Atom) return a.atom_name().compare(b.atom_name());
      return 0;
    case 1: return compare(a.child(), b.child());
    default: {
      int c = compare(a.lhs(), b.lhs());
      return c != 0 ? c : compare(a.rhs(), b.rhs());
    }
  }
}

inline bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
inline bool operator!=(const Formula& a, const Formula& b) { return compare(a, b) != 0; }
inline bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const { return compare(a, b) < 0; }
};

using FormulaSet = std::set<Formula, FormulaLess>;

/// Literal: an atom or a negated atom.
inline bool is_literal(const Formula& f) {
  return f.kind() == Formula::Kind::Atom ||
         (f.kind() == Formula::Kind::Not && f.child().kind() == Formula::Kind::Atom);
}

/// Positive normal form: negation only directly on atoms.
inline bool is_pnf(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::False:
    case Formula::Kind::True:
    case Formula::Kind::Atom: return true;
    case Formula::Kind::Not: return f.child().kind() == Formula::Kind::Atom;
    case Formula::Kind::Next:
    case Formula::Kind::Eventually:
    case Formula::Kind::Always: return is_pnf(f.child());
    default: return is_pnf(f.lhs()) && is_pnf(f.rhs());
  }
}

/// Temporal formula: in PNF and not rooted in a conjunction or disjunction.
inline bool is_temporal(const Formula& f) {
  return is_pnf(f) && f.kind() != Formula::Kind::And && f.kind() != Formula::Kind::Or;
}

/// Number of literal occurrences plus operator occurrences. A negated atom
/// counts as a single literal.
inline std::size_t formula_size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::False:
    case Formula::Kind::True:
    case Formula::Kind::Atom: return 1;
    case Formula::Kind::Not:
      if (f.child().kind() == Formula::Kind::Atom) return 1;
      return 1 + formula_size(f.child());
    case Formula::Kind::Next:
    case Formula::Kind::Eventually:
    case Formula::Kind::Always: return 1 + formula_size(f.child());
    default: return 1 + formula_size(f.lhs()) + formula_size(f.rhs());
  }
}

namespace detail {
inline void collect_subformulae(const Formula& f, FormulaSet& out) {
  out.insert(f);
  switch (f.arity()) {
    case 0: break;
    case 1: collect_subformulae(f.child(), out); break;
    default:
      collect_subformulae(f.lhs(), out);
      collect_subformulae(f.rhs(), out);
  }
}

inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.arity()) {
    case 0:
      if (f.kind() == Formula::Kind::Atom) out.insert(f.atom_name());
      break;
    case 1: collect_atoms(f.child(), out); break;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}
}  // namespace detail

/// Closure of f under sub-terms, including f itself.
inline FormulaSet subformulae(const Formula& f) {
  FormulaSet out;
  detail::collect_subformulae(f, out);
  return out;
}

/// The atomic propositions occurring in f, sorted.
inline std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> s;
  detail::collect_atoms(f, s);
  return {s.begin(), s.end()};
}

}  // namespace ltlf
