// Formal conjunctions of temporal formulas.
//
// A FormalConjunction is a strictly ascending, duplicate-free sequence of
// temporal formulas under the total formula order. The empty sequence is the
// unit (top, identified with tt); the constant tt is absorbed on insertion
// and never stored, so conjunction is associative, commutative and
// idempotent by representation.

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltlf/formula.hpp"
#include "ltlf/printer.hpp"

namespace ltlf {

class FormalConjunction {
public:
  /// The empty conjunction (top / tt).
  FormalConjunction() = default;

  /// Singleton conjunction of one temporal formula; tt collapses to top.
  static FormalConjunction of(const Formula& f) {
    if (!is_temporal(f)) throw std::invalid_argument("conjunction element must be temporal");
    FormalConjunction c;
    if (f.kind() != Formula::Kind::True) c.elems_.push_back(f);
    return c;
  }

  static FormalConjunction of_elems(std::vector<Formula> elems) {
    FormalConjunction c;
    for (const Formula& f : elems) {
      if (!is_temporal(f)) throw std::invalid_argument("conjunction element must be temporal");
      if (f.kind() != Formula::Kind::True) c.elems_.push_back(f);
    }
    std::sort(c.elems_.begin(), c.elems_.end(), FormulaLess{});
    c.elems_.erase(std::unique(c.elems_.begin(), c.elems_.end()), c.elems_.end());
    return c;
  }

  /// Flattens a nested conjunction of temporal formulas; nullopt if some
  /// conjunct is itself rooted in a disjunction.
  static std::optional<FormalConjunction> try_flatten(const Formula& f) {
    std::vector<Formula> elems;
    if (!flatten_into(f, elems)) return std::nullopt;
    return of_elems(std::move(elems));
  }

  bool is_top() const { return elems_.empty(); }
  const std::vector<Formula>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  bool contains(const Formula& f) const {
    return std::binary_search(elems_.begin(), elems_.end(), f, FormulaLess{});
  }

  /// Sorted duplicate-free merge (the conjunction operator).
  FormalConjunction otimes(const FormalConjunction& other) const {
    FormalConjunction out;
    out.elems_.reserve(elems_.size() + other.elems_.size());
    std::merge(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
               std::back_inserter(out.elems_), FormulaLess{});
    out.elems_.erase(std::unique(out.elems_.begin(), out.elems_.end()), out.elems_.end());
    return out;
  }

  /// tt for top, otherwise the left-nested conjunction of the elements in
  /// canonical order.
  Formula to_formula() const {
    if (elems_.empty()) return make_tt();
    Formula f = elems_.front();
    for (std::size_t i = 1; i < elems_.size(); ++i) f = make_and(f, elems_[i]);
    return f;
  }

private:
  static bool flatten_into(const Formula& f, std::vector<Formula>& out) {
    if (f.kind() == Formula::Kind::And)
      return flatten_into(f.lhs(), out) && flatten_into(f.rhs(), out);
    if (!is_temporal(f)) return false;
    out.push_back(f);
    return true;
  }

  std::vector<Formula> elems_;
};

inline FormalConjunction conj(const FormalConjunction& a, const FormalConjunction& b) {
  return a.otimes(b);
}

/// Lexicographic on elements; top sorts first.
inline int compare(const FormalConjunction& a, const FormalConjunction& b) {
  const auto& x = a.elems();
  const auto& y = b.elems();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    int c = compare(x[i], y[i]);
    if (c != 0) return c;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

inline bool operator==(const FormalConjunction& a, const FormalConjunction& b) {
  return compare(a, b) == 0;
}
inline bool operator!=(const FormalConjunction& a, const FormalConjunction& b) {
  return compare(a, b) != 0;
}
inline bool operator<(const FormalConjunction& a, const FormalConjunction& b) {
  return compare(a, b) < 0;
}

inline std::string print(const FormalConjunction& c) { return print(c.to_formula()); }

/// Canonically sorted duplicate-free set of conjunctions. Derivatives and
/// automaton transitions are sets of these.
using ConjunctionSet = std::vector<FormalConjunction>;

inline void sort_unique(ConjunctionSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace ltlf
