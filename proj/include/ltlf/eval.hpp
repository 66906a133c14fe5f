// Semantic oracle: evaluation of arbitrary formulas over lasso words and a
// bounded brute-force model search.
//
// Evaluation works on the finite position ring of size |prefix| + |loop|
// (the position after the last loop symbol is identified with the loop
// start). Until/Eventually are least fixpoints of their one-step expansions
// over the ring, Release/Always greatest fixpoints; both stabilize within
// ring-size iterations.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltlf/formula.hpp"
#include "ltlf/lasso.hpp"

namespace ltlf {

namespace detail {

class RingEvaluator {
public:
  explicit RingEvaluator(const LassoWord& w) : word_(w), n_(w.prefix.size() + w.loop.size()) {}

  const std::vector<char>& values(const Formula& f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    std::vector<char> v(n_, 0);
    switch (f.kind()) {
      case Formula::Kind::False: break;
      case Formula::Kind::True: v.assign(n_, 1); break;
      case Formula::Kind::Atom:
        for (std::size_t i = 0; i < n_; ++i) v[i] = symbol_at(word_, i).has(f.atom_name());
        break;
      case Formula::Kind::Not: {
        const auto& c = values(f.child());
        for (std::size_t i = 0; i < n_; ++i) v[i] = !c[i];
        break;
      }
      case Formula::Kind::And: {
        const auto& a = values(f.lhs());
        const auto& b = values(f.rhs());
        for (std::size_t i = 0; i < n_; ++i) v[i] = a[i] && b[i];
        break;
      }
      case Formula::Kind::Or: {
        const auto& a = values(f.lhs());
        const auto& b = values(f.rhs());
        for (std::size_t i = 0; i < n_; ++i) v[i] = a[i] || b[i];
        break;
      }
      case Formula::Kind::Next: {
        const auto& c = values(f.child());
        for (std::size_t i = 0; i < n_; ++i) v[i] = c[succ(i)];
        break;
      }
      case Formula::Kind::Until: {
        const auto& a = values(f.lhs());
        const auto& b = values(f.rhs());
        v = fixpoint(false, [&](const std::vector<char>& cur, std::size_t i) {
          return b[i] || (a[i] && cur[succ(i)]);
        });
        break;
      }
      case Formula::Kind::Release: {
        const auto& a = values(f.lhs());
        const auto& b = values(f.rhs());
        v = fixpoint(true, [&](const std::vector<char>& cur, std::size_t i) {
          return b[i] && (a[i] || cur[succ(i)]);
        });
        break;
      }
      case Formula::Kind::Eventually: {
        const auto& c = values(f.child());
        v = fixpoint(false, [&](const std::vector<char>& cur, std::size_t i) {
          return c[i] || cur[succ(i)];
        });
        break;
      }
      case Formula::Kind::Always: {
        const auto& c = values(f.child());
        v = fixpoint(true, [&](const std::vector<char>& cur, std::size_t i) {
          return c[i] && cur[succ(i)];
        });
        break;
      }
    }
    return memo_.emplace(f, std::move(v)).first->second;
  }

private:
  std::size_t succ(std::size_t i) const { return i + 1 < n_ ? i + 1 : word_.prefix.size(); }

  template <typename Step>
  std::vector<char> fixpoint(bool init, Step step) const {
    std::vector<char> cur(n_, init ? 1 : 0);
    for (std::size_t round = 0; round <= n_; ++round) {
      bool changed = false;
      std::vector<char> next(n_, 0);
      for (std::size_t i = 0; i < n_; ++i) {
        next[i] = step(cur, i);
        changed |= next[i] != cur[i];
      }
      cur.swap(next);
      if (!changed) break;
    }
    return cur;
  }

  const LassoWord& word_;
  std::size_t n_;
  std::map<Formula, std::vector<char>, FormulaLess> memo_;
};

}  // namespace detail

/// True iff prefix.loop^omega satisfies f. Accepts general (non-PNF)
/// formulas.
inline bool eval_lasso(const Formula& f, const LassoWord& w) {
  detail::RingEvaluator ev(w);
  return ev.values(f)[0] != 0;
}

/// Enumerates lassos with |prefix| <= max_prefix, 1 <= |loop| <= max_loop
/// over the alphabet P(aps), ordered by total size, then prefix length, then
/// lexicographically on symbols, and returns the first model of f. Absence
/// is not an unsatisfiability proof.
inline std::optional<LassoWord> sat_search_bounded(const Formula& f,
                                                   const std::vector<std::string>& aps,
                                                   std::size_t max_prefix,
                                                   std::size_t max_loop) {
  if (max_loop < 1) throw std::invalid_argument("sat_search_bounded: max_loop must be >= 1");
  const std::vector<Symbol> alphabet = all_symbols(aps);
  for (std::size_t total = 1; total <= max_prefix + max_loop; ++total) {
    std::size_t p_min = total > max_loop ? total - max_loop : 0;
    std::size_t p_max = std::min(max_prefix, total - 1);
    for (std::size_t plen = p_min; plen <= p_max; ++plen) {
      // Odometer over symbol indices, first position most significant.
      std::vector<std::size_t> idx(total, 0);
      bool exhausted = false;
      while (!exhausted) {
        std::vector<Symbol> syms;
        syms.reserve(total);
        for (std::size_t i : idx) syms.push_back(alphabet[i]);
        LassoWord w(std::vector<Symbol>(syms.begin(), syms.begin() + plen),
                    std::vector<Symbol>(syms.begin() + plen, syms.end()));
        if (eval_lasso(f, w)) return w;
        std::size_t k = total;
        while (k > 0) {
          --k;
          if (++idx[k] < alphabet.size()) break;
          idx[k] = 0;
          if (k == 0) exhausted = true;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace ltlf
