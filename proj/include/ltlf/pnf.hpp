// Positive normal form: push negations down to the atoms using the
// de Morgan laws and the operator duals (X self-dual, U/R dual, F/G dual).
// The result grows at most linearly.

#pragma once

#include "ltlf/formula.hpp"

namespace ltlf {

namespace detail {

inline Formula pnf_pos(const Formula& f);
inline Formula pnf_neg(const Formula& f);

inline Formula pnf_pos(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::False:
    case Formula::Kind::True:
    case Formula::Kind::Atom: return f;
    case Formula::Kind::Not: return pnf_neg(f.child());
    case Formula::Kind::Next: return make_next(pnf_pos(f.child()));
    case Formula::Kind::Eventually: return make_eventually(pnf_pos(f.child()));
    case Formula::Kind::Always: return make_always(pnf_pos(f.child()));
    case Formula::Kind::And: return make_and(pnf_pos(f.lhs()), pnf_pos(f.rhs()));
    case Formula::Kind::Or: return make_or(pnf_pos(f.lhs()), pnf_pos(f.rhs()));
    case Formula::Kind::Until: return make_until(pnf_pos(f.lhs()), pnf_pos(f.rhs()));
    case Formula::Kind::Release: return make_release(pnf_pos(f.lhs()), pnf_pos(f.rhs()));
  }
  return f;  // unreachable
}

inline Formula pnf_neg(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::False: return make_tt();
    case Formula::Kind::True: return make_ff();
    case Formula::Kind::Atom: return make_not(f);
    case Formula::Kind::Not: return pnf_pos(f.child());
    case Formula::Kind::Next: return make_next(pnf_neg(f.child()));
    case Formula::Kind::Eventually: return make_always(pnf_neg(f.child()));
    case Formula::Kind::Always: return make_eventually(pnf_neg(f.child()));
    case Formula::Kind::And: return make_or(pnf_neg(f.lhs()), pnf_neg(f.rhs()));
    case Formula::Kind::Or: return make_and(pnf_neg(f.lhs()), pnf_neg(f.rhs()));
    case Formula::Kind::Until: return make_release(pnf_neg(f.lhs()), pnf_neg(f.rhs()));
    case Formula::Kind::Release: return make_until(pnf_neg(f.lhs()), pnf_neg(f.rhs()));
  }
  return f;  // unreachable
}

}  // namespace detail

inline Formula to_pnf(const Formula& f) { return detail::pnf_pos(f); }

}  // namespace ltlf
