// Minimal-parentheses rendering of formulas, inverse of the parser.

#pragma once

#include <string>

#include "ltlf/formula.hpp"

namespace ltlf {

namespace detail {

// Precedence levels: | (0) < & (1) < U/R (2) < prefix ops and atoms (3).
inline int print_level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Or: return 0;
    case Formula::Kind::And: return 1;
    case Formula::Kind::Until:
    case Formula::Kind::Release: return 2;
    default: return 3;
  }
}

inline void print_to(const Formula& f, int min_level, std::string& out) {
  if (print_level(f) < min_level) {
    out += '(';
    print_to(f, 0, out);
    out += ')';
    return;
  }
  switch (f.kind()) {
    case Formula::Kind::False: out += "ff"; break;
    case Formula::Kind::True: out += "tt"; break;
    case Formula::Kind::Atom: out += f.atom_name(); break;
    case Formula::Kind::Not:
      out += '!';
      print_to(f.child(), 3, out);
      break;
    case Formula::Kind::Next:
    case Formula::Kind::Eventually:
    case Formula::Kind::Always: {
      out += f.kind() == Formula::Kind::Next ? 'X'
           : f.kind() == Formula::Kind::Eventually ? 'F' : 'G';
      if (print_level(f.child()) < 3) {
        out += '(';
        print_to(f.child(), 0, out);
        out += ')';
      } else {
        out += ' ';
        print_to(f.child(), 3, out);
      }
      break;
    }
    case Formula::Kind::Until:
    case Formula::Kind::Release:
      // Right-associative, binds tighter than &.
      print_to(f.lhs(), 3, out);
      out += f.kind() == Formula::Kind::Until ? " U " : " R ";
      print_to(f.rhs(), 2, out);
      break;
    case Formula::Kind::And:
      print_to(f.lhs(), 1, out);
      out += " & ";
      print_to(f.rhs(), 2, out);
      break;
    case Formula::Kind::Or:
      print_to(f.lhs(), 0, out);
      out += " | ";
      print_to(f.rhs(), 1, out);
      break;
  }
}

}  // namespace detail

inline std::string print(const Formula& f) {
  std::string out;
  detail::print_to(f, 0, out);
  return out;
}

}  // namespace ltlf
