// Recursive-descent parser for the concrete formula syntax.
//
// Grammar (whitespace insensitive):
//   form  ::= or
//   or    ::= and ('|' and)*
//   and   ::= bin ('&' bin)*
//   bin   ::= un (('U'|'R') bin)?          -- right-associative
//   un    ::= ('!'|'X'|'F'|'G') un | atomf
//   atomf ::= 'tt' | 'ff' | ident | '(' form ')'
//   ident ::= [a-z][a-zA-Z0-9_]*

#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ltlf/formula.hpp"

namespace ltlf {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

namespace detail {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_formula() {
    skip_ws();
    Formula f = parse_or();
    skip_ws();
    if (!at_end()) fail("expected '&', '|', 'U', 'R' or end of input");
    return f;
  }

private:
  Formula parse_or() {
    Formula f = parse_and();
    skip_ws();
    while (peek() == '|') {
      advance();
      Formula r = parse_and();
      f = make_or(f, r);
      skip_ws();
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_bin();
    skip_ws();
    while (peek() == '&') {
      advance();
      Formula r = parse_bin();
      f = make_and(f, r);
      skip_ws();
    }
    return f;
  }

  Formula parse_bin() {
    Formula f = parse_un();
    skip_ws();
    char c = peek();
    if (c == 'U' || c == 'R') {
      advance();
      Formula r = parse_bin();
      return c == 'U' ? make_until(f, r) : make_release(f, r);
    }
    return f;
  }

  Formula parse_un() {
    skip_ws();
    switch (peek()) {
      case '!': advance(); return make_not(parse_un());
      case 'X': advance(); return make_next(parse_un());
      case 'F': advance(); return make_eventually(parse_un());
      case 'G': advance(); return make_always(parse_un());
      default: return parse_atomf();
    }
  }

  Formula parse_atomf() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      advance();
      Formula f = parse_or();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      advance();
      return f;
    }
    if (c >= 'a' && c <= 'z') {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name += peek();
        advance();
      }
      if (name == "tt") return make_tt();
      if (name == "ff") return make_ff();
      return make_atom(name);
    }
    fail("expected 'tt', 'ff', an identifier, '(', or a prefix operator '!','X','F','G'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (at_end()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& expected) {
    std::string got = at_end() ? "end of input" : std::string("'") + peek() + "'";
    throw ParseError(line_, column_, expected + ", got " + got);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace detail

/// Parses a formula; throws ParseError with line/column on bad input.
inline Formula parse(std::string_view text) { return detail::Parser(text).parse_formula(); }

}  // namespace ltlf
