// Symbols and ultimately periodic (lasso) words.
//
// A symbol is the set of atomic propositions that hold at one position; a
// lasso word prefix;loop denotes the infinite word prefix . loop^omega.
//
// Text format: `u1 u2 ... ; v1 v2 ...` with each symbol written `{}` or
// `{p,q}`; the prefix may be empty (leading `;`).

#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ltlf {

class Symbol {
public:
  Symbol() = default;

  explicit Symbol(std::vector<std::string> props) : props_(std::move(props)) {
    std::sort(props_.begin(), props_.end());
    props_.erase(std::unique(props_.begin(), props_.end()), props_.end());
  }

  const std::vector<std::string>& props() const { return props_; }

  bool has(const std::string& atom) const {
    return std::binary_search(props_.begin(), props_.end(), atom);
  }

  friend bool operator==(const Symbol& a, const Symbol& b) { return a.props_ == b.props_; }
  friend bool operator!=(const Symbol& a, const Symbol& b) { return a.props_ != b.props_; }
  friend bool operator<(const Symbol& a, const Symbol& b) { return a.props_ < b.props_; }

private:
  std::vector<std::string> props_;
};

struct LassoWord {
  std::vector<Symbol> prefix;
  std::vector<Symbol> loop;  // non-empty

  LassoWord(std::vector<Symbol> prefix_, std::vector<Symbol> loop_)
      : prefix(std::move(prefix_)), loop(std::move(loop_)) {
    if (loop.empty()) throw std::invalid_argument("lasso loop must be non-empty");
  }
};

inline const Symbol& symbol_at(const LassoWord& w, std::size_t i) {
  if (i < w.prefix.size()) return w.prefix[i];
  return w.loop[(i - w.prefix.size()) % w.loop.size()];
}

/// All subsets of `aps`, ordered lexicographically by their sorted
/// proposition lists ({} < {p} < {p,q} < {q}).
inline std::vector<Symbol> all_symbols(const std::vector<std::string>& aps) {
  std::set<std::string> unique_aps(aps.begin(), aps.end());
  std::vector<std::string> sorted(unique_aps.begin(), unique_aps.end());
  std::vector<Symbol> out;
  out.reserve(std::size_t{1} << sorted.size());
  std::vector<std::vector<std::string>> subsets{{}};
  for (const auto& p : sorted) {
    std::size_t n = subsets.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto with = subsets[i];
      with.push_back(p);
      subsets.push_back(std::move(with));
    }
  }
  std::sort(subsets.begin(), subsets.end());
  for (auto& s : subsets) out.push_back(Symbol(std::move(s)));
  return out;
}

inline std::string to_string(const Symbol& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.props().size(); ++i) {
    if (i > 0) out += ',';
    out += x.props()[i];
  }
  out += '}';
  return out;
}

inline std::string to_string(const LassoWord& w) {
  std::string out;
  for (const auto& x : w.prefix) {
    out += to_string(x);
    out += ' ';
  }
  out += ';';
  for (const auto& x : w.loop) {
    out += ' ';
    out += to_string(x);
  }
  return out;
}

namespace detail {

inline std::vector<Symbol> parse_symbol_list(std::string_view text, std::string_view what) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{')
      throw std::invalid_argument(std::string(what) + ": expected '{' in symbol list");
    ++i;
    std::vector<std::string> props;
    std::string cur;
    for (;; ++i) {
      if (i >= text.size())
        throw std::invalid_argument(std::string(what) + ": unterminated symbol");
      char c = text[i];
      if (c == '}' || c == ',') {
        if (!cur.empty()) props.push_back(cur);
        cur.clear();
        if (c == '}') break;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    ++i;
    out.push_back(Symbol(std::move(props)));
    skip_ws();
  }
  return out;
}

}  // namespace detail

inline Symbol parse_symbol(std::string_view text) {
  auto syms = detail::parse_symbol_list(text, "symbol");
  if (syms.size() != 1) throw std::invalid_argument("expected exactly one symbol");
  return syms.front();
}

inline LassoWord parse_lasso(std::string_view text) {
  auto sep = text.find(';');
  if (sep == std::string_view::npos)
    throw std::invalid_argument("lasso: missing ';' between prefix and loop");
  if (text.find(';', sep + 1) != std::string_view::npos)
    throw std::invalid_argument("lasso: more than one ';'");
  auto prefix = detail::parse_symbol_list(text.substr(0, sep), "lasso prefix");
  auto loop = detail::parse_symbol_list(text.substr(sep + 1), "lasso loop");
  if (loop.empty()) throw std::invalid_argument("lasso: loop must contain at least one symbol");
  return LassoWord(std::move(prefix), std::move(loop));
}

}  // namespace ltlf
