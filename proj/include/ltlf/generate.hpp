// Seeded random formulas and lasso words.
//
// Generation is deterministic per (seed, index): every case re-seeds its own
// engine, so any failure is reproducible from those two numbers alone.
// PNF formulas pick uniformly among the PNF constructors with the size
// budget split uniformly between binary children; leaves pick uniformly
// among tt, ff and a literal, literals uniformly over AP x {pos, neg}.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ltlf/formula.hpp"
#include "ltlf/lasso.hpp"

namespace ltlf {

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 round over seed ^ index.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <typename Rng>
Formula gen_leaf(Rng& rng, const std::vector<std::string>& aps, bool pnf) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0: return make_tt();
    case 1: return make_ff();
    default: {
      std::uniform_int_distribution<std::size_t> ap(0, aps.size() - 1);
      Formula a = make_atom(aps[ap(rng)]);
      std::uniform_int_distribution<int> sign(0, 1);
      if (!pnf) return a;  // general formulas negate via the Not constructor below
      return sign(rng) ? make_not(a) : a;
    }
  }
}

template <typename Rng>
Formula gen_formula(Rng& rng, const std::vector<std::string>& aps, int budget, bool pnf) {
  if (budget <= 1) return gen_leaf(rng, aps, pnf);
  // Unary: X F G (plus Not for general formulas); binary needs budget >= 3.
  const int unary_count = pnf ? 3 : 4;
  const int binary_count = 4;  // And Or Until Release
  int choices = unary_count + (budget >= 3 ? binary_count : 0);
  std::uniform_int_distribution<int> pick(0, choices - 1);
  int k = pick(rng);
  if (k < unary_count) {
    Formula c = gen_formula(rng, aps, budget - 1, pnf);
    switch (k) {
      case 0: return make_next(c);
      case 1: return make_eventually(c);
      case 2: return make_always(c);
      default: return make_not(c);
    }
  }
  std::uniform_int_distribution<int> split(1, budget - 2);
  int left = split(rng);
  Formula a = gen_formula(rng, aps, left, pnf);
  Formula b = gen_formula(rng, aps, budget - 1 - left, pnf);
  switch (k - unary_count) {
    case 0: return make_and(a, b);
    case 1: return make_or(a, b);
    case 2: return make_until(a, b);
    default: return make_release(a, b);
  }
}

}  // namespace detail

/// Random PNF formula of size <= max_size over the given atoms.
inline Formula random_pnf_formula(std::uint64_t seed, std::uint64_t index, int max_size,
                                  const std::vector<std::string>& aps) {
  std::mt19937_64 rng(detail::mix_seed(seed, index));
  std::uniform_int_distribution<int> size(1, max_size);
  return detail::gen_formula(rng, aps, size(rng), /*pnf=*/true);
}

/// Random general formula (negation allowed anywhere).
inline Formula random_formula(std::uint64_t seed, std::uint64_t index, int max_size,
                              const std::vector<std::string>& aps) {
  std::mt19937_64 rng(detail::mix_seed(seed, index) ^ 0x5bf03635ULL);
  std::uniform_int_distribution<int> size(1, max_size);
  return detail::gen_formula(rng, aps, size(rng), /*pnf=*/false);
}

/// Random lasso with |prefix| <= max_prefix and 1 <= |loop| <= max_loop;
/// each atom joins each symbol with probability 1/2.
inline LassoWord random_lasso(std::uint64_t seed, std::uint64_t index, int max_prefix,
                              int max_loop, const std::vector<std::string>& aps) {
  std::mt19937_64 rng(detail::mix_seed(seed, index) ^ 0x1a550eadULL);
  std::uniform_int_distribution<int> plen(0, max_prefix);
  std::uniform_int_distribution<int> llen(1, max_loop);
  std::uniform_int_distribution<int> coin(0, 1);
  auto gen_symbol = [&] {
    std::vector<std::string> props;
    for (const auto& a : aps)
      if (coin(rng)) props.push_back(a);
    return Symbol(std::move(props));
  };
  std::vector<Symbol> prefix, loop;
  int p = plen(rng), l = llen(rng);
  for (int i = 0; i < p; ++i) prefix.push_back(gen_symbol());
  for (int i = 0; i < l; ++i) loop.push_back(gen_symbol());
  return LassoWord(std::move(prefix), std::move(loop));
}

}  // namespace ltlf
