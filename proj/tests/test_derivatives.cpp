#include <doctest.h>

#include "ltlf/derivatives.hpp"
#include "ltlf/eval.hpp"
#include "ltlf/generate.hpp"
#include "ltlf/parser.hpp"
#include "ltlf/printer.hpp"

using namespace ltlf;

namespace {

const std::vector<std::string> kAps{"p", "q"};

std::vector<std::string> conj_strings(const ConjunctionSet& s) {
  std::vector<std::string> out;
  for (const auto& c : s) out.push_back(print(c));
  return out;
}

}  // namespace

TEST_CASE("pderiv filters factors by the consumed symbol") {
  CHECK(conj_strings(pderiv(FormalConjunction::of(parse("F p")), Symbol({"p"}))) ==
        std::vector<std::string>{"tt", "F p"});
  CHECK(conj_strings(pderiv(FormalConjunction::of(parse("G F p")), Symbol{})) ==
        std::vector<std::string>{"F p & G F p"});
  CHECK(conj_strings(pderiv(FormalConjunction{}, Symbol({"p"}))) ==
        std::vector<std::string>{"tt"});
}

TEST_CASE("rho matches the known derivative sets") {
  CHECK(conj_strings(rho(parse("F p"), Symbol({"p"}))) ==
        std::vector<std::string>{"tt", "F p"});
  CHECK(conj_strings(rho(parse("G F p"), Symbol({"p"}))) ==
        std::vector<std::string>{"F p & G F p", "G F p"});
  CHECK(rho(parse("ff"), Symbol{}).empty());
  CHECK(conj_strings(rho_step(FormalConjunction::of_elems({parse("F p"), parse("G F p")}),
                              Symbol({"p"}))) ==
        std::vector<std::string>{"F p & G F p", "G F p"});
  CHECK(conj_strings(rho(parse("tt"), Symbol{})) == std::vector<std::string>{"tt"});
  CHECK(conj_strings(rho(parse("p"), Symbol({"p"}))) == std::vector<std::string>{"tt"});
  CHECK(rho(parse("p"), Symbol{}).empty());
}

TEST_CASE("rho_word iterates single-symbol derivatives") {
  Formula gfp = parse("G F p");
  CHECK(conj_strings(rho_word(gfp, {})) == std::vector<std::string>{"G F p"});
  std::vector<Symbol> pp{Symbol({"p"}), Symbol({"p"})};
  CHECK(conj_strings(rho_word(gfp, pp)) ==
        std::vector<std::string>{"F p & G F p", "G F p"});
  std::vector<Symbol> one{Symbol{}};
  CHECK(conj_strings(rho_word(parse("ff"), one)).empty());
}

TEST_CASE("descendants closes the seed set under derivation") {
  CHECK(conj_strings(descendants(parse("G F p"))) ==
        std::vector<std::string>{"F p & G F p", "G F p"});
  CHECK(conj_strings(descendants(parse("ff"))) == std::vector<std::string>{"ff"});
  // rho(p, {p}) = {top}, rho(p, {}) = {}, and top self-loops.
  CHECK(conj_strings(descendants(parse("p"))) == std::vector<std::string>{"tt", "p"});
}

TEST_CASE("iterated collects the temporal subformulas") {
  auto strings = [](const std::vector<Formula>& v) {
    std::vector<std::string> out;
    for (const auto& f : v) out.push_back(print(f));
    return out;
  };
  CHECK(strings(iterated(parse("G F p"))) == std::vector<std::string>{"p", "F p", "G F p"});
  CHECK(strings(iterated(parse("p | q"))) == std::vector<std::string>{"p", "q"});
  CHECK(strings(iterated(parse("X p"))) == std::vector<std::string>{"p", "X p"});
  CHECK(strings(iterated(parse("tt"))) == std::vector<std::string>{"tt"});
}

TEST_CASE("in_set_closure decides membership without enumeration") {
  auto base = iterated(parse("G F p"));
  CHECK(in_set_closure(FormalConjunction{}, base));
  CHECK(in_set_closure(FormalConjunction::of_elems({parse("F p"), parse("G F p")}), base));
  CHECK_FALSE(in_set_closure(FormalConjunction::of(parse("X q")), base));
}

TEST_CASE("descendant_bound certifies the closure size") {
  CHECK(descendant_bound(parse("G F p")) == 9);
  CHECK(descendants(parse("G F p")).size() <= 9);
  CHECK(descendant_bound(parse("p")) == 3);
  CHECK(descendants(parse("p")).size() <= 3);
  CHECK(descendant_bound(parse("tt")) == 3);
  CHECK(descendants(parse("tt")).size() >= 1);
}

TEST_CASE("factor route and direct route agree on derivatives") {
  auto symbols = all_symbols(kAps);
  for (std::uint64_t i = 0; i < 300; ++i) {
    Formula f = random_pnf_formula(71, i, 12, kAps);
    for (const auto& x : symbols) CHECK(pderiv_formula(f, x) == rho(f, x));
  }
}

TEST_CASE("one-step expansion through derivatives is sound") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Formula f = random_pnf_formula(73, i, 10, kAps);
    LassoWord w = random_lasso(73, i, 3, 4, kAps);
    // Shift the word one symbol: eval(f, w) iff some derivative by w0 holds
    // on the rest.
    const Symbol& x = symbol_at(w, 0);
    std::vector<Symbol> rest_prefix(w.prefix.begin() + (w.prefix.empty() ? 0 : 1),
                                    w.prefix.end());
    LassoWord rest = w.prefix.empty()
        ? LassoWord({}, [&] {
            std::vector<Symbol> rotated(w.loop.begin() + 1, w.loop.end());
            rotated.push_back(w.loop.front());
            return rotated;
          }())
        : LassoWord(std::move(rest_prefix), w.loop);
    bool any = false;
    for (const auto& c : rho(f, x)) any = any || eval_lasso(c.to_formula(), rest);
    CHECK(any == eval_lasso(f, w));
  }
}

TEST_CASE("closedness: descendants stay inside the iterated base") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Formula f = random_pnf_formula(79, i, 10, kAps);
    auto base = iterated(f);
    for (const auto& c : descendants(f)) CHECK(in_set_closure(c, base));
    for (const auto& c : simp(f)) CHECK(in_set_closure(c, base));
    CHECK(descendants(f).size() <= descendant_bound(f));
  }
}

TEST_CASE("iterated derivatives are subformulas") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Formula f = random_pnf_formula(83, i, 12, kAps);
    auto subs = subformulae(f);
    for (const auto& g : iterated(f)) CHECK(subs.count(g) == 1);
  }
}
