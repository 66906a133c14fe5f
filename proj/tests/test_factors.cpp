#include <doctest.h>

#include "ltlf/eval.hpp"
#include "ltlf/factors.hpp"
#include "ltlf/generate.hpp"
#include "ltlf/parser.hpp"
#include "ltlf/pnf.hpp"
#include "ltlf/printer.hpp"

using namespace ltlf;

namespace {

const std::vector<std::string> kAps{"p", "q"};

std::vector<std::string> factor_strings(const LinearFactorSet& s) {
  std::vector<std::string> out;
  for (const auto& f : s) out.push_back(print(f));
  return out;
}

std::vector<std::string> conj_strings(const ConjunctionSet& s) {
  std::vector<std::string> out;
  for (const auto& c : s) out.push_back(print(c));
  return out;
}

}  // namespace

TEST_CASE("theta_monomial maps monomials to formulas") {
  CHECK(theta_monomial(Monomial::bottom()) == make_ff());
  CHECK(theta_monomial(Monomial{}) == make_tt());
  Monomial m = Monomial::of_literals({{"q", true}, {"p", false}});
  CHECK(print(theta_monomial(m)) == "p & !q");
}

TEST_CASE("smart_and unions literal sets and detects contradictions") {
  Monomial p = Monomial::of_literals({{"p", false}});
  Monomial np = Monomial::of_literals({{"p", true}});
  Monomial q = Monomial::of_literals({{"q", false}});
  CHECK(smart_and(p, np).is_bottom());
  CHECK(smart_and(p, q) == Monomial::of_literals({{"p", false}, {"q", false}}));
  CHECK(smart_and(np, q) == Monomial::of_literals({{"p", true}, {"q", false}}));
  CHECK(smart_and(Monomial::bottom(), q).is_bottom());
  CHECK(smart_and(Monomial{}, q) == q);
  // A directly contradictory literal set also collapses.
  CHECK(Monomial::of_literals({{"p", false}, {"p", true}}).is_bottom());
}

TEST_CASE("monomial_sat checks literal signs against the symbol") {
  Monomial p = Monomial::of_literals({{"p", false}});
  Monomial np = Monomial::of_literals({{"p", true}});
  Monomial pnq = Monomial::of_literals({{"p", false}, {"q", true}});
  CHECK(monomial_sat(Symbol({"p"}), p));
  CHECK(monomial_sat(Symbol{}, np));
  CHECK_FALSE(monomial_sat(Symbol({"p", "q"}), pnq));
  CHECK(monomial_sat(Symbol({"p"}), pnq));
  CHECK_FALSE(monomial_sat(Symbol({"p"}), Monomial::bottom()));
  CHECK(monomial_sat(Symbol{}, Monomial{}));
}

TEST_CASE("smart conjunction is sound for satisfaction") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> tri(0, 2);
  auto random_monomial = [&] {
    std::vector<Literal> lits;
    for (const auto& a : kAps) {
      int t = tri(rng);
      if (t < 2) lits.push_back({a, t == 1});
    }
    return Monomial::of_literals(std::move(lits));
  };
  auto symbols = all_symbols(kAps);
  for (int i = 0; i < 500; ++i) {
    Monomial a = random_monomial(), b = random_monomial();
    for (const auto& x : symbols)
      CHECK(monomial_sat(x, smart_and(a, b)) == (monomial_sat(x, a) && monomial_sat(x, b)));
  }
}

TEST_CASE("simp produces the set-based conjunctive normal form") {
  CHECK(conj_strings(simp(parse("F p"))) == std::vector<std::string>{"F p"});
  CHECK(conj_strings(simp(parse("(X a | X b) & X c"))) ==
        std::vector<std::string>{"X a & X c", "X b & X c"});
  CHECK(conj_strings(simp(parse("p | q"))) == std::vector<std::string>{"p", "q"});
  CHECK(conj_strings(simp(parse("tt"))) == std::vector<std::string>{"tt"});
  CHECK_THROWS_AS(simp(parse("!(p & q)")), std::invalid_argument);
}

TEST_CASE("simp is sound under the lasso oracle") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Formula f = random_pnf_formula(51, i, 10, kAps);
    LassoWord w = random_lasso(51, i, 3, 4, kAps);
    ConjunctionSet cs = simp(f);
    bool any = false;
    for (const auto& c : cs) any = any || eval_lasso(c.to_formula(), w);
    CHECK(any == eval_lasso(f, w));
  }
}

TEST_CASE("lf reproduces the known factor sets") {
  CHECK(factor_strings(lf(parse("F p"))) ==
        std::vector<std::string>{"<p | tt>", "<tt | F p>"});
  CHECK(factor_strings(lf(parse("G F p"))) ==
        std::vector<std::string>{"<p | G F p>", "<tt | F p & G F p>"});
  CHECK(factor_strings(lf(parse("q U p"))) ==
        std::vector<std::string>{"<p | tt>", "<q | q U p>"});
  CHECK(factor_strings(lf(parse("!p & X !p & (q U p)"))) ==
        std::vector<std::string>{"<!p & q | !p & q U p>"});
  CHECK(lf(parse("ff")).empty());
  CHECK(factor_strings(lf(parse("tt"))) == std::vector<std::string>{"<tt | tt>"});
  CHECK(factor_strings(lf(parse("!p"))) == std::vector<std::string>{"<!p | tt>"});
}

TEST_CASE("factors never carry bottom monomials") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Formula f = random_pnf_formula(53, i, 12, kAps);
    for (const auto& factor : lf(f)) CHECK_FALSE(factor.monomial.is_bottom());
  }
}

TEST_CASE("eventually/always shortcuts match the until/release routes") {
  // The desugared route regenerates `tt U b` (resp. `ff R b`) where the
  // shortcut regenerates `F b` (resp. `G b`); rename before comparing.
  auto renamed = [](LinearFactorSet s, const Formula& from, const Formula& to) {
    for (auto& factor : s) {
      std::vector<Formula> elems;
      for (const auto& e : factor.next.elems()) elems.push_back(e == from ? to : e);
      factor.next = FormalConjunction::of_elems(std::move(elems));
    }
    sort_unique(s);
    return s;
  };
  for (std::uint64_t i = 0; i < 200; ++i) {
    Formula body = random_pnf_formula(57, i, 8, kAps);
    CHECK(lf(make_eventually(body)) ==
          renamed(lf(make_until(make_tt(), body)), make_until(make_tt(), body),
                  make_eventually(body)));
    CHECK(lf(make_always(body)) ==
          renamed(lf(make_release(make_ff(), body)), make_release(make_ff(), body),
                  make_always(body)));
  }
}

TEST_CASE("theta_lf maps factor sets to linear form") {
  CHECK(theta_lf({}) == make_ff());
  LinearFactorSet single{{Monomial::of_literals({{"p", false}}), FormalConjunction{}}};
  CHECK(print(theta_lf(single)) == "p & X tt");
  CHECK(print(theta_lf(lf(parse("G F p")))) ==
        "p & X G F p | tt & X(F p & G F p)");
}

TEST_CASE("expansion: theta_lf of lf is equivalent to the formula") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Formula f = random_pnf_formula(61, i, 12, kAps);
    LassoWord w = random_lasso(61, i, 3, 4, kAps);
    CHECK(eval_lasso(theta_lf(lf(f)), w) == eval_lasso(f, w));
  }
}
