#include <doctest.h>

#include "ltlf/cli.hpp"

using namespace ltlf;

TEST_CASE("cli lf prints the factor set") {
  CliResult r = run_cli({"lf", "G F p"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "<p | G F p>\n<tt | F p & G F p>\n");
}

TEST_CASE("cli sat reports the verdict through the exit code") {
  CliResult unsat = run_cli({"sat", "G p & F !p"});
  CHECK(unsat.exit_code == 1);
  CHECK(unsat.out == "UNSAT\n");

  CliResult sat = run_cli({"sat", "p U q"});
  CHECK(sat.exit_code == 0);
  CHECK(sat.out.substr(0, 4) == "SAT\n");
}

TEST_CASE("cli eval prints the oracle verdict") {
  CliResult r = run_cli({"eval", "G F p", "--lasso", "; {p}"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true\n");
  CliResult rf = run_cli({"eval", "G F p", "--lasso", "{p} ; {}"});
  CHECK(rf.exit_code == 0);
  CHECK(rf.out == "false\n");
}

TEST_CASE("cli parse and pnf round formulas through the printer") {
  CHECK(run_cli({"parse", "G (F (p))"}).out == "G F p\n");
  CHECK(run_cli({"pnf", "!(p U q)"}).out == "!p R !q\n");
  CHECK(run_cli({"parse", "p |"}).exit_code == 2);
  CHECK_FALSE(run_cli({"parse", "p |"}).err.empty());
}

TEST_CASE("cli reads the formula from stdin when given '-'") {
  CliResult r = run_cli({"parse", "-"}, "G F p");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "G F p\n");
}

TEST_CASE("cli deriv and descendants emit canonical conjunction sets") {
  CliResult r = run_cli({"deriv", "F p", "--symbol", "{p}"});
  CHECK(r.out == "tt\nF p\n");
  CliResult d = run_cli({"descendants", "G F p"});
  CHECK(d.out == "F p & G F p\nG F p\n");
  CliResult j = run_cli({"deriv", "F p", "--symbol", "{p}", "--json"});
  CHECK(j.out.find("[]") != std::string::npos);  // the top conjunction
}

TEST_CASE("cli aa and tableau expose the format switch") {
  CHECK(run_cli({"aa", "G F p", "--format", "dot"}).out.find("digraph") == 0);
  CHECK(run_cli({"aa", "G F p", "--format", "json"}).out.find("\"states\"") !=
        std::string::npos);
  CHECK(run_cli({"aa", "G F p"}).out.find("alternatives:") != std::string::npos);
  CHECK(run_cli({"tableau", "q U p"}).out.find("verdict: SAT") != std::string::npos);
  CHECK(run_cli({"tableau", "q U p", "--format", "dot"}).out.find("digraph") == 0);
  CHECK(run_cli({"tableau", "G p & F !p", "--original"}).out.find("verdict: UNSAT") !=
        std::string::npos);
  CHECK(run_cli({"tableau", "q U p", "--original", "--optimized"}).exit_code == 2);
}

TEST_CASE("cli rejects usage errors with exit 2") {
  CHECK(run_cli({"deriv", "p"}).exit_code == 2);          // missing --symbol
  CHECK(run_cli({"nonsense"}).exit_code == 2);
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"crosscheck", "--count", "0"}).exit_code == 2);
  CHECK(run_cli({"eval", "p"}).exit_code == 2);           // missing --lasso
}

TEST_CASE("cli output is deterministic") {
  CliResult a = run_cli({"aa", "G (p | F q)", "--format", "json"});
  CliResult b = run_cli({"aa", "G (p | F q)", "--format", "json"});
  CHECK(a.out == b.out);
}

TEST_CASE("cli structured outputs are well-formed json and formulas re-parse") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"lf", "G(p | F q)", "--json"},
           {"deriv", "p R q", "--symbol", "{q}", "--json"},
           {"descendants", "p U (q & X p)", "--json"},
           {"aa", "G(p | F q)", "--format", "json"},
           {"tableau", "p U (q & X p)", "--format", "json"},
           {"tableau", "G p & F !p", "--original", "--format", "json"},
           {"sat", "p U q", "--json"},
           {"eval", "p", "--lasso", "; {p}", "--json"},
       }) {
    CliResult r = run_cli(args);
    CHECK(nlohmann::json::accept(r.out));
  }
  // Text outputs of the formula-valued subcommands re-parse.
  for (const char* f : {"G (F (p))", "!(p U q)", "p & q | r"}) {
    std::string printed = run_cli({"parse", f}).out;
    printed.pop_back();  // newline
    CHECK(print(parse(printed)) == printed);
  }
}

TEST_CASE("cli crosscheck runs the property suite") {
  CliResult r = run_cli({"crosscheck", "--seed", "7", "--count", "5", "--max-size", "7"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("expansion-theorem: 5/5") != std::string::npos);
  CHECK(r.out.find("isomorphism: 5/5") != std::string::npos);
  CHECK(r.out.find("tableau-vs-oracle: 5/5") != std::string::npos);
  CHECK(r.out.find("cases: 5") != std::string::npos);
}
