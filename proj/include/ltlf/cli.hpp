// Command-line surface.
//
//   ltlf <subcommand> [FORMULA] [flags]
//
// Subcommands: parse, pnf, lf, deriv, descendants, aa, tableau, sat, eval,
// crosscheck. FORMULA may be '-' to read from stdin. `sat` exits 0 when
// satisfiable, 1 when unsatisfiable, 2 on usage or parse errors; all other
// subcommands exit 0 on success and 2 on errors, except crosscheck which
// exits 1 when a property failed.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ltlf/automaton.hpp"
#include "ltlf/crosscheck.hpp"
#include "ltlf/derivatives.hpp"
#include "ltlf/eval.hpp"
#include "ltlf/factors.hpp"
#include "ltlf/parser.hpp"
#include "ltlf/pnf.hpp"
#include "ltlf/printer.hpp"
#include "ltlf/tableau.hpp"

namespace ltlf {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

inline nlohmann::json factor_record(const LinearFactor& f) {
  nlohmann::json rec;
  std::vector<std::string> monomial;
  for (const auto& l : f.monomial.literals()) monomial.push_back((l.negated ? "!" : "") + l.atom);
  rec["monomial"] = monomial;
  std::vector<std::string> next;
  for (const auto& e : f.next.elems()) next.push_back(print(e));
  rec["next"] = next;
  return rec;
}

inline nlohmann::json conjunction_array(const ConjunctionSet& cs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cs) {
    std::vector<std::string> elems;
    for (const auto& e : c.elems()) elems.push_back(print(e));
    arr.push_back(elems);
  }
  return arr;
}

inline std::string aa_text_summary(const AlternatingAutomaton& aa) {
  std::string out;
  out += "states:";
  for (const auto& q : aa.states()) out += " " + print(q) + ";";
  out += "\ninitial:";
  for (const auto& alt : aa.initial()) out += " " + print(alt) + ";";
  out += "\naccepting:";
  for (const auto& q : aa.accepting_states()) out += " " + print(q) + ";";
  out += "\nalternatives:\n";
  for (const auto& q : aa.states())
    for (const auto& factor : aa.alternatives(q))
      out += "  " + print(q) + " --[" + print(factor.monomial) + "]--> " +
             print(factor.next) + "\n";
  return out;
}

inline std::string tableau_text_summary(const TableauGraph& g) {
  std::string out;
  for (const auto& pre : g.prestates())
    out += "prestate " + print(pre.formula) + (pre.eliminated ? " [eliminated]\n" : "\n");
  for (const auto& st : g.states())
    out += "state " + print(st.node) + " -> " +
           print(g.prestates()[st.pd_child].formula) +
           (st.eliminated ? " [eliminated]\n" : "\n");
  out += std::string("verdict: ") + (g.initial_eliminated() ? "UNSAT" : "SAT") + "\n";
  return out;
}

inline std::string tableau_text_summary(const OriginalTableau& t) {
  std::string out;
  for (const auto& n : t.nodes()) {
    std::string label;
    for (const auto& g : n.marks) label += (label.empty() ? "" : ", ") + print(g) + "*";
    for (const auto& g : n.formulas) label += (label.empty() ? "" : ", ") + print(g);
    out += std::string(n.is_prestate ? "prestate" : n.is_state ? "state" : "node") + " {" +
           label + "}" + (n.eliminated ? " [eliminated]\n" : "\n");
  }
  out += std::string("verdict: ") + (t.initial_eliminated() ? "UNSAT" : "SAT") + "\n";
  return out;
}

}  // namespace detail

/// Runs the CLI on the given arguments (program name excluded); `stdin_text`
/// stands in for standard input when FORMULA is '-'.
inline CliResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  CliResult result;

  CLI::App app{"Linear factors, partial derivatives, alternating automata and semantic tableaux for LTL"};
  app.name("ltlf");
  app.require_subcommand(1);

  std::string formula_text, symbol_text, lasso_text, format = "text";
  bool json_flag = false, original = false, optimized = false;
  std::uint64_t seed = 1;
  int count = 100;
  int max_size = 10;

  auto add_formula = [&](CLI::App* cmd) {
    cmd->add_option("formula", formula_text, "formula ('-' reads stdin)")->required();
  };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json_flag, "structured output"); };

  CLI::App* cmd_parse = app.add_subcommand("parse", "parse and reprint canonically");
  add_formula(cmd_parse);
  add_json(cmd_parse);

  CLI::App* cmd_pnf = app.add_subcommand("pnf", "positive normal form");
  add_formula(cmd_pnf);
  add_json(cmd_pnf);

  CLI::App* cmd_lf = app.add_subcommand("lf", "linear factors");
  add_formula(cmd_lf);
  add_json(cmd_lf);

  CLI::App* cmd_deriv = app.add_subcommand("deriv", "partial derivative by one symbol");
  add_formula(cmd_deriv);
  cmd_deriv->add_option("--symbol", symbol_text, "symbol, e.g. \"{p,q}\"")->required();
  add_json(cmd_deriv);

  CLI::App* cmd_desc = app.add_subcommand("descendants", "all derivatives by any word");
  add_formula(cmd_desc);
  add_json(cmd_desc);

  CLI::App* cmd_aa = app.add_subcommand("aa", "alternating automaton");
  add_formula(cmd_aa);
  cmd_aa->add_option("--format", format, "text|dot|json")
      ->check(CLI::IsMember({"text", "dot", "json"}));
  add_json(cmd_aa);

  CLI::App* cmd_tab = app.add_subcommand("tableau", "tableau construction");
  add_formula(cmd_tab);
  cmd_tab->add_option("--format", format, "text|dot|json")
      ->check(CLI::IsMember({"text", "dot", "json"}));
  cmd_tab->add_flag("--original", original, "unoptimized construction");
  cmd_tab->add_flag("--optimized", optimized, "optimized construction (default)");
  add_json(cmd_tab);

  CLI::App* cmd_sat = app.add_subcommand("sat", "satisfiability verdict with witness");
  add_formula(cmd_sat);
  add_json(cmd_sat);

  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate on a lasso word");
  add_formula(cmd_eval);
  cmd_eval->add_option("--lasso", lasso_text, "lasso, e.g. \"{p} ; {} {p}\"")->required();
  add_json(cmd_eval);

  CLI::App* cmd_cross = app.add_subcommand("crosscheck", "run the cross-module property suite");
  cmd_cross->add_option("--seed", seed, "generator seed");
  cmd_cross->add_option("--count", count, "number of random formulas");
  cmd_cross->add_option("--max-size", max_size, "formula size bound");

  std::reverse(args.begin(), args.end());  // CLI11 vector parse order
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 2;
    return result;
  }

  try {
    if (formula_text == "-") formula_text = stdin_text;

    if (cmd_parse->parsed() || cmd_pnf->parsed()) {
      Formula f = parse(formula_text);
      if (cmd_pnf->parsed()) f = to_pnf(f);
      if (json_flag)
        result.out = nlohmann::json{{"formula", print(f)}}.dump(2) + "\n";
      else
        result.out = print(f) + "\n";
    } else if (cmd_lf->parsed()) {
      LinearFactorSet factors = lf(to_pnf(parse(formula_text)));
      if (json_flag) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : factors) arr.push_back(detail::factor_record(f));
        result.out = arr.dump(2) + "\n";
      } else {
        for (const auto& f : factors) result.out += print(f) + "\n";
      }
    } else if (cmd_deriv->parsed()) {
      Symbol x = parse_symbol(symbol_text);
      ConjunctionSet d = rho(to_pnf(parse(formula_text)), x);
      if (json_flag) {
        result.out = detail::conjunction_array(d).dump(2) + "\n";
      } else {
        for (const auto& c : d) result.out += print(c) + "\n";
      }
    } else if (cmd_desc->parsed()) {
      ConjunctionSet d = descendants(to_pnf(parse(formula_text)));
      if (json_flag) {
        result.out = detail::conjunction_array(d).dump(2) + "\n";
      } else {
        for (const auto& c : d) result.out += print(c) + "\n";
      }
    } else if (cmd_aa->parsed()) {
      AlternatingAutomaton aa = build_aa(to_pnf(parse(formula_text)));
      if (json_flag || format == "json")
        result.out = export_json(aa);
      else if (format == "dot")
        result.out = export_dot(aa);
      else
        result.out = detail::aa_text_summary(aa);
    } else if (cmd_tab->parsed()) {
      if (original && optimized)
        throw std::invalid_argument("choose one of --original/--optimized");
      Formula f = parse(formula_text);
      if (original) {
        OriginalTableau t = build_original(f);
        if (json_flag || format == "json")
          result.out = export_tableau_json(t);
        else if (format == "dot")
          result.out = export_tableau_dot(t);
        else
          result.out = detail::tableau_text_summary(t);
      } else {
        TableauGraph g = eliminate(build_optimized(f));
        if (json_flag || format == "json")
          result.out = export_tableau_json(g);
        else if (format == "dot")
          result.out = export_tableau_dot(g);
        else
          result.out = detail::tableau_text_summary(g);
      }
    } else if (cmd_sat->parsed()) {
      Verdict v = is_satisfiable(parse(formula_text));
      if (json_flag) {
        nlohmann::json j;
        j["satisfiable"] = v.satisfiable;
        if (v.witness) j["witness"] = to_string(*v.witness);
        result.out = j.dump(2) + "\n";
      } else {
        result.out = v.satisfiable ? "SAT\n" + to_string(*v.witness) + "\n" : "UNSAT\n";
      }
      result.exit_code = v.satisfiable ? 0 : 1;
    } else if (cmd_eval->parsed()) {
      bool value = eval_lasso(parse(formula_text), parse_lasso(lasso_text));
      if (json_flag)
        result.out = nlohmann::json{{"value", value}}.dump(2) + "\n";
      else
        result.out = value ? "true\n" : "false\n";
    } else if (cmd_cross->parsed()) {
      if (count < 1) throw std::invalid_argument("crosscheck: --count must be >= 1");
      CrosscheckOptions options;
      options.seed = seed;
      options.count = count;
      options.max_size = max_size;
      CrosscheckReport report = run_crosscheck(options);
      for (const auto& p : report.properties)
        result.out += p.name + ": " + std::to_string(p.runs - p.failures) + "/" +
                      std::to_string(p.runs) + "\n";
      result.out += "cases: " + std::to_string(report.cases) + "\n";
      for (const auto& d : report.failure_details) result.out += "failure: " + d + "\n";
      result.exit_code = report.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 2;
    return result;
  }
  return result;
}

}  // namespace ltlf
