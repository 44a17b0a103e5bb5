#include "eg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "eg/calculus.hpp"
#include "eg/continuum.hpp"
#include "eg/notation.hpp"
#include "eg/render.hpp"
#include "eg/search.hpp"
#include "eg/semantics.hpp"

namespace eg::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Input problems detected after option parsing (missing file, bad arity).
struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  const char* ws = " \t\r\n";
  s.erase(s.find_last_not_of(ws) + 1);
  s.erase(0, s.find_first_not_of(ws));
  return s;
}

// The text operand: positional argument or --file contents.
struct TextInput {
  std::string text;
  std::string file;

  void attach(CLI::App* cmd, const std::string& name) {
    cmd->add_option(name, text, "Input text");
    cmd->add_option("--file", file, "Read the input text from a file");
  }
  std::string get() const {
    if (!file.empty()) {
      if (!text.empty()) throw UsageError("give the input as an argument or --file, not both");
      return trim(read_file(file));
    }
    return text;
  }
};

Logic parse_logic(const std::string& s) {
  return parse_dialect(s) == Dialect::Classical ? Logic::Classical
                                                : Logic::Intuitionistic;
}

std::optional<Assignment> falsifying_assignment(const Formula& f) {
  const auto atoms = f.atoms();
  if (atoms.size() > kMaxTruthTableAtoms)
    throw TooManyAtoms("formula has " + std::to_string(atoms.size()) + " atoms");
  const std::vector<std::string> names(atoms.begin(), atoms.end());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << names.size()); ++bits) {
    Assignment a;
    for (std::size_t i = 0; i < names.size(); ++i) a[names[i]] = (bits >> i) & 1;
    if (!eval_classical(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Existential graphs: parse, check, prove, decide, render"};
  app.name("eg");
  app.require_subcommand(1);

  std::function<int()> action;

  // parse
  auto* parse = app.add_subcommand("parse", "Print the canonical form of a graph");
  std::string parse_dialect_text;
  TextInput parse_in;
  parse->add_option("--dialect", parse_dialect_text, "classical|intuitionistic")->required();
  parse_in.attach(parse, "graph");
  parse->callback([&] {
    action = [&] {
      Graph g = parse_graph(parse_in.get(), parse_dialect(parse_dialect_text));
      out << print_graph(canonicalize(g)) << "\n";
      return kOk;
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Check a proof script");
  std::string script_file;
  check->add_option("script", script_file, "Script file")->required();
  check->callback([&] {
    action = [&] {
      ProofScript ps = parse_script(read_file(script_file));
      CheckReport rep = check_script(ps);
      if (rep.failure == CheckReport::Failure::IllFormedStart) {
        out << "invalid start graph: " << rep.reason << "\n";
        return kNegative;
      }
      for (std::size_t i = 0; i < rep.trace.size(); ++i)
        out << "step " << i + 1 << ": " << print_rule(ps.steps[i].rule)
            << "  =>  " << print_graph(rep.trace[i]) << "\n";
      if (!rep.valid()) {
        out << "step " << *rep.failed_step + 1 << ": "
            << print_rule(ps.steps[*rep.failed_step].rule) << "\n"
            << "invalid at step " << *rep.failed_step + 1 << ": " << rep.reason
            << "\n";
        return kNegative;
      }
      out << "valid (" << ps.steps.size() << " steps): "
          << print_graph(rep.final_graph) << "\n";
      return kOk;
    };
  });

  // prove
  auto* prove = app.add_subcommand("prove", "Search for a derivation");
  std::string system_text, goal_text, from_text, goal_file;
  int depth = 12;
  std::size_t max_visited = SearchBounds{}.max_visited;
  prove->add_option("--system", system_text, "classical|intuitionistic")->required();
  prove->add_option("--goal", goal_text, "Goal graph");
  prove->add_option("--file", goal_file, "Read the goal graph from a file");
  prove->add_option("--from", from_text, "Start graph (default: blank sheet)");
  prove->add_option("--depth", depth, "Maximum derivation length")
      ->check(CLI::NonNegativeNumber);
  prove->add_option("--max-visited", max_visited, "Maximum states expanded");
  prove->callback([&] {
    action = [&] {
      if (goal_text.empty() == goal_file.empty())
        throw UsageError("give exactly one of --goal and --file");
      const System s = parse_system(system_text);
      const Dialect d = dialect_of(s);
      Graph goal = parse_graph(goal_file.empty() ? goal_text : trim(read_file(goal_file)), d);
      Graph from = parse_graph(from_text, d);
      SearchBounds b;
      b.max_depth = depth;
      b.max_visited = max_visited;
      auto ps = derive(s, from, goal, b);
      if (!ps) {
        out << "no derivation within depth " << depth << "\n";
        return kNegative;
      }
      out << print_script(*ps);
      return kOk;
    };
  });

  // taut
  auto* taut_cmd = app.add_subcommand("taut", "Decide a formula");
  std::string logic_text;
  TextInput taut_in;
  bool want_countermodel = false;
  int max_worlds = 4;
  taut_cmd->add_option("--logic", logic_text, "classical|intuitionistic")->required();
  taut_cmd->add_flag("--countermodel", want_countermodel,
                     "Show a falsifying assignment or Kripke model");
  taut_cmd->add_option("--max-worlds", max_worlds, "Largest Kripke model tried")
      ->check(CLI::Range(1, 5));
  taut_in.attach(taut_cmd, "formula");
  taut_cmd->callback([&] {
    action = [&] {
      const Logic logic = parse_logic(logic_text);
      Formula f = parse_formula(taut_in.get());
      const bool valid = taut(logic, f);
      const bool classical = logic == Logic::Classical;
      if (valid) {
        out << (classical ? "tautology" : "theorem") << "\n";
        return kOk;
      }
      out << (classical ? "not a tautology" : "not a theorem") << "\n";
      if (want_countermodel) {
        if (classical) {
          auto a = falsifying_assignment(f);
          std::string line = "assignment:";
          for (const auto& [atom, v] : *a) line += " " + atom + "=" + (v ? "1" : "0");
          out << line << "\n";
        } else if (auto m = kripke_countermodel(f, max_worlds)) {
          out << print_kripke(*m) << "\n";
        } else {
          out << "no countermodel with at most " << max_worlds << " worlds\n";
        }
      }
      return kNegative;
    };
  });

  // translate
  auto* translate = app.add_subcommand("translate", "Convert between graphs and formulas");
  std::string to_text, tr_dialect_text;
  TextInput tr_in;
  translate->add_option("--to", to_text, "formula|graph")
      ->required()
      ->check(CLI::IsMember({"formula", "graph"}));
  translate->add_option("--dialect", tr_dialect_text, "classical|intuitionistic")->required();
  tr_in.attach(translate, "text");
  translate->callback([&] {
    action = [&] {
      const Dialect d = parse_dialect(tr_dialect_text);
      if (to_text == "formula")
        out << print_formula(graph_to_formula(parse_graph(tr_in.get(), d))) << "\n";
      else
        out << print_graph(formula_to_graph(parse_formula(tr_in.get()), d)) << "\n";
      return kOk;
    };
  });

  // render
  auto* render = app.add_subcommand("render", "Draw a graph as SVG");
  std::string svg_path, render_dialect_text = "intuitionistic";
  TextInput render_in;
  render->add_option("-o,--output", svg_path, "Output file (default: stdout)");
  render->add_option("--dialect", render_dialect_text, "classical|intuitionistic");
  render_in.attach(render, "graph");
  render->callback([&] {
    action = [&] {
      const std::string svg =
          render_svg(parse_graph(render_in.get(), parse_dialect(render_dialect_text)));
      if (svg_path.empty()) {
        out << svg;
        return kOk;
      }
      std::ofstream f(svg_path, std::ios::binary);
      if (!(f << svg)) throw UsageError("cannot write " + svg_path);
      return kOk;
    };
  });

  // continuum
  auto* cont = app.add_subcommand("continuum", "Ordinal-indexed sequences");
  std::string op;
  std::string first_elem, second_elem;
  std::string cont_file;
  cont->add_option("op", op, "cmp|extends|tail|concat|domain")
      ->required()
      ->check(CLI::IsMember({"cmp", "extends", "tail", "concat", "domain"}));
  cont->add_option("first", first_elem, "Element literal");
  cont->add_option("second", second_elem, "Element literal");
  cont->add_option("--file", cont_file, "Read element literals from a file, one per line");
  cont->callback([&] {
    action = [&] {
      std::vector<std::string> elems;
      for (const auto* s : {&first_elem, &second_elem})
        if (!s->empty()) elems.push_back(*s);
      if (!cont_file.empty()) {
        std::istringstream in(read_file(cont_file));
        for (std::string line; std::getline(in, line);)
          if (!trim(line).empty()) elems.push_back(trim(line));
      }
      const std::size_t want = op == "domain" ? 1 : 2;
      if (elems.size() != want)
        throw UsageError("continuum " + op + " takes " + std::to_string(want) +
                         (want == 1 ? " element" : " elements"));
      std::vector<ContinuumElement> e;
      for (const auto& s : elems) e.push_back(parse_element(s));
      if (op == "cmp") {
        out << to_string(lex_compare(e[0], e[1])) << "\n";
      } else if (op == "extends") {
        const bool r = extends(e[0], e[1]);
        out << (r ? "true" : "false") << "\n";
        return r ? kOk : kNegative;
      } else if (op == "tail") {
        out << print_element(tail(e[0], e[1])) << "\n";
      } else if (op == "concat") {
        out << print_element(concat(e[0], e[1])) << "\n";
      } else {
        out << print_ordinal(elem_domain(e[0])) << "\n";
      }
      return kOk;
    };
  });

  std::vector<const char*> argv{"eg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action();
  } catch (const BoundsExceeded& e) {
    err << "eg: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    err << "eg: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace eg::cli
