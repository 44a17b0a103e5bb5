// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 3 6        run only criteria 3 and 6

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eg/calculus.hpp"
#include "eg/cli.hpp"
#include "eg/continuum.hpp"
#include "eg/notation.hpp"
#include "eg/render.hpp"
#include "eg/search.hpp"
#include "eg/semantics.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "svg_check.hpp"

using namespace eg;
using namespace eg::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures; a criterion passes when none were recorded and it
// finished within its time limit.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

Graph ig(const std::string& t) { return parse_graph(t, Dialect::Intuitionistic); }
Graph cg(const std::string& t) { return parse_graph(t, Dialect::Classical); }

const char* rule_name(std::size_t kind) {
  static const char* names[] = {"erase",  "insert", "iterate",  "deiterate",
                                "dcadd",  "dcremove", "wrap",   "unwrap",
                                "loopadd", "loopremove", "detach"};
  return names[kind];
}

// --- 1 ------------------------------------------------------------------------

void table_corpus(Outcome& o) {
  struct Row {
    const char* name;
    const char* script;
  };
  const Row valid[] = {
      {"double cut out", "system classical\ngraph ((p))\ndcremove 0\nexpect p\n"},
      {"double cut in", "system classical\ngraph p\ndcadd / items 0\nexpect ((p))\n"},
      {"erase", "system classical\ngraph p q\nerase 1\nexpect p\n"},
      {"insert", "system classical\ngraph (p)\ninsert 0.outer q\nexpect (p q)\n"},
      {"iterate", "system classical\ngraph p (q)\niterate 0 -> 1.outer\nexpect p (p q)\n"},
      {"deiterate",
       "system classical\ngraph p (p q)\ndeiterate 1.outer.0 witness 0\nexpect p (q)\n"},
  };
  for (const auto& r : valid) {
    CheckReport rep = check_script(parse_script(r.script));
    o.expect(rep.valid(), std::string(r.name) + ": " + rep.reason);
  }

  struct Misuse {
    const char* name;
    const char* script;
    IllegalRule::Reason reason;
  };
  using R = IllegalRule::Reason;
  const Misuse misuses[] = {
      {"erase in odd area", "system classical\ngraph (p q)\nerase 0.outer.1\n", R::WrongPolarity},
      {"insert in even area", "system classical\ngraph p\ninsert / q\n", R::WrongPolarity},
      {"insert in even area (nested)", "system classical\ngraph ((p))\ninsert 0.outer.0.outer q\n",
       R::WrongPolarity},
      {"erase iterated copy in odd area",
       "system classical\ngraph p (p q)\nerase 1.outer.0\n", R::WrongPolarity},
      {"double cut with full donut", "system classical\ngraph ((p) q)\ndcremove 0\n",
       R::DonutNotEmpty},
      {"iterate outward", "system classical\ngraph (p) q\niterate 0.outer.0 -> /\n",
       R::BadTarget},
      {"deiterate without witness", "system classical\ngraph q (p)\ndeiterate 1.outer.0 witness 0\n",
       R::BadWitness},
  };
  for (const auto& m : misuses) {
    ProofScript ps = parse_script(m.script);
    CheckReport rep = check_script(ps);
    bool reason_ok = false;
    try {
      apply_rule(ps.system, ps.start, ps.steps.at(0).rule);
    } catch (const IllegalRule& e) {
      reason_ok = e.reason() == m.reason;
    }
    o.expect(rep.failure == CheckReport::Failure::IllegalRule && reason_ok,
             std::string(m.name) + " was not rejected as expected");
  }
  o.note(std::to_string(std::size(valid)) + " scripts checked, " +
         std::to_string(std::size(misuses)) + " misuses rejected");
}

// --- 2, 3 -----------------------------------------------------------------------

void soundness(Outcome& o, System s, std::uint64_t seed) {
  const Dialect d = dialect_of(s);
  const Logic logic = logic_of(d);
  Rng rng(seed);
  GraphShape shape;
  shape.dialect = d;
  shape.atoms = 4;
  shape.max_depth = 4;
  GraphShape small = shape;
  small.max_depth = 2;
  small.max_items = 2;

  std::map<std::size_t, int> per_kind;
  int applied = 0, failures = 0;
  while (applied < 10000) {
    Graph g = random_graph(rng, shape);
    std::vector<Graph> vocab{random_graph(rng, small), random_graph(rng, small)};
    auto areas = all_areas(g);
    vocab.push_back(resolve_area(
        g, areas[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(areas.size()) - 1))]));
    auto r = random_rule(rng, s, g, vocab);
    if (!r) continue;
    Graph h = apply_rule(s, g, *r);
    ++applied;
    ++per_kind[r->index()];
    if (!well_formed(h, d).empty()) {
      o.expect(false, "ill-formed result of " + print_rule(*r));
      continue;
    }
    Formula claim = Formula::imp(graph_to_formula(g), graph_to_formula(h));
    if (!taut(logic, claim)) {
      if (++failures <= 5)
        o.expect(false, "unsound: " + print_graph(g) + "  --" + print_rule(*r) + "-->  " +
                            print_graph(h));
    }
  }
  std::string kinds;
  for (const auto& [k, n] : per_kind) kinds += std::string(" ") + rule_name(k) + "=" + std::to_string(n);
  o.note(std::to_string(applied) + " applications, " + std::to_string(failures) +
         " failures;" + kinds);

  const std::vector<std::size_t> required =
      s == System::Classical ? std::vector<std::size_t>{0, 1, 2, 3, 4, 5}
                             : std::vector<std::size_t>{0, 1, 2, 3, 6, 7, 8, 9, 10};
  for (auto k : required)
    o.expect(per_kind[k] > 0, std::string("rule never exercised: ") + rule_name(k));
}

// --- 4 ------------------------------------------------------------------------

void separation(Outcome& o) {
  for (const char* f : {"p | ~p", "~~p -> p", "((p -> q) -> p) -> p", "~(p & q) -> (~p | ~q)"}) {
    Formula x = parse_formula(f);
    o.expect(taut_classical(x), std::string("not classical: ") + f);
    o.expect(!taut_int(x), std::string("intuitionistic: ") + f);
  }
  for (const char* f : {"p -> ~~p", "~~(p | ~p)", "(~p | ~q) -> ~(p & q)",
                        "~(p | q) -> (~p & ~q)", "(~p & ~q) -> ~(p | q)"}) {
    o.expect(taut_int(parse_formula(f)), std::string("not intuitionistic: ") + f);
  }
}

// --- 5 ------------------------------------------------------------------------

void one_way(Outcome& o) {
  const Formula imp = parse_formula("p -> q"), neg = parse_formula("~(p & ~q)");
  o.expect(entails(Logic::Intuitionistic, imp, neg), "p -> q does not entail ~(p & ~q)");
  o.expect(!entails(Logic::Intuitionistic, neg, imp), "~(p & ~q) entails p -> q");

  Rng rng(55);
  GraphShape shape;
  int even_scrolls = 0, detaches = 0;
  for (int n = 0; n < 300; ++n) {
    Graph g = random_graph(rng, shape);
    auto rules = enumerate_rule_instances(System::Intuitionistic, g, {});
    std::set<Path> detachable;
    for (const auto& r : rules) {
      if (auto* d = std::get_if<rule::Detach>(&r)) {
        ++detaches;
        detachable.insert(d->item);
        o.expect(item_polarity(g, d->item) == Polarity::Even,
                 "detach enumerated in an odd area of " + print_graph(g));
      }
    }
    for (const auto& ip : all_items(g)) {
      const Item& it = resolve_item(g, ip);
      if (!it.is_scroll() || it.loops.size() != 1) continue;
      if (item_polarity(g, ip) == Polarity::Even) {
        ++even_scrolls;
        o.expect(detachable.count(ip) == 1, "even scroll not detachable in " + print_graph(g));
      } else {
        bool rejected = false;
        try {
          apply_rule(System::Intuitionistic, g, rule::Detach{ip});
        } catch (const IllegalRule& e) {
          rejected = e.reason() == IllegalRule::Reason::WrongPolarity;
        }
        o.expect(rejected, "detach accepted in an odd area of " + print_graph(g));
      }
    }
  }
  o.expect(detaches > 0 && detaches == even_scrolls, "detach enumeration count mismatch");

  const Formula converse = Formula::imp(neg, imp);
  auto m = kripke_countermodel(converse, 3);
  o.expect(m.has_value(), "no countermodel with at most 3 worlds");
  if (m) {
    o.expect(m->worlds <= 3 && m->persistent() && m->is_preorder(), "malformed countermodel");
    o.expect((forcing_set(*m, converse) & 1u) == 0, "countermodel does not refute the converse");
    o.note("countermodel " + print_kripke(*m));
  }
  o.note(std::to_string(detaches) + " detach instances over 300 graphs");
}

// --- 6 ------------------------------------------------------------------------

void derivations(Outcome& o) {
  struct Goal {
    System s;
    const char* formula;
    bool derivable;
  };
  const Goal goals[] = {
      {System::Classical, "p -> p", true},
      {System::Classical, "((p->q)->p)->p", true},
      {System::Classical, "~~p -> p", true},
      {System::Classical, "p & q -> p", true},
      {System::Intuitionistic, "p -> p", true},
      {System::Intuitionistic, "p -> (q -> p)", true},
      {System::Intuitionistic, "p -> ~~p", true},
      {System::Intuitionistic, "~~(p | ~p)", true},
      {System::Intuitionistic, "F -> q", true},
      {System::Intuitionistic, "p | ~p", false},
  };
  for (const auto& g : goals) {
    const Dialect d = dialect_of(g.s);
    const std::string goal = print_graph(formula_to_graph(parse_formula(g.formula), d));
    const std::string label = to_string(g.s) + " " + g.formula;
    std::ostringstream out, err;
    auto t0 = Clock::now();
    int code = cli::run({"prove", "--system", to_string(g.s), "--goal", goal, "--depth", "12"},
                        out, err);
    const double secs = seconds_since(t0);
    o.expect(secs < 60, label + " took " + std::to_string(secs) + " s");
    if (!g.derivable) {
      o.expect(code == 1 && out.str() == "no derivation within depth 12\n",
               label + ": expected no derivation");
      continue;
    }
    if (code != 0) {
      o.expect(false, label + ": no derivation (" + err.str() + ")");
      continue;
    }
    ProofScript ps = parse_script(out.str());
    CheckReport rep = check_script(ps);
    o.expect(rep.valid() && equals(rep.final_graph, parse_graph(goal, d)),
             label + ": script does not check");
    o.expect(ps.steps.size() <= 12, label + ": script longer than 12 steps");
    o.expect(taut(logic_of(d), graph_to_formula(rep.final_graph)),
             label + ": derived graph is not valid");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu steps in %.2f s", ps.steps.size(), secs);
    o.note(label + ": " + buf);
  }
}

// --- 7 ------------------------------------------------------------------------

void cross_validation(Outcome& o) {
  Rng rng(77);
  int theorems = 0, countermodels = 0, v1 = 0, v2 = 0;
  for (int n = 0; n < 2000; ++n) {
    Formula f = random_formula(rng, 3, uniform(rng, 0, 8));
    const bool ti = taut_int(f);
    const bool tc = taut_classical(f);
    if (ti) {
      ++theorems;
      if (!tc && ++v1 <= 5) o.expect(false, "intuitionistic but not classical: " + print_formula(f));
    }
    auto m = kripke_countermodel(f, 4);
    if (m) {
      ++countermodels;
      if (ti && ++v2 <= 5) o.expect(false, "theorem with a countermodel: " + print_formula(f));
      o.expect(m->persistent() && (forcing_set(*m, f) & 1u) == 0,
               "countermodel does not refute " + print_formula(f));
    }
  }
  o.expect(v1 == 0 && v2 == 0, "violations: " + std::to_string(v1) + " + " + std::to_string(v2));
  o.note(std::to_string(theorems) + " theorems, " + std::to_string(countermodels) +
         " countermodels among 2000 formulas");
}

// --- 8 ------------------------------------------------------------------------

// An element over the given domain, split at random points.
ContinuumElement element_over(Rng& rng, const std::vector<Ordinal>& lens) {
  ContinuumElement e;
  for (const auto& l : lens) e.pieces.push_back({l, random_rational(rng)});
  return elem_canonicalize(e);
}

void continuum(Outcome& o) {
  Rng rng(88);
  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok && ++failures <= 5) o.expect(false, what);
  };
  for (int n = 0; n < 10000; ++n) {
    auto x = random_element(rng), a = random_element(rng), b = random_element(rng);
    auto c = random_element(rng);
    // Chains and unrelated elements both occur.
    auto y = n % 2 ? concat(x, a) : a;
    auto z = n % 3 ? concat(y, b) : b;
    const std::string at = " at " + print_element(x) + " " + print_element(y) + " " +
                           print_element(z);

    check(!extends(x, x) && !extends(y, y), "E not irreflexive" + at);
    check(!(extends(x, y) && extends(y, x)), "E not asymmetric" + at);
    if (extends(z, y) && extends(y, x)) check(extends(z, x), "E not transitive" + at);

    // Equal domains compare totally.
    std::vector<Ordinal> lens;
    for (int k = uniform(rng, 1, 4); k > 0; --k) lens.push_back(random_ordinal(rng, false));
    auto u = element_over(rng, lens), v = element_over(rng, lens);
    const LexRelation uv = lex_compare(u, v), vu = lex_compare(v, u);
    check(uv == LexRelation::Less || uv == LexRelation::Equal || uv == LexRelation::Greater,
          "lex not total on equal domains");
    check((uv == LexRelation::Less) == (vu == LexRelation::Greater) &&
              (uv == LexRelation::Equal) == (u == v),
          "lex not antisymmetric");

    // Round trips through the monad.
    auto xa = concat(x, a), xb = concat(x, b);
    check(extends(xa, x), "concat does not extend" + at);
    check(tail(x, xa) == a, "tail(x, concat(x, a)) != a" + at);
    check(concat(x, tail(x, xa)) == xa, "concat(x, tail(x, y)) != y" + at);

    // The monad map preserves E and the order.
    auto xc = n % 2 ? concat(xa, c) : concat(x, c);
    check(extends(xa, xb) == extends(tail(x, xa), tail(x, xb)), "E not preserved" + at);
    check(extends(xc, xa) == extends(tail(x, xc), tail(x, xa)), "E not preserved" + at);
    check(lex_compare(xa, xb) == lex_compare(tail(x, xa), tail(x, xb)),
          "lex not preserved" + at);
    check(lex_compare(xc, xa) == lex_compare(tail(x, xc), tail(x, xa)),
          "lex not preserved" + at);

    // Distinct rationals give distinct immediate descendants.
    auto q1 = random_rational(rng), q2 = random_rational(rng);
    auto d1 = concat(x, ContinuumElement{{{Ordinal::nat(1), q1}}});
    auto d2 = concat(x, ContinuumElement{{{Ordinal::nat(1), q2}}});
    check(extends(d1, x) && ((q1 == q2) == (d1 == d2)), "descendants not injective" + at);
  }

  // Ordinals below w^3 against the triple model, exhaustively.
  const auto all = all_small(4);
  std::size_t pairs = 0;
  for (const auto& p : all) {
    for (const auto& q : all) {
      ++pairs;
      const Ordinal a = to_ordinal(p), b = to_ordinal(q);
      check(ord_cmp(a, b) == (p <=> q), "ord_cmp disagrees");
      check(ord_add(a, b) == to_ordinal(small_add(p, q)), "ord_add disagrees");
      if (p <= q) {
        auto g = small_sub_left(p, q, all);
        check(g && ord_sub_left(a, b) == to_ordinal(*g), "ord_sub_left disagrees");
      } else {
        bool underflow = false;
        try {
          ord_sub_left(a, b);
        } catch (const Underflow&) {
          underflow = true;
        }
        check(underflow, "ord_sub_left did not underflow");
      }
    }
  }
  o.expect(failures == 0, std::to_string(failures) + " failures");
  o.note("10000 element rounds, " + std::to_string(pairs) + " ordinal pairs");
}

// --- 9 ------------------------------------------------------------------------

void round_trips(Outcome& o) {
  Rng rng(99);
  int failures = 0;
  for (int n = 0; n < 10000; ++n) {
    GraphShape shape;
    shape.dialect = n % 2 ? Dialect::Intuitionistic : Dialect::Classical;
    shape.max_depth = uniform(rng, 0, 5);
    Graph g = random_graph(rng, shape);
    if (parse_graph(print_graph(g), shape.dialect) != g && ++failures <= 5)
      o.expect(false, "graph: " + print_graph(g));

    Formula f = random_formula(rng, 4, uniform(rng, 0, 12));
    if (!(parse_formula(print_formula(f)) == f) && ++failures <= 5)
      o.expect(false, "formula: " + print_formula(f));

    auto e = random_element(rng);
    const std::string et = print_element(e);
    if (!(parse_element(et) == e && print_element(parse_element(et)) == et) && ++failures <= 5)
      o.expect(false, "element: " + et);

    Ordinal a = random_ordinal(rng);
    if (!(parse_ordinal(print_ordinal(a)) == a) && ++failures <= 5)
      o.expect(false, "ordinal: " + print_ordinal(a));
  }
  o.expect(failures == 0, std::to_string(failures) + " failures");
  o.note("10000 graphs, formulas, elements and ordinals");
}

// --- 10 -----------------------------------------------------------------------

void rendering(Outcome& o) {
  std::vector<Graph> corpus;
  for (const char* t : {"", "p", "(p)", "((p))", "(((p)))", "((p q) r)", "p (q)",
                        "p (p q)", "(p (q))", "((p) (q))", "(())", "((()))",
                        "(((p)) ((q)))", "p q r s"})
    corpus.push_back(cg(t));
  for (const char* t : {"[p | q]", "[p | q | r]", "[ | p | q]", "[p |]", "[ | ]",
                        "[[p | q] | [q | p]]", "([p | q])", "[p | (q (r))]",
                        "[(p) | [ | q | (q)]]", "[a b c | d | e f g | h]"})
    corpus.push_back(ig(t));
  Rng rng(1010);
  while (corpus.size() < 50) {
    GraphShape shape;
    shape.dialect = corpus.size() % 2 ? Dialect::Intuitionistic : Dialect::Classical;
    shape.max_loops = 3;
    corpus.push_back(random_graph(rng, shape));
  }
  int ellipses = 0;
  for (const auto& g : corpus) {
    const std::string svg = render_svg(g);
    for (const auto& p : check_svg(g, svg)) o.expect(false, print_graph(g) + ": " + p);
    o.expect(render_svg(g) == svg, "output differs between runs: " + print_graph(g));
    for (auto at = svg.find("<ellipse"); at != std::string::npos; at = svg.find("<ellipse", at + 1))
      ++ellipses;
  }
  o.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(ellipses) + " ellipses");
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "table corpus", 1, table_corpus},
      {2, "rule soundness, classical", 120,
       [](Outcome& o) { soundness(o, System::Classical, 2002); }},
      {3, "rule soundness, intuitionistic", 600,
       [](Outcome& o) { soundness(o, System::Intuitionistic, 3003); }},
      {4, "classical/intuitionistic separation", 1, separation},
      {5, "one-way passage", 1, one_way},
      {6, "derivation search", 12 * 60, derivations},
      {7, "oracle cross-validation", 300, cross_validation},
      {8, "continuum properties", 60, continuum},
      {9, "parser/printer round trips", 30, round_trips},
      {10, "renderer", 5, rendering},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (secs >= c.limit_seconds)
      o.expect(false, "took " + std::to_string(secs) + " s, limit " +
                          std::to_string(c.limit_seconds) + " s");
    const bool pass = o.failures.empty();
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", c.id, c.title, secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    for (const auto& f : o.failures) std::printf("    failure: %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
