#include <doctest.h>

#include <algorithm>

#include "eg/calculus.hpp"
#include "eg/notation.hpp"
#include "eg/semantics.hpp"
#include "generators.hpp"

using namespace eg;
using namespace eg::rule;

namespace {

Graph ig(const char* t) { return parse_graph(t, Dialect::Intuitionistic); }
Graph cg(const char* t) { return parse_graph(t, Dialect::Classical); }
Path P(const char* t) { return parse_path(t); }

constexpr System C = System::Classical;
constexpr System I = System::Intuitionistic;

IllegalRule::Reason reason_of(System s, const Graph& g, const RuleInstance& r) {
  try {
    apply_rule(s, g, r);
  } catch (const IllegalRule& e) {
    return e.reason();
  }
  FAIL("rule was accepted: " << print_rule(r));
  return IllegalRule::Reason::NotApplicable;
}

bool contains(const std::vector<RuleInstance>& rs, const std::string& printed) {
  return std::any_of(rs.begin(), rs.end(),
                     [&](const RuleInstance& r) { return print_rule(r) == printed; });
}

}  // namespace

TEST_CASE("classical rule applications") {
  CHECK(apply_rule(C, cg("p q"), Erase{P("1")}) == cg("p"));
  CHECK(equals(apply_rule(C, cg("(p)"), Insert{P("0.outer"), cg("q")}), cg("(p q)")));
  CHECK(equals(apply_rule(C, cg("p (q)"), Iterate{P("0"), P("1.outer")}), cg("p (q p)")));
  CHECK(apply_rule(C, cg("((p))"), DoubleCutElim{P("0")}) == cg("p"));
  CHECK(apply_rule(C, cg("p q"), DoubleCutIntro{P("/"), {0, 1}}) == cg("((p q))"));
  CHECK(apply_rule(C, cg("p q r"), DoubleCutIntro{P("/"), {1}}) == cg("p ((q)) r"));
  CHECK(apply_rule(C, cg(""), DoubleCutIntro{P("/"), {}}) == cg("(())"));
  CHECK(apply_rule(C, cg("p (p q)"), Deiterate{P("1.outer.0"), P("0")}) == cg("p (q)"));
  CHECK(equals(apply_rule(C, cg("(p) q"), Iterate{P("1"), P("/")}), cg("(p) q q")));
}

TEST_CASE("intuitionistic rule applications") {
  CHECK(apply_rule(I, ig("()"), LoopAdd{P("0"), ig("q")}) == ig("[ | q]"));
  CHECK(apply_rule(I, ig("[p | q]"), Detach{P("0")}) == ig("(p (q))"));
  CHECK(apply_rule(I, ig("p q"), ScrollWrap{P("/"), {0, 1}}) == ig("[ | p q]"));
  CHECK(apply_rule(I, ig("[ | p q] r"), ScrollUnwrap{P("0")}) == ig("p q r"));
  CHECK(apply_rule(I, ig("([p | q | r])"), LoopRemove{P("0.outer.0"), 1}) == ig("([p | q])"));
  CHECK(equals(apply_rule(I, ig("p [q | r]"), Iterate{P("0"), P("1.loop0")}),
               ig("p [q | r p]")));
}

TEST_CASE("illegal applications are rejected with a reason") {
  using R = IllegalRule::Reason;
  CHECK(reason_of(C, cg("(p q)"), Erase{P("0.outer.1")}) == R::WrongPolarity);
  CHECK(reason_of(C, cg("p"), Insert{P("/"), cg("q")}) == R::WrongPolarity);
  CHECK(reason_of(C, cg("(p q)"), DoubleCutElim{P("0")}) == R::NotApplicable);
  CHECK(reason_of(C, cg("((p) q)"), DoubleCutElim{P("0")}) == R::DonutNotEmpty);
  CHECK(reason_of(C, cg("p"), ScrollWrap{P("/"), {0}}) == R::WrongSystem);
  CHECK(reason_of(I, ig("((p))"), DoubleCutElim{P("0")}) == R::WrongSystem);
  CHECK(reason_of(C, cg("p"), Erase{P("3")}) == R::InvalidPath);
  CHECK(reason_of(C, cg("p (q)"), Deiterate{P("0"), P("1.outer.0")}) == R::BadWitness);
  CHECK(reason_of(C, cg("p (p)"), Deiterate{P("0"), P("0")}) == R::BadWitness);
  CHECK(reason_of(C, cg("(p) q"), Iterate{P("0"), P("0.outer")}) == R::BadTarget);
  CHECK(reason_of(I, ig("([p | q])"), Detach{P("0.outer.0")}) == R::WrongPolarity);
  CHECK(reason_of(I, ig("[p | q | r]"), Detach{P("0")}) == R::NotApplicable);
  CHECK(reason_of(I, ig("[p | q]"), LoopRemove{P("0"), 0}) == R::WrongPolarity);
  CHECK(reason_of(I, ig("([p | q])"), LoopAdd{P("0.outer.0"), ig("r")}) == R::WrongPolarity);
  CHECK(reason_of(I, ig("[p | q]"), ScrollUnwrap{P("0")}) == R::NotApplicable);
}

TEST_CASE("enumeration respects polarity gates") {
  RuleBounds b;
  b.vocabulary = {cg("p")};
  auto blank = enumerate_rule_instances(C, Graph{}, b);
  CHECK(contains(blank, "dcadd / items"));
  CHECK(std::none_of(blank.begin(), blank.end(), [](const RuleInstance& r) {
    return std::holds_alternative<Erase>(r);
  }));

  auto pq = enumerate_rule_instances(C, cg("p q"), b);
  CHECK(contains(pq, "erase 0"));
  CHECK(contains(pq, "erase 1"));
  CHECK(contains(pq, "iterate 0 -> /"));
  CHECK(contains(pq, "dcadd / items 0,1"));

  auto sc = enumerate_rule_instances(I, ig("[p | q]"), b);
  CHECK(contains(sc, "loopadd 0 p"));
  CHECK(std::none_of(sc.begin(), sc.end(), [](const RuleInstance& r) {
    return std::holds_alternative<LoopRemove>(r);
  }));
  CHECK(contains(sc, "detach 0"));
  auto odd = enumerate_rule_instances(I, ig("([p | q])"), b);
  CHECK(std::none_of(odd.begin(), odd.end(), [](const RuleInstance& r) {
    return std::holds_alternative<Detach>(r);
  }));
  CHECK(contains(odd, "loopremove 0.outer.0 0"));
}

TEST_CASE("scripts") {
  SUBCASE("iteration with expectation") {
    auto ps = parse_script(
        "system classical\n"
        "graph p (q)\n"
        "iterate 0 -> 1.outer\n"
        "expect p (p q)\n");
    CHECK(check_script(ps).valid());
  }
  SUBCASE("three-step derivation of p -> p") {
    auto ps = parse_script(
        "# p -> p from the blank sheet\n"
        "system classical\n"
        "graph\n"
        "dcadd / items\n"
        "insert 0.outer p\n"
        "iterate 0.outer.0 -> 0.outer.1.outer\n");
    auto rep = check_script(ps);
    CHECK(rep.valid());
    CHECK(equals(rep.final_graph, cg("(p (p))")));
    CHECK(rep.trace.size() == 3);
  }
  SUBCASE("expectation mismatch") {
    auto ps = parse_script("system classical\ngraph p q\nerase 0\nexpect p\n");
    auto rep = check_script(ps);
    CHECK(rep.failure == CheckReport::Failure::ExpectationMismatch);
    CHECK(rep.failed_step == 0u);
    CHECK(equals(rep.final_graph, cg("q")));
  }
  SUBCASE("illegal step") {
    auto ps = parse_script("system classical\ngraph (p q)\nerase 0\nerase 0.outer.0\n");
    auto rep = check_script(ps);
    CHECK(rep.failure == CheckReport::Failure::IllegalRule);
    CHECK(rep.failed_step == 1u);
  }
  SUBCASE("ill-formed start") {
    ProofScript ps{C, ig("[p | q]"), {}};
    CHECK(check_script(ps).failure == CheckReport::Failure::IllFormedStart);
  }
  SUBCASE("syntax errors") {
    CHECK_THROWS_AS(parse_script("graph p\n"), SyntaxError);
    CHECK_THROWS_AS(parse_script("system classical\nerase 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_script("system classical\ngraph p\nfrobnicate 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_script("system classical\ngraph p\nexpect p\n"), SyntaxError);
    CHECK_THROWS_AS(parse_script("system modal\ngraph p\n"), SyntaxError);
  }
  SUBCASE("print and parse agree") {
    auto ps = parse_script(
        "system intuitionistic\n"
        "graph\n"
        "wrap / items\n"
        "loopadd 0 [p | q]\n"
        "expect [ | | [p | q]]\n"
        "detach 0\n");
    auto again = parse_script(print_script(ps));
    CHECK(print_script(again) == print_script(ps));
    CHECK(check_script(again).valid() == check_script(ps).valid());
  }
}

TEST_CASE("inverse pairs compose to the identity") {
  testing::Rng rng(3);
  testing::GraphShape shape;
  for (int n = 0; n < 300; ++n) {
    shape.dialect = n % 2 ? Dialect::Intuitionistic : Dialect::Classical;
    const System s = n % 2 ? I : C;
    Graph g = testing::random_graph(rng, shape);
    RuleBounds b;
    b.max_wrap_items = 2;
    for (const auto& r : enumerate_rule_instances(s, g, b)) {
      if (auto* w = std::get_if<DoubleCutIntro>(&r)) {
        Graph h = apply_rule(s, g, r);
        std::size_t at = w->items.empty() ? resolve_area(g, w->area).size()
                                          : *w->items.begin();
        CHECK(equals(apply_rule(s, h, DoubleCutElim{w->area.child_item(at)}), g));
      } else if (auto* w2 = std::get_if<ScrollWrap>(&r)) {
        Graph h = apply_rule(s, g, r);
        std::size_t at = w2->items.empty() ? resolve_area(g, w2->area).size()
                                           : *w2->items.begin();
        CHECK(equals(apply_rule(s, h, ScrollUnwrap{w2->area.child_item(at)}), g));
      } else if (auto* it = std::get_if<Iterate>(&r)) {
        Graph h = apply_rule(s, g, r);
        const Path copy = it->target.child_item(resolve_area(g, it->target).size());
        // The source path is unchanged because the copy is appended.
        CHECK(equals(apply_rule(s, h, Deiterate{copy, it->source}), g));
      }
    }
  }
}

TEST_CASE("applications stay well-formed") {
  testing::Rng rng(5);
  for (int n = 0; n < 400; ++n) {
    const bool intu = n % 2;
    testing::GraphShape shape;
    shape.dialect = intu ? Dialect::Intuitionistic : Dialect::Classical;
    Graph g = testing::random_graph(rng, shape);
    auto r = testing::random_rule(rng, intu ? I : C, g,
                                  {testing::random_graph(rng, shape)});
    if (!r) continue;
    Graph h = apply_rule(intu ? I : C, g, *r);
    CHECK(well_formed(h, shape.dialect).empty());
  }
}
