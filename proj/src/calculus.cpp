#include "eg/calculus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "eg/notation.hpp"

namespace eg {

System parse_system(std::string_view text) {
  if (text == "classical") return System::Classical;
  if (text == "intuitionistic") return System::Intuitionistic;
  throw Error("unknown system '" + std::string(text) +
              "' (expected classical or intuitionistic)");
}

std::string to_string(System s) {
  return s == System::Classical ? "classical" : "intuitionistic";
}

std::string IllegalRule::describe(Reason r) {
  switch (r) {
    case Reason::WrongPolarity: return "wrong polarity";
    case Reason::BadWitness: return "bad witness";
    case Reason::DonutNotEmpty: return "donut not empty";
    case Reason::WrongSystem: return "wrong system";
    case Reason::InvalidPath: return "invalid path";
    case Reason::BadTarget: return "bad target";
    case Reason::NotApplicable: return "not applicable";
    case Reason::IllFormedContents: return "ill-formed contents";
  }
  return "illegal rule";
}

namespace {

using Reason = IllegalRule::Reason;

[[noreturn]] void fail(Reason r, const std::string& detail) {
  throw IllegalRule(r, detail);
}

const Item& item_at(const Graph& g, const Path& p) {
  try {
    return resolve_item(g, p);
  } catch (const InvalidPath& e) {
    fail(Reason::InvalidPath, e.what());
  }
}

const Graph& area_at(const Graph& g, const Path& p) {
  try {
    return resolve_area(g, p);
  } catch (const InvalidPath& e) {
    fail(Reason::InvalidPath, e.what());
  }
}

Polarity area_polarity(const Graph& g, const Path& area) {
  area_at(g, area);
  return polarity(g, area);
}

void require(System have, System need, const char* rule) {
  if (have != need)
    fail(Reason::WrongSystem, std::string(rule) + " belongs to the " +
                                  to_string(need) + " system");
}

void require_polarity(const Graph& g, const Path& area, Polarity want,
                      const char* rule) {
  if (area_polarity(g, area) != want)
    fail(Reason::WrongPolarity,
         std::string(rule) + " needs an " +
             (want == Polarity::Even ? "even" : "odd") + " area, " +
             print_path(area) + " is " +
             (want == Polarity::Even ? "odd" : "even"));
}

void require_well_formed(const Graph& contents, System s) {
  auto v = well_formed(contents, dialect_of(s));
  if (!v.empty()) fail(Reason::IllFormedContents, v.front().detail);
}

// Removes the chosen items from an area and puts `wrapper(chosen)` where the
// first of them stood (at the end when nothing is chosen).
Graph wrap_items(const Graph& g, const Path& area,
                 const std::set<std::size_t>& chosen,
                 Item (*wrapper)(Graph)) {
  const Graph& src = area_at(g, area);
  for (std::size_t i : chosen)
    if (i >= src.items.size())
      fail(Reason::InvalidPath, "item " + std::to_string(i) +
                                    " out of range in area " +
                                    print_path(area));
  Graph out = g;
  Graph& dst = resolve_area_mut(out, area);
  Graph inside;
  std::vector<Item> kept;
  for (std::size_t i = 0; i < dst.items.size(); ++i) {
    if (chosen.count(i))
      inside.items.push_back(std::move(dst.items[i]));
    else
      kept.push_back(std::move(dst.items[i]));
  }
  std::size_t at = chosen.empty() ? kept.size() : *chosen.begin();
  kept.insert(kept.begin() + static_cast<std::ptrdiff_t>(at),
              wrapper(std::move(inside)));
  dst.items = std::move(kept);
  return out;
}

Item double_cut(Graph g) { return Item::cut(make_graph({Item::cut(std::move(g))})); }
Item empty_scroll(Graph g) { return Item::scroll({}, {std::move(g)}); }

// Replaces the addressed item by a sequence of items.
Graph splice(const Graph& g, const Path& item, std::vector<Item> with) {
  Graph out = g;
  Graph& area = resolve_area_mut(out, item.area());
  auto pos = area.items.begin() + static_cast<std::ptrdiff_t>(*item.item);
  pos = area.items.erase(pos);
  area.items.insert(pos, std::make_move_iterator(with.begin()),
                    std::make_move_iterator(with.end()));
  return out;
}

Graph set_item(const Graph& g, const Path& item, Item with) {
  return splice(g, item, {std::move(with)});
}

struct Applier {
  System s;
  const Graph& g;

  Graph operator()(const rule::Erase& r) const {
    item_at(g, r.item);
    require_polarity(g, r.item.area(), Polarity::Even, "erasure");
    return splice(g, r.item, {});
  }

  Graph operator()(const rule::Insert& r) const {
    area_at(g, r.area);
    require_polarity(g, r.area, Polarity::Odd, "insertion");
    require_well_formed(r.graph, s);
    Graph out = g;
    auto& items = resolve_area_mut(out, r.area).items;
    items.insert(items.begin(), r.graph.items.begin(), r.graph.items.end());
    return out;
  }

  Graph operator()(const rule::Iterate& r) const {
    const Item& src = item_at(g, r.source);
    area_at(g, r.target);
    if (!area_within(r.target, r.source.area()))
      fail(Reason::BadTarget, print_path(r.target) +
                                  " is not within the area of " +
                                  print_path(r.source));
    if (area_inside_item(r.target, r.source))
      fail(Reason::BadTarget, print_path(r.target) + " lies inside " +
                                  print_path(r.source) + " itself");
    Graph out = g;
    resolve_area_mut(out, r.target).items.push_back(src);
    return out;
  }

  Graph operator()(const rule::Deiterate& r) const {
    const Item& copy = item_at(g, r.item);
    const Item& witness = item_at(g, r.witness);
    if (r.item == r.witness)
      fail(Reason::BadWitness, "an item cannot witness itself");
    const Path area = r.item.area();
    if (!area_within(area, r.witness.area()) ||
        area_inside_item(area, r.witness))
      fail(Reason::BadWitness, print_path(r.witness) + " does not reach " +
                                   print_path(r.item));
    if (!equals(copy, witness))
      fail(Reason::BadWitness, print_path(r.witness) + " differs from " +
                                   print_path(r.item));
    return splice(g, r.item, {});
  }

  Graph operator()(const rule::DoubleCutIntro& r) const {
    require(s, System::Classical, "double cut");
    return wrap_items(g, r.area, r.items, &double_cut);
  }

  Graph operator()(const rule::DoubleCutElim& r) const {
    require(s, System::Classical, "double cut");
    const Item& it = item_at(g, r.item);
    const bool has_inner = it.is_cut() && std::any_of(it.outer.items.begin(), it.outer.items.end(),
                                                      [](const Item& x) { return x.is_cut(); });
    if (!has_inner)
      fail(Reason::NotApplicable, print_path(r.item) + " is not a double cut");
    if (it.outer.items.size() != 1)
      fail(Reason::DonutNotEmpty, "the area between the cuts at " + print_path(r.item) +
                                      " is not empty");
    return splice(g, r.item, it.outer.items[0].outer.items);
  }

  Graph operator()(const rule::ScrollWrap& r) const {
    require(s, System::Intuitionistic, "scroll wrapping");
    return wrap_items(g, r.area, r.items, &empty_scroll);
  }

  Graph operator()(const rule::ScrollUnwrap& r) const {
    require(s, System::Intuitionistic, "scroll unwrapping");
    const Item& it = item_at(g, r.item);
    if (!it.is_scroll() || it.loops.size() != 1 || !it.outer.empty())
      fail(Reason::NotApplicable,
           print_path(r.item) + " is not a one-loop scroll with empty outer");
    return splice(g, r.item, it.loops[0].items);
  }

  Graph operator()(const rule::LoopAdd& r) const {
    require(s, System::Intuitionistic, "loop addition");
    const Item& it = item_at(g, r.item);
    if (!it.is_scroll())
      fail(Reason::NotApplicable, print_path(r.item) + " is not a scroll");
    require_polarity(g, r.item.area(), Polarity::Even, "loop addition");
    require_well_formed(r.graph, s);
    Item next = it;
    next.loops.push_back(r.graph);
    return set_item(g, r.item, std::move(next));
  }

  Graph operator()(const rule::LoopRemove& r) const {
    require(s, System::Intuitionistic, "loop removal");
    const Item& it = item_at(g, r.item);
    if (!it.is_scroll())
      fail(Reason::NotApplicable, print_path(r.item) + " is not a scroll");
    if (r.loop >= it.loops.size())
      fail(Reason::InvalidPath, "loop " + std::to_string(r.loop) +
                                    " out of range at " + print_path(r.item));
    require_polarity(g, r.item.area(), Polarity::Odd, "loop removal");
    Item next = it;
    next.loops.erase(next.loops.begin() + static_cast<std::ptrdiff_t>(r.loop));
    return set_item(g, r.item, std::move(next));
  }

  Graph operator()(const rule::Detach& r) const {
    require(s, System::Intuitionistic, "detachment");
    const Item& it = item_at(g, r.item);
    if (!it.is_scroll() || it.loops.size() != 1)
      fail(Reason::NotApplicable,
           print_path(r.item) + " is not a one-loop scroll");
    require_polarity(g, r.item.area(), Polarity::Even, "detachment");
    Graph inner = it.outer;
    inner.items.push_back(Item::cut(it.loops[0]));
    return set_item(g, r.item, Item::cut(std::move(inner)));
  }
};

std::string print_items(const std::set<std::size_t>& items) {
  std::string s = "items";
  bool first = true;
  for (auto i : items) {
    s += first ? " " : ",";
    first = false;
    s += std::to_string(i);
  }
  return s;
}

std::string with_graph(std::string head, const Graph& g) {
  std::string text = print_graph(g);
  if (!text.empty()) head += ' ' + text;
  return head;
}

struct Printer {
  std::string operator()(const rule::Erase& r) const {
    return "erase " + print_path(r.item);
  }
  std::string operator()(const rule::Insert& r) const {
    return with_graph("insert " + print_path(r.area), r.graph);
  }
  std::string operator()(const rule::Iterate& r) const {
    return "iterate " + print_path(r.source) + " -> " + print_path(r.target);
  }
  std::string operator()(const rule::Deiterate& r) const {
    return "deiterate " + print_path(r.item) + " witness " +
           print_path(r.witness);
  }
  std::string operator()(const rule::DoubleCutIntro& r) const {
    return "dcadd " + print_path(r.area) + " " + print_items(r.items);
  }
  std::string operator()(const rule::DoubleCutElim& r) const {
    return "dcremove " + print_path(r.item);
  }
  std::string operator()(const rule::ScrollWrap& r) const {
    return "wrap " + print_path(r.area) + " " + print_items(r.items);
  }
  std::string operator()(const rule::ScrollUnwrap& r) const {
    return "unwrap " + print_path(r.item);
  }
  std::string operator()(const rule::LoopAdd& r) const {
    return with_graph("loopadd " + print_path(r.item), r.graph);
  }
  std::string operator()(const rule::LoopRemove& r) const {
    return "loopremove " + print_path(r.item) + " " + std::to_string(r.loop);
  }
  std::string operator()(const rule::Detach& r) const {
    return "detach " + print_path(r.item);
  }
};

// Subsets of {0..n-1} with at most `k` elements, by size then
// lexicographically.
std::vector<std::set<std::size_t>> small_subsets(std::size_t n, std::size_t k) {
  std::vector<std::set<std::size_t>> out;
  for (std::size_t size = 0; size <= std::min(n, k); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      out.emplace_back(idx.begin(), idx.end());
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

Graph apply_rule(System s, const Graph& g, const RuleInstance& r) {
  return std::visit(Applier{s, g}, r);
}

std::string print_rule(const RuleInstance& r) { return std::visit(Printer{}, r); }

std::vector<RuleInstance> enumerate_rule_instances(System s, const Graph& g,
                                                   const RuleBounds& bounds) {
  const auto areas = all_areas(g);
  const auto items = all_items(g);
  const bool classical = s == System::Classical;
  std::vector<Graph> vocab;
  for (const auto& v : bounds.vocabulary)
    if (well_formed(v, dialect_of(s)).empty()) vocab.push_back(v);

  std::vector<RuleInstance> out;
  for (const auto& it : items)
    if (polarity(g, it.area()) == Polarity::Even) out.push_back(rule::Erase{it});

  for (const auto& a : areas)
    if (polarity(g, a) == Polarity::Odd)
      for (const auto& v : vocab) out.push_back(rule::Insert{a, v});

  for (const auto& src : items)
    for (const auto& a : areas)
      if (area_within(a, src.area()) && !area_inside_item(a, src))
        out.push_back(rule::Iterate{src, a});

  for (const auto& y : items) {
    const Item& copy = resolve_item(g, y);
    for (const auto& x : items) {
      if (x == y) continue;
      if (!area_within(y.area(), x.area()) || area_inside_item(y.area(), x))
        continue;
      if (equals(copy, resolve_item(g, x))) {
        out.push_back(rule::Deiterate{y, x});
      }
    }
  }

  if (classical) {
    for (const auto& a : areas)
      for (auto& subset :
           small_subsets(resolve_area(g, a).size(), bounds.max_wrap_items))
        out.push_back(rule::DoubleCutIntro{a, std::move(subset)});
    for (const auto& it : items) {
      const Item& x = resolve_item(g, it);
      if (x.is_cut() && x.outer.size() == 1 && x.outer.items[0].is_cut())
        out.push_back(rule::DoubleCutElim{it});
    }
    return out;
  }

  for (const auto& a : areas)
    for (auto& subset :
         small_subsets(resolve_area(g, a).size(), bounds.max_wrap_items))
      out.push_back(rule::ScrollWrap{a, std::move(subset)});
  for (const auto& it : items) {
    const Item& x = resolve_item(g, it);
    if (x.is_scroll() && x.loops.size() == 1 && x.outer.empty())
      out.push_back(rule::ScrollUnwrap{it});
  }
  for (const auto& it : items)
    if (resolve_item(g, it).is_scroll() &&
        polarity(g, it.area()) == Polarity::Even)
      for (const auto& v : vocab) out.push_back(rule::LoopAdd{it, v});
  for (const auto& it : items) {
    const Item& x = resolve_item(g, it);
    if (x.is_scroll() && polarity(g, it.area()) == Polarity::Odd)
      for (std::size_t k = 0; k < x.loops.size(); ++k)
        out.push_back(rule::LoopRemove{it, k});
  }
  for (const auto& it : items) {
    const Item& x = resolve_item(g, it);
    if (x.is_scroll() && x.loops.size() == 1 &&
        polarity(g, it.area()) == Polarity::Even)
      out.push_back(rule::Detach{it});
  }
  return out;
}

CheckReport check_script(const ProofScript& ps) {
  CheckReport rep;
  rep.final_graph = ps.start;
  if (auto v = well_formed(ps.start, dialect_of(ps.system)); !v.empty()) {
    rep.failure = CheckReport::Failure::IllFormedStart;
    rep.reason = "start graph: " + v.front().detail;
    return rep;
  }
  for (std::size_t i = 0; i < ps.steps.size(); ++i) {
    const auto& step = ps.steps[i];
    try {
      rep.final_graph = apply_rule(ps.system, rep.final_graph, step.rule);
    } catch (const IllegalRule& e) {
      rep.failure = CheckReport::Failure::IllegalRule;
      rep.failed_step = i;
      rep.reason = e.what();
      return rep;
    }
    rep.trace.push_back(rep.final_graph);
    if (step.expect && !equals(*step.expect, rep.final_graph)) {
      rep.failure = CheckReport::Failure::ExpectationMismatch;
      rep.failed_step = i;
      rep.reason = "expected `" + print_graph(*step.expect) + "` but got `" +
                   print_graph(rep.final_graph) + "`";
      return rep;
    }
  }
  return rep;
}

// --- script text ----------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Splits off the first whitespace-delimited word.
std::pair<std::string_view, std::string_view> head(std::string_view s) {
  s = trim(s);
  std::size_t i = 0;
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return {s.substr(0, i), trim(s.substr(i))};
}

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view text) : text_(text) {}

  ProofScript parse() {
    std::size_t offset = 0;
    while (offset <= text_.size()) {
      std::size_t nl = text_.find('\n', offset);
      if (nl == std::string_view::npos) nl = text_.size();
      ++line_no_;
      line_start_ = offset;
      std::string_view line = text_.substr(offset, nl - offset);
      if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      line = trim(line);
      if (!line.empty()) handle(line);
      offset = nl + 1;
    }
    if (!have_system_) error("missing `system` line");
    if (!have_graph_) error("missing `graph` line");
    return std::move(script_);
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw SyntaxError("line " + std::to_string(line_no_) + ": " + msg,
                      line_start_);
  }

  Path path(std::string_view s) const {
    try {
      return parse_path(s);
    } catch (const SyntaxError& e) {
      error(std::string("bad path '") + std::string(s) + "': " + e.what());
    }
  }

  Path item_path(std::string_view s) const {
    Path p = path(s);
    if (!p.addresses_item()) error("expected an item path, got '" + std::string(s) + "'");
    return p;
  }

  Path area_path(std::string_view s) const {
    Path p = path(s);
    if (p.addresses_item()) error("expected an area path, got '" + std::string(s) + "'");
    return p;
  }

  Graph graph(std::string_view s) const {
    try {
      return parse_graph(s, dialect_of(script_.system));
    } catch (const Error& e) {
      error(e.what());
    }
  }

  std::size_t number(std::string_view s) const {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      error("expected a number, got '" + std::string(s) + "'");
    return v;
  }

  std::set<std::size_t> item_list(std::string_view rest) const {
    auto [kw, list] = head(rest);
    if (kw != "items") error("expected `items <i,j,...>`");
    std::set<std::size_t> out;
    std::string compact;
    for (char c : list)
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    std::string_view sv = compact;
    while (!sv.empty()) {
      std::size_t comma = sv.find(',');
      std::string_view tok = sv.substr(0, comma);
      if (!out.insert(number(tok)).second) error("duplicate item index");
      if (comma == std::string_view::npos) break;
      sv.remove_prefix(comma + 1);
    }
    return out;
  }

  void step(RuleInstance r) {
    if (!have_graph_) error("rule before `graph` line");
    script_.steps.push_back({std::move(r), std::nullopt});
  }

  void handle(std::string_view line) {
    auto [cmd, rest] = head(line);
    if (cmd == "system") {
      if (have_system_) error("duplicate `system` line");
      try {
        script_.system = parse_system(rest);
      } catch (const Error& e) {
        error(e.what());
      }
      have_system_ = true;
      return;
    }
    if (!have_system_) error("expected `system` first");
    if (cmd == "graph") {
      if (have_graph_) error("duplicate `graph` line");
      script_.start = graph(rest);
      have_graph_ = true;
      return;
    }
    if (cmd == "expect") {
      if (script_.steps.empty()) error("`expect` must follow a rule");
      if (script_.steps.back().expect) error("second `expect` for one rule");
      script_.steps.back().expect = graph(rest);
      return;
    }
    auto [first, tail] = head(rest);
    if (cmd == "erase") {
      if (!tail.empty()) error("trailing text");
      step(rule::Erase{item_path(first)});
    } else if (cmd == "insert") {
      step(rule::Insert{area_path(first), graph(tail)});
    } else if (cmd == "iterate") {
      auto [arrow, target] = head(tail);
      if (arrow != "->") error("expected `iterate <item> -> <area>`");
      step(rule::Iterate{item_path(first), area_path(target)});
    } else if (cmd == "deiterate") {
      auto [kw, witness] = head(tail);
      if (kw != "witness") error("expected `deiterate <item> witness <item>`");
      step(rule::Deiterate{item_path(first), item_path(witness)});
    } else if (cmd == "dcadd") {
      step(rule::DoubleCutIntro{area_path(first), item_list(tail)});
    } else if (cmd == "dcremove") {
      step(rule::DoubleCutElim{item_path(first)});
    } else if (cmd == "wrap") {
      step(rule::ScrollWrap{area_path(first), item_list(tail)});
    } else if (cmd == "unwrap") {
      step(rule::ScrollUnwrap{item_path(first)});
    } else if (cmd == "loopadd") {
      step(rule::LoopAdd{item_path(first), graph(tail)});
    } else if (cmd == "loopremove") {
      step(rule::LoopRemove{item_path(first), number(tail)});
    } else if (cmd == "detach") {
      step(rule::Detach{item_path(first)});
    } else {
      error("unknown command '" + std::string(cmd) + "'");
    }
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  std::size_t line_start_ = 0;
  bool have_system_ = false;
  bool have_graph_ = false;
  ProofScript script_;
};

}  // namespace

ProofScript parse_script(std::string_view text) {
  return ScriptParser(text).parse();
}

std::string print_script(const ProofScript& ps) {
  std::ostringstream out;
  out << "system " << to_string(ps.system) << '\n';
  out << with_graph("graph", ps.start) << '\n';
  for (const auto& st : ps.steps) {
    out << print_rule(st.rule) << '\n';
    if (st.expect) out << with_graph("expect", *st.expect) << '\n';
  }
  return out.str();
}

}  // namespace eg
