#include "eg/graph.hpp"

#include <algorithm>
#include <cctype>

#include "eg/error.hpp"

namespace eg {

Item Item::atom(std::string name) {
  Item it;
  it.kind = Kind::Atom;
  it.name = std::move(name);
  return it;
}

Item Item::scroll(Graph outer, std::vector<Graph> loops) {
  Item it;
  it.kind = Kind::Scroll;
  it.outer = std::move(outer);
  it.loops = std::move(loops);
  return it;
}

Graph make_graph(std::vector<Item> items) { return Graph{std::move(items)}; }

Path Path::child_item(std::size_t index) const {
  if (item) throw InvalidPath("child_item needs an area path");
  return {steps, index};
}

Path Path::child_area(Region region) const {
  if (!item) throw InvalidPath("child_area needs an item path");
  Path p{steps, std::nullopt};
  p.steps.push_back({*item, region});
  return p;
}

namespace {

std::string describe(const Path& p) {
  std::string s;
  for (const auto& st : p.steps) {
    if (!s.empty()) s += '.';
    s += std::to_string(st.item) + '.';
    s += st.region.is_outer() ? std::string("outer")
                              : "loop" + std::to_string(st.region.loop);
  }
  if (p.item) {
    if (!s.empty()) s += '.';
    s += std::to_string(*p.item);
  }
  return s.empty() ? "/" : s;
}

template <typename G>
auto step_into(G& area, const Step& st, const Path& whole) -> decltype(&area) {
  if (st.item >= area.items.size())
    throw InvalidPath("item index out of range in path " + describe(whole));
  auto& it = area.items[st.item];
  if (!it.is_scroll())
    throw InvalidPath("path enters an atom: " + describe(whole));
  if (st.region.is_outer()) return &it.outer;
  if (st.region.loop >= it.loops.size())
    throw InvalidPath("loop index out of range in path " + describe(whole));
  return &it.loops[st.region.loop];
}

template <typename G>
G& walk(G& g, const Path& p) {
  G* area = &g;
  for (const auto& st : p.steps) area = step_into(*area, st, p);
  return *area;
}

}  // namespace

Resolved resolve(const Graph& g, const Path& p) {
  const Graph& area = walk(g, p);
  if (!p.item) return &area;
  if (*p.item >= area.items.size())
    throw InvalidPath("item index out of range in path " + describe(p));
  return &area.items[*p.item];
}

const Item& resolve_item(const Graph& g, const Path& p) {
  if (!p.item) throw InvalidPath("expected an item path, got " + describe(p));
  return *std::get<const Item*>(resolve(g, p));
}

const Graph& resolve_area(const Graph& g, const Path& p) {
  if (p.item) throw InvalidPath("expected an area path, got " + describe(p));
  return walk(g, p);
}

Graph& resolve_area_mut(Graph& g, const Path& p) {
  if (p.item) throw InvalidPath("expected an area path, got " + describe(p));
  return walk(g, p);
}

Polarity polarity(const Graph& g, const Path& area) {
  resolve_area(g, area);
  std::size_t crossings = 0;
  for (const auto& st : area.steps) crossings += st.region.is_outer() ? 1 : 2;
  return crossings % 2 == 0 ? Polarity::Even : Polarity::Odd;
}

Polarity item_polarity(const Graph& g, const Path& item) {
  resolve_item(g, item);
  return polarity(g, item.area());
}

Graph replace_at(const Graph& g, const Path& area, Graph contents) {
  Graph out = g;
  resolve_area_mut(out, area) = std::move(contents);
  return out;
}

bool area_within(const Path& inner, const Path& outer) {
  const auto& a = outer.steps;
  const auto& b = inner.steps;
  if (b.size() < a.size()) return false;
  if (a.empty()) return true;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] != b[i]) return false;
  const Step& last = a.back();
  const Step& mine = b[a.size() - 1];
  if (last == mine) return true;
  return last.item == mine.item && last.region.is_outer() &&
         !mine.region.is_outer();
}

bool area_inside_item(const Path& area, const Path& item) {
  if (!item.item) return false;
  const auto& base = item.steps;
  if (area.steps.size() <= base.size()) return false;
  if (!std::equal(base.begin(), base.end(), area.steps.begin())) return false;
  return area.steps[base.size()].item == *item.item;
}

namespace {

void collect(const Graph& g, Path& at, std::vector<Path>* areas,
             std::vector<Path>* items) {
  if (areas) areas->push_back(at);
  for (std::size_t i = 0; i < g.items.size(); ++i) {
    const Item& it = g.items[i];
    if (items) items->push_back(at.child_item(i));
    if (!it.is_scroll()) continue;
    at.steps.push_back({i, Region::outer()});
    collect(it.outer, at, areas, items);
    at.steps.pop_back();
    for (std::size_t k = 0; k < it.loops.size(); ++k) {
      at.steps.push_back({i, Region::loop_at(k)});
      collect(it.loops[k], at, areas, items);
      at.steps.pop_back();
    }
  }
}

}  // namespace

std::vector<Path> all_areas(const Graph& g) {
  std::vector<Path> out;
  Path at;
  collect(g, at, &out, nullptr);
  return out;
}

std::vector<Path> all_items(const Graph& g) {
  std::vector<Path> out;
  Path at;
  collect(g, at, nullptr, &out);
  return out;
}

// Atoms sort before scrolls; scrolls compare by outer area, then number of
// loops, then loops in order. Both arguments are assumed canonical when the
// result is used as a multiset order.
std::strong_ordering compare(const Item& a, const Item& b) {
  if (a.kind != b.kind)
    return a.is_atom() ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  if (a.is_atom()) return a.name <=> b.name;
  if (auto c = compare(a.outer, b.outer); c != 0) return c;
  if (auto c = a.loops.size() <=> b.loops.size(); c != 0) return c;
  for (std::size_t k = 0; k < a.loops.size(); ++k)
    if (auto c = compare(a.loops[k], b.loops[k]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Graph& a, const Graph& b) {
  return std::lexicographical_compare_three_way(
      a.items.begin(), a.items.end(), b.items.begin(), b.items.end(),
      [](const Item& x, const Item& y) { return compare(x, y); });
}

Item canonicalize(const Item& item) {
  if (item.is_atom()) return item;
  Item out = Item::scroll(canonicalize(item.outer), {});
  out.loops.reserve(item.loops.size());
  for (const auto& l : item.loops) out.loops.push_back(canonicalize(l));
  std::sort(out.loops.begin(), out.loops.end(),
            [](const Graph& x, const Graph& y) { return compare(x, y) < 0; });
  return out;
}

Graph canonicalize(const Graph& g) {
  Graph out;
  out.items.reserve(g.items.size());
  for (const auto& it : g.items) out.items.push_back(canonicalize(it));
  std::sort(out.items.begin(), out.items.end(),
            [](const Item& x, const Item& y) { return compare(x, y) < 0; });
  return out;
}

bool equals(const Graph& a, const Graph& b) {
  if (a.items.size() != b.items.size()) return false;
  return canonicalize(a) == canonicalize(b);
}

bool equals(const Item& a, const Item& b) {
  if (a.kind != b.kind) return false;
  return canonicalize(a) == canonicalize(b);
}

std::size_t node_count(const Graph& g) {
  std::size_t n = 0;
  for (const auto& it : g.items) {
    ++n;
    if (!it.is_scroll()) continue;
    n += node_count(it.outer);
    for (const auto& l : it.loops) n += 1 + node_count(l);
  }
  return n;
}

std::size_t nesting_depth(const Graph& g) {
  std::size_t d = 0;
  for (const auto& it : g.items) {
    if (!it.is_scroll()) continue;
    d = std::max(d, 1 + nesting_depth(it.outer));
    for (const auto& l : it.loops) d = std::max(d, 2 + nesting_depth(l));
  }
  return d;
}

bool valid_atom_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

void check(const Graph& g, Dialect d, Path& at, std::vector<Violation>& out) {
  for (std::size_t i = 0; i < g.items.size(); ++i) {
    const Item& it = g.items[i];
    if (it.is_atom()) {
      if (!valid_atom_name(it.name))
        out.push_back({Violation::Kind::BadAtomName, at.child_item(i),
                       "invalid atom name '" + it.name + "'"});
      continue;
    }
    if (d == Dialect::Classical && !it.loops.empty())
      out.push_back({Violation::Kind::LoopInClassical, at.child_item(i),
                     "scroll with loops in the classical dialect"});
    at.steps.push_back({i, Region::outer()});
    check(it.outer, d, at, out);
    at.steps.pop_back();
    for (std::size_t k = 0; k < it.loops.size(); ++k) {
      at.steps.push_back({i, Region::loop_at(k)});
      check(it.loops[k], d, at, out);
      at.steps.pop_back();
    }
  }
}

}  // namespace

std::vector<Violation> well_formed(const Graph& g, Dialect d) {
  std::vector<Violation> out;
  Path at;
  check(g, d, at, out);
  return out;
}

}  // namespace eg
