#pragma once

// Existential graphs: atoms and scrolls juxtaposed on areas.
//
// A scroll is an outer closed curve together with zero or more loops glued
// to it from the inside. A scroll with no loops is the ordinary cut. Areas
// are stored in author order so that paths stay stable; equality of graphs
// ignores that order (juxtaposition is a multiset).

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace eg {

enum class Dialect { Classical, Intuitionistic };

struct Item;

struct Graph {
  std::vector<Item> items;

  bool empty() const { return items.empty(); }
  std::size_t size() const { return items.size(); }

  // Ordered, exact structural equality. See `equals` for multiset equality.
  friend bool operator==(const Graph&, const Graph&) = default;
};

struct Item {
  enum class Kind { Atom, Scroll };

  Kind kind = Kind::Atom;
  std::string name;          // atoms only
  Graph outer;               // scrolls only
  std::vector<Graph> loops;  // scrolls only

  static Item atom(std::string name);
  static Item scroll(Graph outer, std::vector<Graph> loops);
  static Item cut(Graph contents) { return scroll(std::move(contents), {}); }

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_scroll() const { return kind == Kind::Scroll; }
  bool is_cut() const { return is_scroll() && loops.empty(); }

  friend bool operator==(const Item&, const Item&) = default;
};

Graph make_graph(std::vector<Item> items);

// --- addressing -----------------------------------------------------------

struct Region {
  enum class Kind { Outer, Loop };
  Kind kind = Kind::Outer;
  std::size_t loop = 0;

  static Region outer() { return {Kind::Outer, 0}; }
  static Region loop_at(std::size_t k) { return {Kind::Loop, k}; }
  bool is_outer() const { return kind == Kind::Outer; }

  friend auto operator<=>(const Region&, const Region&) = default;
};

struct Step {
  std::size_t item = 0;
  Region region;
  friend auto operator<=>(const Step&, const Step&) = default;
};

// An address into a graph. The steps select an area; an optional trailing
// index selects an item of that area. No steps and no item is the sheet.
struct Path {
  std::vector<Step> steps;
  std::optional<std::size_t> item;

  static Path sheet() { return {}; }
  static Path item_at(std::vector<Step> steps, std::size_t index) {
    return {std::move(steps), index};
  }

  bool addresses_item() const { return item.has_value(); }
  // The area an item path lives in; identity for area paths.
  Path area() const { return {steps, std::nullopt}; }
  Path child_item(std::size_t index) const;  // requires an area path
  Path child_area(Region region) const;      // requires an item path

  friend auto operator<=>(const Path&, const Path&) = default;
};

enum class Polarity { Even, Odd };

using Resolved = std::variant<const Item*, const Graph*>;

Resolved resolve(const Graph& g, const Path& p);
const Item& resolve_item(const Graph& g, const Path& p);
const Graph& resolve_area(const Graph& g, const Path& p);
Graph& resolve_area_mut(Graph& g, const Path& p);

// Parity of boundary crossings from the sheet to an area. Crossing into a
// scroll's outer area is one crossing; entering a loop is two.
Polarity polarity(const Graph& g, const Path& area);
// The polarity of the area an item lives in.
Polarity item_polarity(const Graph& g, const Path& item);

Graph replace_at(const Graph& g, const Path& area, Graph contents);

// True when `inner` is `outer` or lies inside it. A scroll's loops count as
// lying inside its outer area.
bool area_within(const Path& inner, const Path& outer);
// True when the area lies inside the addressed item (any of its regions).
bool area_inside_item(const Path& area, const Path& item);

// Every area path in pre-order (sheet first, outer before loops).
std::vector<Path> all_areas(const Graph& g);
// Every item path in pre-order.
std::vector<Path> all_items(const Graph& g);

// --- canonical form and equality -----------------------------------------

std::strong_ordering compare(const Item& a, const Item& b);
std::strong_ordering compare(const Graph& a, const Graph& b);

Graph canonicalize(const Graph& g);
Item canonicalize(const Item& item);
// Multiset equality of areas and loops, recursively.
bool equals(const Graph& a, const Graph& b);
bool equals(const Item& a, const Item& b);

// Atoms plus scrolls plus loops.
std::size_t node_count(const Graph& g);
// Largest number of nested boundaries around any area.
std::size_t nesting_depth(const Graph& g);

// --- well-formedness ---------------------------------------------------------

struct Violation {
  enum class Kind { LoopInClassical, BadAtomName };
  Kind kind;
  Path at;
  std::string detail;
};

std::vector<Violation> well_formed(const Graph& g, Dialect d);
bool valid_atom_name(const std::string& name);

}  // namespace eg
