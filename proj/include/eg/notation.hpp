#pragma once

// Linear text syntax.
//
//   graph := item*
//   item  := ATOM | '(' graph ')' | '[' graph ('|' graph)* ']'
//
// `(g)` and `[g]` both denote a cut. `[g0 | g1 | ... | gn]` is a scroll with
// outer area g0 and loops g1..gn. The printer is normative: items separated
// by single spaces, cuts as `( ... )`, scrolls with loops as `[g0 | g1]`,
// and an empty loop rendered as nothing after its bar (`[p |]`).
//
// Formulas use `T`, `F`, `~`, `&`, `|`, `->` with precedence
// `~` > `&` > `|` > `->`; `->` associates to the right, `&` and `|` to the
// left.

#include <string>
#include <string_view>

#include "eg/formula.hpp"
#include "eg/graph.hpp"

namespace eg {

Graph parse_graph(std::string_view text, Dialect d);
std::string print_graph(const Graph& g);
std::string print_item(const Item& item);

Formula parse_formula(std::string_view text);
std::string print_formula(const Formula& f);

// Paths: dot-separated steps such as `1.outer.0` or `2.loop0`; `/` is the
// sheet.
Path parse_path(std::string_view text);
std::string print_path(const Path& p);

Dialect parse_dialect(std::string_view text);
std::string to_string(Dialect d);

}  // namespace eg
