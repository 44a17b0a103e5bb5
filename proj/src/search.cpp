#include "eg/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "eg/notation.hpp"
#include "eg/semantics.hpp"

namespace eg {

namespace {

std::string state_key(const Graph& g) { return print_graph(canonicalize(g)); }

// Removes one item per element of `part` from `area`, matching up to
// multiset equality. Returns false when `part` is not a sub-multiset.
bool remove_sub_multiset(Graph& area, const Graph& part) {
  std::vector<bool> used(area.items.size(), false);
  for (const auto& want : part.items) {
    bool hit = false;
    for (std::size_t i = 0; i < area.items.size() && !hit; ++i)
      if (!used[i] && equals(area.items[i], want)) used[i] = hit = true;
    if (!hit) return false;
  }
  Graph rest;
  for (std::size_t i = 0; i < area.items.size(); ++i)
    if (!used[i]) rest.items.push_back(std::move(area.items[i]));
  area = std::move(rest);
  return true;
}

// Graphs P with a rule instance taking P to (a graph equal to) `c`. Every
// predecessor is reproducible by enumerate_rule_instances on P under the
// same bounds, which is what path reconstruction relies on.
std::vector<Graph> predecessors(System s, const Graph& c,
                                const RuleBounds& rb,
                                const std::vector<Item>& vocab_items) {
  std::vector<Graph> out;
  const auto areas = all_areas(c);
  const auto items = all_items(c);

  // Undo erasure: put an item back into an even area.
  for (const auto& a : areas) {
    if (polarity(c, a) != Polarity::Even) continue;
    for (const auto& it : vocab_items) {
      Graph p = c;
      resolve_area_mut(p, a).items.push_back(it);
      out.push_back(std::move(p));
    }
  }
  // Undo insertion: take a vocabulary graph out of an odd area.
  for (const auto& a : areas) {
    if (polarity(c, a) != Polarity::Odd) continue;
    for (const auto& v : rb.vocabulary) {
      Graph p = c;
      if (remove_sub_multiset(resolve_area_mut(p, a), v))
        out.push_back(std::move(p));
    }
  }
  // Iteration and deiteration undo each other, as do the wrapping pairs.
  RuleBounds structural;
  structural.max_wrap_items = rb.max_wrap_items;
  for (const auto& r : enumerate_rule_instances(s, c, structural)) {
    bool keep = std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, rule::DoubleCutElim>) {
            return resolve_item(c, x.item).outer.items[0].outer.size() <=
                   rb.max_wrap_items;
          } else if constexpr (std::is_same_v<T, rule::ScrollUnwrap>) {
            return resolve_item(c, x.item).loops[0].size() <=
                   rb.max_wrap_items;
          } else {
            return std::is_same_v<T, rule::Iterate> ||
                   std::is_same_v<T, rule::Deiterate> ||
                   std::is_same_v<T, rule::DoubleCutIntro> ||
                   std::is_same_v<T, rule::ScrollWrap>;
          }
        },
        r);
    if (keep) out.push_back(apply_rule(s, c, r));
  }
  if (s == System::Classical) return out;

  for (const auto& ip : items) {
    const Item& x = resolve_item(c, ip);
    if (!x.is_scroll()) continue;
    const Polarity pol = polarity(c, ip.area());
    if (pol == Polarity::Even) {
      // Undo loop addition.
      for (std::size_t k = 0; k < x.loops.size(); ++k) {
        bool in_vocab = std::any_of(
            rb.vocabulary.begin(), rb.vocabulary.end(),
            [&](const Graph& v) { return equals(v, x.loops[k]); });
        if (!in_vocab) continue;
        Item y = x;
        y.loops.erase(y.loops.begin() + static_cast<std::ptrdiff_t>(k));
        Graph p = c;
        resolve_area_mut(p, ip.area()).items[*ip.item] = std::move(y);
        out.push_back(std::move(p));
      }
      // Undo detachment: glue a cut of the outer area back on as a loop.
      if (x.is_cut()) {
        for (std::size_t j = 0; j < x.outer.size(); ++j) {
          if (!x.outer.items[j].is_cut()) continue;
          Graph g0 = x.outer;
          Graph g1 = g0.items[j].outer;
          g0.items.erase(g0.items.begin() + static_cast<std::ptrdiff_t>(j));
          Graph p = c;
          resolve_area_mut(p, ip.area()).items[*ip.item] =
              Item::scroll(std::move(g0), {std::move(g1)});
          out.push_back(std::move(p));
        }
      }
    } else {
      // Undo loop removal.
      for (const auto& v : rb.vocabulary) {
        Item y = x;
        y.loops.push_back(v);
        Graph p = c;
        resolve_area_mut(p, ip.area()).items[*ip.item] = std::move(y);
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

struct Node {
  Graph graph;
  std::string link;  // parent (forward side) or child (backward side)
  int depth = 0;
  std::optional<RuleInstance> rule;  // forward side: rule from parent
};

class Bidirectional {
 public:
  Bidirectional(System s, const Graph& from, const Graph& goal,
                const SearchBounds& b)
      : system_(s), logic_(logic_of(dialect_of(s))), bounds_(b),
        from_(from), goal_(goal),
        from_formula_(graph_to_formula(from)),
        goal_formula_(graph_to_formula(goal)) {
    rules_.vocabulary = b.vocabulary.empty() ? default_vocabulary({from, goal})
                                             : b.vocabulary;
    rules_.max_wrap_items = b.max_wrap_items;
    std::unordered_set<std::string> seen;
    for (const auto& v : rules_.vocabulary)
      for (const auto& it : v.items)
        if (seen.insert(print_item(canonicalize(it))).second)
          vocab_items_.push_back(it);
    size_limit_ = std::max(node_count(from), node_count(goal)) + b.size_slack;
    depth_limit_ =
        std::max(nesting_depth(from), nesting_depth(goal)) + b.depth_slack;
  }

  std::optional<std::vector<RuleInstance>> run(SearchStats* stats) {
    std::string fk = state_key(from_), gk = state_key(goal_);
    if (fk == gk) return std::vector<RuleInstance>{};
    if (bounds_.semantic_pruning && !entails(logic_, from_formula_, goal_formula_))
      return std::nullopt;

    fwd_.emplace(fk, Node{from_, {}, 0, std::nullopt});
    bwd_.emplace(gk, Node{goal_, {}, 0, std::nullopt});
    std::vector<std::string> ffront{fk}, bfront{gk};
    int fdepth = 0, bdepth = 0;

    while (fdepth + bdepth < bounds_.max_depth) {
      if (ffront.empty() || bfront.empty()) return std::nullopt;
      const bool forward = ffront.size() <= bfront.size();
      std::optional<std::string> meet =
          forward ? expand_forward(ffront, fdepth + 1)
                  : expand_backward(bfront, bdepth + 1);
      (forward ? fdepth : bdepth) += 1;
      if (stats) {
        stats->expanded = expanded_;
        stats->depth_reached = fdepth + bdepth;
      }
      if (meet) return reconstruct(*meet);
    }
    return std::nullopt;
  }

 private:
  void count_expansion() {
    if (++expanded_ > bounds_.max_visited)
      throw BoundsExceeded("search expanded more than " +
                           std::to_string(bounds_.max_visited) + " states");
  }

  bool within_limits(const Graph& g) const {
    return node_count(g) <= size_limit_ && nesting_depth(g) <= depth_limit_;
  }

  std::optional<std::string> expand_forward(std::vector<std::string>& front,
                                            int depth) {
    std::vector<std::string> next;
    for (const auto& key : front) {
      count_expansion();
      const Graph g = fwd_.at(key).graph;
      for (auto& r : enumerate_rule_instances(system_, g, rules_)) {
        Graph h = apply_rule(system_, g, r);
        if (!within_limits(h)) continue;
        std::string hk = state_key(h);
        if (fwd_.count(hk)) continue;
        if (bounds_.semantic_pruning &&
            !entails(logic_, graph_to_formula(h), goal_formula_))
          continue;
        fwd_.emplace(hk, Node{std::move(h), key, depth, std::move(r)});
        if (bwd_.count(hk)) return hk;
        next.push_back(std::move(hk));
      }
    }
    front = std::move(next);
    return std::nullopt;
  }

  std::optional<std::string> expand_backward(std::vector<std::string>& front,
                                             int depth) {
    std::vector<std::string> next;
    for (const auto& key : front) {
      count_expansion();
      const Graph c = bwd_.at(key).graph;
      for (auto& p : predecessors(system_, c, rules_, vocab_items_)) {
        if (!within_limits(p)) continue;
        std::string pk = state_key(p);
        if (bwd_.count(pk)) continue;
        if (bounds_.semantic_pruning &&
            !entails(logic_, from_formula_, graph_to_formula(p)))
          continue;
        bwd_.emplace(pk, Node{std::move(p), key, depth, std::nullopt});
        if (fwd_.count(pk)) return pk;
        next.push_back(std::move(pk));
      }
    }
    front = std::move(next);
    return std::nullopt;
  }

  std::vector<RuleInstance> reconstruct(const std::string& meet) {
    std::vector<RuleInstance> path;
    for (const Node* n = &fwd_.at(meet); n->rule; n = &fwd_.at(n->link))
      path.push_back(*n->rule);
    std::reverse(path.begin(), path.end());

    Graph current = fwd_.at(meet).graph;
    for (std::string k = meet; !bwd_.at(k).link.empty();) {
      const std::string& target = bwd_.at(k).link;
      bool stepped = false;
      for (auto& r : enumerate_rule_instances(system_, current, rules_)) {
        Graph h = apply_rule(system_, current, r);
        if (state_key(h) != target) continue;
        path.push_back(std::move(r));
        current = std::move(h);
        stepped = true;
        break;
      }
      if (!stepped)
        throw std::logic_error("search could not replay a backward step");
      k = target;
    }
    return path;
  }

  System system_;
  Logic logic_;
  const SearchBounds& bounds_;
  const Graph& from_;
  const Graph& goal_;
  Formula from_formula_;
  Formula goal_formula_;
  RuleBounds rules_;
  std::vector<Item> vocab_items_;
  std::size_t size_limit_ = 0;
  std::size_t depth_limit_ = 0;
  std::unordered_map<std::string, Node> fwd_;
  std::unordered_map<std::string, Node> bwd_;
  std::size_t expanded_ = 0;
};

void add_unique(const Graph& g, std::vector<Graph>& out,
                std::unordered_set<std::string>& keys) {
  if (g.empty()) return;
  if (keys.insert(state_key(g)).second) out.push_back(g);
}

}  // namespace

std::vector<Graph> default_vocabulary(const std::vector<Graph>& sources) {
  std::vector<Graph> out;
  std::unordered_set<std::string> keys;
  for (const auto& src : sources) {
    for (const auto& a : all_areas(src)) add_unique(resolve_area(src, a), out, keys);
    for (const auto& it : all_items(src))
      add_unique(make_graph({resolve_item(src, it)}), out, keys);
  }
  return out;
}

std::optional<ProofScript> derive(System s, const Graph& from,
                                  const Graph& goal, const SearchBounds& b,
                                  SearchStats* stats) {
  const Dialect d = dialect_of(s);
  if (!well_formed(from, d).empty() || !well_formed(goal, d).empty())
    throw Error("search endpoints must be well-formed in the " +
                to_string(d) + " dialect");

  auto path = Bidirectional(s, from, goal, b).run(stats);
  if (!path) return std::nullopt;

  ProofScript ps{s, from, {}};
  for (auto& r : *path) ps.steps.push_back({std::move(r), std::nullopt});
  if (!ps.steps.empty()) ps.steps.back().expect = goal;
  CheckReport rep = check_script(ps);
  if (!rep.valid() || !equals(rep.final_graph, goal))
    throw std::logic_error("search produced a script that does not check: " +
                           rep.reason);
  return ps;
}

}  // namespace eg
