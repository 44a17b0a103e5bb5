#include "eg/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <unordered_map>

#include "eg/error.hpp"

namespace eg {

// --- translations -----------------------------------------------------------

namespace {

Formula conjoin(const std::vector<Formula>& parts, Formula empty) {
  if (parts.empty()) return empty;
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    acc = Formula::conj(parts[i], acc);
  return acc;
}

Formula disjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::bot();
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    acc = Formula::disj(parts[i], acc);
  return acc;
}

Formula translate_area(const Graph& g);

Formula translate_item(const Item& it) {
  if (it.is_atom()) return Formula::atom(it.name);
  Formula antecedent = translate_area(it.outer);
  if (it.loops.empty()) return Formula::neg(antecedent);
  std::vector<Formula> disjuncts;
  for (const auto& l : it.loops) disjuncts.push_back(translate_area(l));
  return Formula::imp(antecedent, disjoin(disjuncts));
}

Formula translate_area(const Graph& g) {
  std::vector<Formula> parts;
  parts.reserve(g.items.size());
  for (const auto& it : g.items) parts.push_back(translate_item(it));
  return conjoin(parts, Formula::top());
}

void encode(const Formula& f, Dialect d, Graph& out) {
  auto sub = [d](const Formula& x) {
    Graph g;
    encode(x, d, g);
    return g;
  };
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.items.push_back(Item::atom(f.name()));
      return;
    case Formula::Kind::Top:
      return;
    case Formula::Kind::Bot:
      out.items.push_back(Item::cut({}));
      return;
    case Formula::Kind::Not:
      out.items.push_back(Item::cut(sub(f.lhs())));
      return;
    case Formula::Kind::And:
      encode(f.lhs(), d, out);
      encode(f.rhs(), d, out);
      return;
    case Formula::Kind::Or:
      if (d == Dialect::Classical) {
        Graph both;
        both.items.push_back(Item::cut(sub(f.lhs())));
        both.items.push_back(Item::cut(sub(f.rhs())));
        out.items.push_back(Item::cut(std::move(both)));
      } else {
        out.items.push_back(Item::scroll({}, {sub(f.lhs()), sub(f.rhs())}));
      }
      return;
    case Formula::Kind::Imp:
      if (d == Dialect::Classical) {
        Graph inner = sub(f.lhs());
        inner.items.push_back(Item::cut(sub(f.rhs())));
        out.items.push_back(Item::cut(std::move(inner)));
      } else {
        out.items.push_back(Item::scroll(sub(f.lhs()), {sub(f.rhs())}));
      }
      return;
  }
}

}  // namespace

Formula graph_to_formula(const Graph& g) { return translate_area(canonicalize(g)); }

Graph formula_to_graph(const Formula& f, Dialect d) {
  Graph g;
  encode(f, d, g);
  return g;
}

// --- classical --------------------------------------------------------------

bool eval_classical(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = a.find(f.name());
      return it != a.end() && it->second;
    }
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Not: return !eval_classical(f.lhs(), a);
    case Formula::Kind::And:
      return eval_classical(f.lhs(), a) && eval_classical(f.rhs(), a);
    case Formula::Kind::Or:
      return eval_classical(f.lhs(), a) || eval_classical(f.rhs(), a);
    case Formula::Kind::Imp:
      return !eval_classical(f.lhs(), a) || eval_classical(f.rhs(), a);
  }
  return false;
}

bool taut_classical(const Formula& f) {
  auto names = f.atoms();
  if (names.size() > kMaxTruthTableAtoms)
    throw TooManyAtoms("truth table over " + std::to_string(names.size()) +
                       " atoms exceeds the limit of " +
                       std::to_string(kMaxTruthTableAtoms));
  std::vector<std::string> atoms(names.begin(), names.end());
  Assignment a;
  const std::uint64_t rows = std::uint64_t{1} << atoms.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::size_t i = 0; i < atoms.size(); ++i) a[atoms[i]] = (row >> i) & 1;
    if (!eval_classical(f, a)) return false;
  }
  return true;
}

// --- intuitionistic: G4ip ------------------------------------------------------

namespace {

class G4ip {
 public:
  bool theorem(const Formula& f) { return prove({}, intern(f)); }

 private:
  enum class Op : std::uint8_t { Atom, Top, Bot, And, Or, Imp };
  struct Node {
    Op op;
    int a;
    int b;
  };

  int node(Op op, int a = -1, int b = -1) {
    auto key = std::make_tuple(static_cast<int>(op), a, b);
    auto [it, fresh] = index_.try_emplace(key, static_cast<int>(nodes_.size()));
    if (fresh) nodes_.push_back({op, a, b});
    return it->second;
  }

  int intern(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        auto [it, fresh] =
            atoms_.try_emplace(f.name(), static_cast<int>(atoms_.size()));
        return node(Op::Atom, it->second);
      }
      case Formula::Kind::Top: return node(Op::Top);
      case Formula::Kind::Bot: return node(Op::Bot);
      case Formula::Kind::Not:
        return node(Op::Imp, intern(f.lhs()), node(Op::Bot));
      case Formula::Kind::And:
        return node(Op::And, intern(f.lhs()), intern(f.rhs()));
      case Formula::Kind::Or:
        return node(Op::Or, intern(f.lhs()), intern(f.rhs()));
      case Formula::Kind::Imp:
        return node(Op::Imp, intern(f.lhs()), intern(f.rhs()));
    }
    return -1;
  }

  static std::vector<int> without(const std::vector<int>& ctx, std::size_t i,
                                  std::initializer_list<int> extra) {
    std::vector<int> out;
    out.reserve(ctx.size() + extra.size());
    for (std::size_t j = 0; j < ctx.size(); ++j)
      if (j != i) out.push_back(ctx[j]);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  }

  static bool contains(const std::vector<int>& ctx, int f) {
    return std::binary_search(ctx.begin(), ctx.end(), f);
  }

  bool prove(std::vector<int> ctx, int goal) {
    std::sort(ctx.begin(), ctx.end());
    ctx.erase(std::unique(ctx.begin(), ctx.end()), ctx.end());
    std::vector<int> key = ctx;
    key.push_back(goal);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = search(ctx, goal);
    memo_.emplace(std::move(key), result);
    return result;
  }

  bool search(const std::vector<int>& ctx, int goal) {
    // Invertible left rules first.
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Node n = nodes_[ctx[i]];
      switch (n.op) {
        case Op::Bot: return true;
        case Op::Top: return prove(without(ctx, i, {}), goal);
        case Op::And: return prove(without(ctx, i, {n.a, n.b}), goal);
        case Op::Or:
          return prove(without(ctx, i, {n.a}), goal) &&
                 prove(without(ctx, i, {n.b}), goal);
        case Op::Imp: {
          const Node ant = nodes_[n.a];
          switch (ant.op) {
            case Op::Atom:
              if (contains(ctx, n.a)) return prove(without(ctx, i, {n.b}), goal);
              break;
            case Op::Bot: return prove(without(ctx, i, {}), goal);
            case Op::Top: return prove(without(ctx, i, {n.b}), goal);
            case Op::And:
              return prove(
                  without(ctx, i, {node(Op::Imp, ant.a, node(Op::Imp, ant.b, n.b))}),
                  goal);
            case Op::Or:
              return prove(without(ctx, i,
                                   {node(Op::Imp, ant.a, n.b),
                                    node(Op::Imp, ant.b, n.b)}),
                           goal);
            case Op::Imp:
              break;
          }
          break;
        }
        case Op::Atom:
          break;
      }
    }

    // Invertible right rules.
    const Node g = nodes_[goal];
    switch (g.op) {
      case Op::Top: return true;
      case Op::And: return prove(ctx, g.a) && prove(ctx, g.b);
      case Op::Imp: {
        std::vector<int> next = ctx;
        next.push_back(g.a);
        return prove(std::move(next), g.b);
      }
      case Op::Atom:
        if (contains(ctx, goal)) return true;
        break;
      case Op::Or:
        if (prove(ctx, g.a) || prove(ctx, g.b)) return true;
        break;
      case Op::Bot:
        break;
    }

    // Left rule for nested implications: ((C -> D) -> B).
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Node n = nodes_[ctx[i]];
      if (n.op != Op::Imp || nodes_[n.a].op != Op::Imp) continue;
      const Node inner = nodes_[n.a];
      if (prove(without(ctx, i, {node(Op::Imp, inner.b, n.b)}), n.a) &&
          prove(without(ctx, i, {n.b}), goal))
        return true;
    }
    return false;
  }

  struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = v.size();
      for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x);
      return h;
    }
  };

  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, int>, int> index_;
  std::map<std::string, int> atoms_;
  std::unordered_map<std::vector<int>, bool, KeyHash> memo_;
};

}  // namespace

bool taut_int(const Formula& f) { return G4ip().theorem(f); }

bool taut(Logic logic, const Formula& f) {
  return logic == Logic::Classical ? taut_classical(f) : taut_int(f);
}

bool entails(Logic logic, const Formula& premise, const Formula& conclusion) {
  return taut(logic, Formula::imp(premise, conclusion));
}

// --- Kripke models ------------------------------------------------------------

bool KripkeModel::is_preorder() const {
  for (int i = 0; i < worlds; ++i) {
    if (!leq[i][i]) return false;
    for (int j = 0; j < worlds; ++j)
      for (int k = 0; k < worlds; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) return false;
  }
  return true;
}

bool KripkeModel::persistent() const {
  for (int i = 0; i < worlds; ++i)
    for (int j = 0; j < worlds; ++j)
      if (leq[i][j] && !std::includes(valuation[j].begin(), valuation[j].end(),
                                      valuation[i].begin(), valuation[i].end()))
        return false;
  return true;
}

bool forces(const KripkeModel& m, int w, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return m.valuation[w].count(f.name()) > 0;
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bot: return false;
    case Formula::Kind::And: return forces(m, w, f.lhs()) && forces(m, w, f.rhs());
    case Formula::Kind::Or: return forces(m, w, f.lhs()) || forces(m, w, f.rhs());
    case Formula::Kind::Not:
      for (int v = 0; v < m.worlds; ++v)
        if (m.leq[w][v] && forces(m, v, f.lhs())) return false;
      return true;
    case Formula::Kind::Imp:
      for (int v = 0; v < m.worlds; ++v)
        if (m.leq[w][v] && forces(m, v, f.lhs()) && !forces(m, v, f.rhs()))
          return false;
      return true;
  }
  return false;
}

namespace {

using Mask = std::uint32_t;

struct Frame {
  int n;
  std::vector<Mask> up;  // up[w]: worlds at or above w
};

// Rooted frames whose order refines the numeric order of world labels; every
// finite rooted poset has such a labelling.
std::vector<Frame> rooted_frames(int n) {
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) free_pairs.emplace_back(i, j);
  std::vector<Frame> out;
  const std::uint64_t combos = std::uint64_t{1} << free_pairs.size();
  for (std::uint64_t bits = 0; bits < combos; ++bits) {
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) le[i][i] = true;
    for (int j = 0; j < n; ++j) le[0][j] = true;
    for (std::size_t k = 0; k < free_pairs.size(); ++k)
      if ((bits >> k) & 1) le[free_pairs[k].first][free_pairs[k].second] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        for (int k = 0; k < n && transitive; ++k)
          if (le[i][j] && le[j][k] && !le[i][k]) transitive = false;
    if (!transitive) continue;
    Frame fr{n, std::vector<Mask>(n, 0)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][j]) fr.up[i] |= Mask{1} << j;
    out.push_back(std::move(fr));
  }
  return out;
}

std::vector<Mask> up_sets(const Frame& fr) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << fr.n); ++s) {
    bool closed = true;
    for (int w = 0; w < fr.n && closed; ++w)
      if (((s >> w) & 1) && (fr.up[w] & ~s)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

Mask truth_set(const Formula& f, const Frame& fr,
               const std::map<std::string, Mask>& val) {
  const Mask all = (Mask{1} << fr.n) - 1;
  auto arrow = [&](Mask a, Mask b) {
    Mask out = 0;
    for (int w = 0; w < fr.n; ++w)
      if ((fr.up[w] & a & ~b) == 0) out |= Mask{1} << w;
    return out;
  };
  switch (f.kind()) {
    case Formula::Kind::Atom: return val.at(f.name());
    case Formula::Kind::Top: return all;
    case Formula::Kind::Bot: return 0;
    case Formula::Kind::Not: return arrow(truth_set(f.lhs(), fr, val), 0);
    case Formula::Kind::And:
      return truth_set(f.lhs(), fr, val) & truth_set(f.rhs(), fr, val);
    case Formula::Kind::Or:
      return truth_set(f.lhs(), fr, val) | truth_set(f.rhs(), fr, val);
    case Formula::Kind::Imp:
      return arrow(truth_set(f.lhs(), fr, val), truth_set(f.rhs(), fr, val));
  }
  return 0;
}

KripkeModel to_model(const Frame& fr, const std::map<std::string, Mask>& val) {
  KripkeModel m;
  m.worlds = fr.n;
  m.leq.assign(fr.n, std::vector<bool>(fr.n, false));
  m.valuation.assign(fr.n, {});
  for (int i = 0; i < fr.n; ++i)
    for (int j = 0; j < fr.n; ++j) m.leq[i][j] = (fr.up[i] >> j) & 1;
  for (const auto& [name, mask] : val)
    for (int w = 0; w < fr.n; ++w)
      if ((mask >> w) & 1) m.valuation[w].insert(name);
  return m;
}

}  // namespace

std::optional<KripkeModel> kripke_countermodel(const Formula& f,
                                               int max_worlds) {
  max_worlds = std::min(max_worlds, 5);
  auto names = f.atoms();
  std::vector<std::string> atoms(names.begin(), names.end());
  for (int n = 1; n <= max_worlds; ++n) {
    for (const Frame& fr : rooted_frames(n)) {
      const auto ups = up_sets(fr);
      std::vector<std::size_t> choice(atoms.size(), 0);
      std::map<std::string, Mask> val;
      for (;;) {
        for (std::size_t i = 0; i < atoms.size(); ++i)
          val[atoms[i]] = ups[choice[i]];
        if ((truth_set(f, fr, val) & 1) == 0) return to_model(fr, val);
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == ups.size()) choice[i++] = 0;
        if (i == choice.size()) break;
      }
    }
  }
  return std::nullopt;
}

std::string print_kripke(const KripkeModel& m) {
  std::string s = "worlds: " + std::to_string(m.worlds) + "; order: ";
  bool first = true;
  for (int i = 0; i < m.worlds; ++i)
    for (int j = 0; j < m.worlds; ++j) {
      if (!m.leq[i][j]) continue;
      if (!first) s += ", ";
      first = false;
      s += std::to_string(i) + "<=" + std::to_string(j);
    }
  s += "; val: ";
  for (int w = 0; w < m.worlds; ++w) {
    if (w) s += ", ";
    s += std::to_string(w) + ":{";
    bool f = true;
    for (const auto& a : m.valuation[w]) {
      if (!f) s += ',';
      f = false;
      s += a;
    }
    s += '}';
  }
  return s;
}

}  // namespace eg
