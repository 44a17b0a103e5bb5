#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eg/formula.hpp"
#include "eg/graph.hpp"

namespace eg {

enum class Logic { Classical, Intuitionistic };

inline Logic logic_of(Dialect d) {
  return d == Dialect::Classical ? Logic::Classical : Logic::Intuitionistic;
}

// Areas become right-nested conjunctions in canonical item order (blank is
// T). `[g0 | g1 ... gn]` becomes g0 -> (g1 | ... | gn); with no loops the
// scroll is a negation.
Formula graph_to_formula(const Graph& g);

Graph formula_to_graph(const Formula& f, Dialect d);

inline constexpr std::size_t kMaxTruthTableAtoms = 20;

using Assignment = std::map<std::string, bool>;

// Atoms missing from the assignment are false.
bool eval_classical(const Formula& f, const Assignment& a);
// Throws TooManyAtoms above kMaxTruthTableAtoms distinct atoms.
bool taut_classical(const Formula& f);

// Decides intuitionistic provability with a contraction-free sequent
// calculus; terminates on every input.
bool taut_int(const Formula& f);

bool taut(Logic logic, const Formula& f);
bool entails(Logic logic, const Formula& premise, const Formula& conclusion);

struct KripkeModel {
  int worlds = 0;
  // leq[i][j]: world j is accessible from (at or above) world i.
  std::vector<std::vector<bool>> leq;
  std::vector<std::set<std::string>> valuation;

  bool persistent() const;
  bool is_preorder() const;
};

bool forces(const KripkeModel& m, int world, const Formula& f);

// Smallest countermodel first (by number of worlds); worlds are rooted at 0
// and the formula fails at the root.
std::optional<KripkeModel> kripke_countermodel(const Formula& f,
                                               int max_worlds);

// `worlds: n; order: i<=j, ...; val: w:{a,b}, ...`
std::string print_kripke(const KripkeModel& m);

}  // namespace eg
