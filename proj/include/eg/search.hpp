#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eg/calculus.hpp"

namespace eg {

struct SearchBounds {
  int max_depth = 12;
  // Contents allowed for Insert and LoopAdd. Empty means every sub-area and
  // every single item of the two endpoint graphs.
  std::vector<Graph> vocabulary;
  // Node expansions allowed over the whole search before BoundsExceeded.
  std::size_t max_visited = 4'000'000;
  // Intermediate graphs may exceed the larger endpoint by this many nodes
  // (atoms + scrolls + loops) ...
  std::size_t size_slack = 8;
  // ... and by this many levels of nesting.
  std::size_t depth_slack = 1;
  std::size_t max_wrap_items = 2;
  // Drop states that cannot entail the goal (or be entailed by the start).
  // Every rule is sound, so no derivation passes through such a state.
  bool semantic_pruning = true;
};

struct SearchStats {
  std::size_t expanded = 0;
  int depth_reached = 0;
};

// Bidirectional breadth-first search over canonicalized states: forward
// from `from` with the rules, backward from `goal` with their inverses, one
// layer at a time (smaller frontier first) until the layers meet or their
// depths add up to max_depth. The returned script has been re-checked with
// check_script and ends in a graph equal to `goal`.
// Returns nullopt when no derivation exists within the bounds; throws
// BoundsExceeded when max_visited runs out first.
std::optional<ProofScript> derive(System s, const Graph& from,
                                  const Graph& goal, const SearchBounds& b,
                                  SearchStats* stats = nullptr);

// Every sub-area and every single item of the given graphs, without
// duplicates (up to multiset equality) and without the blank graph.
std::vector<Graph> default_vocabulary(const std::vector<Graph>& sources);

}  // namespace eg
