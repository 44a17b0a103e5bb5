#pragma once

// Illative transformations on existential graphs.
//
// Both systems share erasure (even areas), insertion (odd areas), iteration
// and deiteration. The classical system adds double-cut introduction and
// elimination. The intuitionistic system replaces the double cut with
// scroll wrapping (`S` <-> `[ | S]`), and adds loop addition (even), loop
// removal (odd) and detachment of a one-loop scroll into two nested cuts
// (even, one way only).

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eg/error.hpp"
#include "eg/graph.hpp"

namespace eg {

enum class System { Classical, Intuitionistic };

inline Dialect dialect_of(System s) {
  return s == System::Classical ? Dialect::Classical : Dialect::Intuitionistic;
}
System parse_system(std::string_view text);
std::string to_string(System s);

namespace rule {

struct Erase { Path item; };
struct Insert { Path area; Graph graph; };
struct Iterate { Path source; Path target; };
struct Deiterate { Path item; Path witness; };
struct DoubleCutIntro { Path area; std::set<std::size_t> items; };
struct DoubleCutElim { Path item; };
struct ScrollWrap { Path area; std::set<std::size_t> items; };
struct ScrollUnwrap { Path item; };
struct LoopAdd { Path item; Graph graph; };
struct LoopRemove { Path item; std::size_t loop; };
struct Detach { Path item; };

}  // namespace rule

using RuleInstance =
    std::variant<rule::Erase, rule::Insert, rule::Iterate, rule::Deiterate,
                 rule::DoubleCutIntro, rule::DoubleCutElim, rule::ScrollWrap,
                 rule::ScrollUnwrap, rule::LoopAdd, rule::LoopRemove,
                 rule::Detach>;

class IllegalRule : public Error {
 public:
  enum class Reason {
    WrongPolarity,
    BadWitness,
    DonutNotEmpty,
    WrongSystem,
    InvalidPath,
    BadTarget,
    NotApplicable,
    IllFormedContents,
  };

  IllegalRule(Reason reason, const std::string& detail)
      : Error(describe(reason) + ": " + detail), reason_(reason) {}
  Reason reason() const { return reason_; }
  static std::string describe(Reason r);

 private:
  Reason reason_;
};

Graph apply_rule(System s, const Graph& g, const RuleInstance& r);

// The script-format spelling of a rule, e.g. `iterate 0 -> 1.outer`.
std::string print_rule(const RuleInstance& r);

struct RuleBounds {
  // Candidate contents for Insert and LoopAdd.
  std::vector<Graph> vocabulary;
  // Largest item subset wrapped by DoubleCutIntro / ScrollWrap.
  std::size_t max_wrap_items = 2;
};

// Every returned instance is accepted by apply_rule. The order is fixed:
// rule kinds in declaration order, then paths in pre-order.
std::vector<RuleInstance> enumerate_rule_instances(System s, const Graph& g,
                                                   const RuleBounds& bounds);

// --- proof scripts ----------------------------------------------------------

struct ScriptStep {
  RuleInstance rule;
  std::optional<Graph> expect;
};

struct ProofScript {
  System system = System::Classical;
  Graph start;
  std::vector<ScriptStep> steps;
};

struct CheckReport {
  enum class Failure { None, IllFormedStart, IllegalRule, ExpectationMismatch };

  Failure failure = Failure::None;
  std::optional<std::size_t> failed_step;  // 0-based
  std::string reason;
  Graph final_graph;
  std::vector<Graph> trace;  // graph after each successful step

  bool valid() const { return failure == Failure::None; }
};

CheckReport check_script(const ProofScript& ps);

// Line-oriented script text; `#` starts a comment. Throws SyntaxError with
// the 1-based line number in the message.
ProofScript parse_script(std::string_view text);
std::string print_script(const ProofScript& ps);

}  // namespace eg
