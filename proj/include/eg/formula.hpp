#pragma once

#include <memory>
#include <set>
#include <string>

namespace eg {

// Immutable propositional formula over named atoms. Copies share structure.
class Formula {
 public:
  enum class Kind { Atom, Top, Bot, Not, And, Or, Imp };

  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula neg(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  // Operand of Not, left operand of binary connectives.
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  bool is_binary() const {
    return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Imp;
  }
  std::size_t connectives() const;
  std::set<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::unique_ptr<Formula> lhs;
    std::unique_ptr<Formula> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::string name, const Formula* a,
                      const Formula* b);

  std::shared_ptr<const Node> node_;
};

}  // namespace eg
