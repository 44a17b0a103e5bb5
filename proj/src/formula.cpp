#include "eg/formula.hpp"

namespace eg {

Formula Formula::make(Kind k, std::string name, const Formula* a,
                      const Formula* b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  if (a) n->lhs = std::make_unique<Formula>(*a);
  if (b) n->rhs = std::make_unique<Formula>(*b);
  return Formula(std::move(n));
}

Formula Formula::atom(std::string name) {
  return make(Kind::Atom, std::move(name), nullptr, nullptr);
}
Formula Formula::top() { return make(Kind::Top, {}, nullptr, nullptr); }
Formula Formula::bot() { return make(Kind::Bot, {}, nullptr, nullptr); }
Formula Formula::neg(Formula a) { return make(Kind::Not, {}, &a, nullptr); }
Formula Formula::conj(Formula a, Formula b) {
  return make(Kind::And, {}, &a, &b);
}
Formula Formula::disj(Formula a, Formula b) {
  return make(Kind::Or, {}, &a, &b);
}
Formula Formula::imp(Formula a, Formula b) {
  return make(Kind::Imp, {}, &a, &b);
}

std::size_t Formula::connectives() const {
  switch (kind()) {
    case Kind::Atom:
    case Kind::Top:
    case Kind::Bot:
      return 0;
    case Kind::Not:
      return 1 + lhs().connectives();
    default:
      return 1 + lhs().connectives() + rhs().connectives();
  }
}

namespace {
void gather(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.insert(f.name());
      break;
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      break;
    case Formula::Kind::Not:
      gather(f.lhs(), out);
      break;
    default:
      gather(f.lhs(), out);
      gather(f.rhs(), out);
  }
}
}  // namespace

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  gather(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.name() == b.name();
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::Not:
      return a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

}  // namespace eg
