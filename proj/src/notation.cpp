#include "eg/notation.hpp"

#include <cctype>
#include <charconv>

#include "eg/error.hpp"

namespace eg {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string quote(char c) { return std::string("'") + c + "'"; }

class GraphParser {
 public:
  GraphParser(std::string_view text, Dialect d) : s_(text), d_(d) {}

  Graph parse() {
    Graph g = area();
    skip();
    if (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '|') throw SyntaxError("stray '|' outside brackets", pos_);
      throw SyntaxError("unbalanced " + quote(c), pos_);
    }
    return g;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }

  Graph area() {
    Graph g;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) return g;
      char c = s_[pos_];
      if (c == ')' || c == ']' || c == '|') return g;
      g.items.push_back(item());
    }
  }

  Item item() {
    std::size_t start = pos_;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Graph inner = area();
      expect(')', start);
      return Item::cut(std::move(inner));
    }
    if (c == '[') {
      ++pos_;
      Graph outer = area();
      std::vector<Graph> loops;
      while (pos_ < s_.size() && s_[pos_] == '|') {
        if (d_ == Dialect::Classical)
          throw DialectError("scroll loop in classical graph at position " +
                             std::to_string(pos_));
        ++pos_;
        loops.push_back(area());
      }
      expect(']', start);
      return Item::scroll(std::move(outer), std::move(loops));
    }
    if (is_ident_start(c)) {
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      return Item::atom(std::string(s_.substr(start, pos_ - start)));
    }
    throw SyntaxError("unexpected character " + quote(c), pos_);
  }

  void expect(char close, std::size_t open_pos) {
    if (pos_ >= s_.size())
      throw SyntaxError("unclosed " + quote(s_[open_pos]), open_pos);
    if (s_[pos_] != close) {
      if (s_[pos_] == '|')
        throw SyntaxError("stray '|' inside parentheses", pos_);
      throw SyntaxError("expected " + quote(close) + " but found " +
                            quote(s_[pos_]),
                        pos_);
    }
    ++pos_;
  }

  std::string_view s_;
  Dialect d_;
  std::size_t pos_ = 0;
};

void print_area(const Graph& g, std::string& out);

void print_item_into(const Item& it, std::string& out) {
  if (it.is_atom()) {
    out += it.name;
    return;
  }
  if (it.loops.empty()) {
    out += '(';
    print_area(it.outer, out);
    out += ')';
    return;
  }
  out += '[';
  print_area(it.outer, out);
  for (const auto& loop : it.loops) {
    out += " |";
    if (!loop.empty()) {
      out += ' ';
      print_area(loop, out);
    }
  }
  out += ']';
}

void print_area(const Graph& g, std::string& out) {
  for (std::size_t i = 0; i < g.items.size(); ++i) {
    if (i) out += ' ';
    print_item_into(g.items[i], out);
  }
}

// --- formulas ---------------------------------------------------------------

enum class Tok { Ident, Top, Bot, Not, And, Or, Imp, LParen, RParen, End };

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : s_(text) { advance(); }

  Formula parse() {
    Formula f = implication();
    if (tok_ != Tok::End) throw SyntaxError("unexpected token", tok_pos_);
    return f;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
    tok_pos_ = pos_;
    if (pos_ >= s_.size()) {
      tok_ = Tok::End;
      return;
    }
    char c = s_[pos_];
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      ident_ = std::string(s_.substr(start, pos_ - start));
      tok_ = ident_ == "T" ? Tok::Top : ident_ == "F" ? Tok::Bot : Tok::Ident;
      return;
    }
    ++pos_;
    switch (c) {
      case '~': tok_ = Tok::Not; return;
      case '&': tok_ = Tok::And; return;
      case '|': tok_ = Tok::Or; return;
      case '(': tok_ = Tok::LParen; return;
      case ')': tok_ = Tok::RParen; return;
      case '-':
        if (pos_ < s_.size() && s_[pos_] == '>') {
          ++pos_;
          tok_ = Tok::Imp;
          return;
        }
        break;
      default:
        break;
    }
    throw SyntaxError("unexpected character " + quote(c), tok_pos_);
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (tok_ != Tok::Imp) return lhs;
    advance();
    return Formula::imp(std::move(lhs), implication());
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (tok_ == Tok::Or) {
      advance();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (tok_ == Tok::And) {
      advance();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    switch (tok_) {
      case Tok::Not:
        advance();
        return Formula::neg(unary());
      case Tok::Ident: {
        Formula f = Formula::atom(ident_);
        advance();
        return f;
      }
      case Tok::Top:
        advance();
        return Formula::top();
      case Tok::Bot:
        advance();
        return Formula::bot();
      case Tok::LParen: {
        std::size_t open = tok_pos_;
        advance();
        Formula f = implication();
        if (tok_ != Tok::RParen) throw SyntaxError("unclosed '('", open);
        advance();
        return f;
      }
      case Tok::End:
        throw SyntaxError("unexpected end of formula", tok_pos_);
      default:
        throw SyntaxError("unexpected token", tok_pos_);
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t tok_pos_ = 0;
  Tok tok_ = Tok::End;
  std::string ident_;
};

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Imp: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

void print_formula_into(const Formula& f, std::string& out);

void print_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print_formula_into(f, out);
  if (parens) out += ')';
}

void print_formula_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: out += f.name(); return;
    case Formula::Kind::Top: out += 'T'; return;
    case Formula::Kind::Bot: out += 'F'; return;
    case Formula::Kind::Not:
      out += '~';
      print_operand(f.lhs(), precedence(f.lhs()) < 4, out);
      return;
    default:
      break;
  }
  int p = precedence(f);
  const char* op = f.kind() == Formula::Kind::And  ? " & "
                   : f.kind() == Formula::Kind::Or ? " | "
                                                   : " -> ";
  bool right_assoc = f.kind() == Formula::Kind::Imp;
  int lp = precedence(f.lhs());
  int rp = precedence(f.rhs());
  print_operand(f.lhs(), right_assoc ? lp <= p : lp < p, out);
  out += op;
  print_operand(f.rhs(), right_assoc ? rp < p : rp <= p, out);
}

}  // namespace

Graph parse_graph(std::string_view text, Dialect d) {
  return GraphParser(text, d).parse();
}

std::string print_graph(const Graph& g) {
  std::string out;
  print_area(g, out);
  return out;
}

std::string print_item(const Item& item) {
  std::string out;
  print_item_into(item, out);
  return out;
}

Formula parse_formula(std::string_view text) {
  return FormulaParser(text).parse();
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_formula_into(f, out);
  return out;
}

Path parse_path(std::string_view text) {
  Path p;
  std::size_t i = 0;
  while (i < text.size() && is_space(text[i])) ++i;
  std::size_t end = text.size();
  while (end > i && is_space(text[end - 1])) --end;
  if (end == i) throw SyntaxError("empty path", i);
  if (text.substr(i, end - i) == "/") return p;

  bool want_index = true;
  std::size_t pending = 0;
  for (;;) {
    std::size_t dot = text.find('.', i);
    if (dot == std::string_view::npos || dot > end) dot = end;
    std::string_view tok = text.substr(i, dot - i);
    if (want_index) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw SyntaxError("expected item index in path", i);
      pending = v;
    } else if (tok == "outer") {
      p.steps.push_back({pending, Region::outer()});
    } else if (tok.size() > 4 && tok.substr(0, 4) == "loop") {
      std::size_t k = 0;
      auto digits = tok.substr(4);
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw SyntaxError("bad loop selector in path", i);
      p.steps.push_back({pending, Region::loop_at(k)});
    } else {
      throw SyntaxError("expected 'outer' or 'loopK' in path", i);
    }
    if (dot == end) break;
    i = dot + 1;
    want_index = !want_index;
  }
  if (want_index) p.item = pending;
  return p;
}

std::string print_path(const Path& p) {
  std::string s;
  for (const auto& st : p.steps) {
    if (!s.empty()) s += '.';
    s += std::to_string(st.item);
    s += '.';
    s += st.region.is_outer() ? std::string("outer")
                              : "loop" + std::to_string(st.region.loop);
  }
  if (p.item) {
    if (!s.empty()) s += '.';
    s += std::to_string(*p.item);
  }
  return s.empty() ? "/" : s;
}

Dialect parse_dialect(std::string_view text) {
  if (text == "classical") return Dialect::Classical;
  if (text == "intuitionistic") return Dialect::Intuitionistic;
  throw Error("unknown dialect '" + std::string(text) +
              "' (expected classical or intuitionistic)");
}

std::string to_string(Dialect d) {
  return d == Dialect::Classical ? "classical" : "intuitionistic";
}

}  // namespace eg
