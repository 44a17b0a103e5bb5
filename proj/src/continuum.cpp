#include "eg/continuum.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace eg {

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal a;
  if (n > 0) a.terms.push_back({Ordinal{}, n});
  return a;
}

Ordinal Ordinal::omega_pow(Ordinal exponent, std::uint64_t coefficient) {
  Ordinal a;
  if (coefficient > 0) a.terms.push_back({std::move(exponent), coefficient});
  return a;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms == b.terms; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms[i].exponent <=> b.terms[i].exponent; c != 0) return c;
    if (auto c = a.terms[i].coefficient <=> b.terms[i].coefficient; c != 0)
      return c;
  }
  return a.terms.size() <=> b.terms.size();
}

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

namespace {

std::uint64_t checked_sum(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw Error("ordinal coefficient overflow");
  return r;
}

}  // namespace

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms.front().exponent;
  Ordinal r;
  for (const auto& t : a.terms) {
    auto c = t.exponent <=> lead;
    if (c > 0) {
      r.terms.push_back(t);
    } else {
      if (c == 0) {
        r.terms.push_back({lead, checked_sum(t.coefficient, b.terms.front().coefficient)});
        r.terms.insert(r.terms.end(), b.terms.begin() + 1, b.terms.end());
        return r;
      }
      break;
    }
  }
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return r;
}

Ordinal ord_sub_left(const Ordinal& b, const Ordinal& d) {
  if (b > d)
    throw Underflow("cannot subtract " + print_ordinal(b) + " from " +
                    print_ordinal(d) + " on the left");
  std::size_t i = 0;
  while (i < b.terms.size() && b.terms[i] == d.terms[i]) ++i;
  Ordinal g;
  if (i < b.terms.size() && b.terms[i].exponent == d.terms[i].exponent) {
    g.terms.push_back({d.terms[i].exponent,
                       d.terms[i].coefficient - b.terms[i].coefficient});
    ++i;
  }
  g.terms.insert(g.terms.end(), d.terms.begin() + static_cast<std::ptrdiff_t>(i),
                 d.terms.end());
  return g;
}

// --- literals ----------------------------------------------------------------

namespace {

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  std::uint64_t natural() {
    skip();
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec == std::errc::result_out_of_range) fail("number too large");
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) {
    if (pos_ >= s_.size()) throw SyntaxError(what + ", found end of input", pos_);
    throw SyntaxError(what + ", found '" + s_[pos_] + "'", pos_);
  }

  Ordinal ordinal() {
    Ordinal a = term();
    while (accept('+')) a = ord_add(a, term());
    return a;
  }

 private:
  Ordinal term() {
    if (peek_digit()) return Ordinal::nat(natural());
    if (!accept('w')) fail("expected an ordinal term");
    Ordinal e = Ordinal::nat(1);
    if (accept('^')) {
      if (peek_digit()) {
        e = Ordinal::nat(natural());
      } else if (accept('w')) {
        e = Ordinal::omega_pow(Ordinal::nat(1));
      } else if (accept('(')) {
        e = ordinal();
        expect(')');
      } else {
        fail("expected an exponent");
      }
    }
    std::uint64_t k = 1;
    if (accept('*')) {
      k = natural();
      if (k == 0) throw SyntaxError("coefficient must be positive", pos_ - 1);
    }
    return Ordinal::omega_pow(std::move(e), k);
  }

  std::string_view s_;
  std::size_t pos_ = 0;

  friend class ElementReader;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  Reader r(text);
  Ordinal a = r.ordinal();
  if (!r.at_end()) r.fail("unexpected input after ordinal");
  return a;
}

std::string print_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal::nat(1)) {
      const bool natural = t.exponent.terms.size() == 1 &&
                           t.exponent.terms[0].exponent.is_zero();
      const bool omega = t.exponent == Ordinal::omega_pow(Ordinal::nat(1));
      out += '^';
      if (natural || omega)
        out += print_ordinal(t.exponent);
      else
        out += "(" + print_ordinal(t.exponent) + ")";
    }
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

// --- elements ----------------------------------------------------------------

std::string to_string(LexRelation r) {
  switch (r) {
    case LexRelation::Less: return "less";
    case LexRelation::Greater: return "greater";
    case LexRelation::Equal: return "equal";
    case LexRelation::ProperPrefix: return "prefix";
    case LexRelation::ProperExtension: return "extension";
  }
  return "?";
}

ContinuumElement elem_canonicalize(const ContinuumElement& e) {
  if (e.pieces.empty()) throw EmptyElement("element has no pieces");
  ContinuumElement out;
  for (const auto& p : e.pieces) {
    if (p.len.is_zero()) throw EmptyElement("element piece of length 0");
    if (!out.pieces.empty() && out.pieces.back().value == p.value)
      out.pieces.back().len = ord_add(out.pieces.back().len, p.len);
    else
      out.pieces.push_back(p);
  }
  return out;
}

Ordinal elem_domain(const ContinuumElement& e) {
  Ordinal d;
  for (const auto& p : e.pieces) d = ord_add(d, p.len);
  return d;
}

LexRelation lex_compare(const ContinuumElement& x, const ContinuumElement& y) {
  std::size_t i = 0, j = 0;
  Ordinal ri, rj;  // unread length of the current pieces
  if (!x.pieces.empty()) ri = x.pieces[0].len;
  if (!y.pieces.empty()) rj = y.pieces[0].len;
  while (i < x.pieces.size() && j < y.pieces.size()) {
    const Rational& a = x.pieces[i].value;
    const Rational& b = y.pieces[j].value;
    if (a != b) return a < b ? LexRelation::Less : LexRelation::Greater;
    auto c = ri <=> rj;
    if (c < 0) {
      rj = ord_sub_left(ri, rj);
    } else if (c > 0) {
      ri = ord_sub_left(rj, ri);
    }
    if (c <= 0 && ++i < x.pieces.size()) ri = x.pieces[i].len;
    if (c >= 0 && ++j < y.pieces.size()) rj = y.pieces[j].len;
  }
  const bool x_done = i >= x.pieces.size(), y_done = j >= y.pieces.size();
  if (x_done && y_done) return LexRelation::Equal;
  return x_done ? LexRelation::ProperPrefix : LexRelation::ProperExtension;
}

bool extends(const ContinuumElement& x, const ContinuumElement& y) {
  return lex_compare(x, y) == LexRelation::ProperExtension;
}

ContinuumElement tail(const ContinuumElement& x, const ContinuumElement& y) {
  if (!extends(y, x))
    throw NotInMonad(print_element(y) + " does not properly extend " +
                     print_element(x));
  Ordinal skip = elem_domain(x);
  ContinuumElement out;
  for (const auto& p : y.pieces) {
    if (skip.is_zero()) {
      out.pieces.push_back(p);
    } else if (p.len <= skip) {
      skip = ord_sub_left(p.len, skip);
    } else {
      out.pieces.push_back({ord_sub_left(skip, p.len), p.value});
      skip = Ordinal{};
    }
  }
  return elem_canonicalize(out);
}

ContinuumElement concat(const ContinuumElement& x, const ContinuumElement& z) {
  ContinuumElement out = x;
  out.pieces.insert(out.pieces.end(), z.pieces.begin(), z.pieces.end());
  return elem_canonicalize(out);
}

namespace {

class ElementReader {
 public:
  explicit ElementReader(std::string_view s) : r_(s) {}

  ContinuumElement element() {
    ContinuumElement e;
    if (r_.at_end()) r_.fail("expected '['");
    while (!r_.at_end()) {
      r_.expect('[');
      Ordinal len = r_.ordinal();
      r_.expect(':');
      Rational v = rational();
      r_.expect(']');
      e.pieces.push_back({std::move(len), v});
    }
    return elem_canonicalize(e);
  }

 private:
  Rational rational() {
    const bool negative = r_.accept('-');
    if (!r_.peek_digit()) r_.fail("expected a rational");
    std::uint64_t num = r_.natural();
    std::uint64_t den = 1;
    if (r_.accept('/')) {
      std::size_t at = r_.pos_;
      den = r_.natural();
      if (den == 0) throw SyntaxError("zero denominator", at);
    }
    constexpr auto kMax =
        static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    if (num > kMax || den > kMax) r_.fail("rational out of range");
    auto n = static_cast<std::int64_t>(num);
    return Rational(negative ? -n : n, static_cast<std::int64_t>(den));
  }

  Reader r_;
};

}  // namespace

ContinuumElement parse_element(std::string_view text) {
  return ElementReader(text).element();
}

std::string print_element(const ContinuumElement& e) {
  std::string out;
  for (const auto& p : e.pieces) {
    out += "[" + print_ordinal(p.len) + ":" + std::to_string(p.value.numerator());
    if (p.value.denominator() != 1)
      out += "/" + std::to_string(p.value.denominator());
    out += "]";
  }
  return out;
}

}  // namespace eg
