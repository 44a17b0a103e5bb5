#pragma once

// Ordinals below epsilon-zero in Cantor normal form, and ordinal-indexed
// sequences of rationals that are constant on finitely many pieces.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "eg/error.hpp"

namespace eg {

struct Ordinal {
  struct Term;
  // Strictly decreasing exponents, coefficients >= 1. Empty is zero.
  std::vector<Term> terms;

  static Ordinal zero() { return {}; }
  static Ordinal nat(std::uint64_t n);
  static Ordinal omega_pow(Ordinal exponent, std::uint64_t coefficient = 1);

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const Ordinal&, const Ordinal&);
  friend std::strong_ordering operator<=>(const Ordinal&, const Ordinal&);
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

Ordinal ord_add(const Ordinal& a, const Ordinal& b);
std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);
// The unique g with b + g = d. Throws Underflow when b > d.
Ordinal ord_sub_left(const Ordinal& b, const Ordinal& d);

// `0`, naturals, `w`, `w^e`, `w^e*k` and sums of these; an exponent is a
// natural, `w`, or a parenthesized ordinal. Sums need not be in normal
// form (`3+w` reads as `w`).
Ordinal parse_ordinal(std::string_view text);
std::string print_ordinal(const Ordinal& a);

using Rational = boost::rational<std::int64_t>;

struct Piece {
  Ordinal len;
  Rational value;

  friend bool operator==(const Piece&, const Piece&) = default;
};

struct ContinuumElement {
  std::vector<Piece> pieces;

  friend bool operator==(const ContinuumElement&,
                         const ContinuumElement&) = default;
};

enum class LexRelation { Less, Greater, Equal, ProperPrefix, ProperExtension };

std::string to_string(LexRelation r);

// Merges adjacent pieces with equal values. Throws EmptyElement when there
// are no pieces or a piece has length zero.
ContinuumElement elem_canonicalize(const ContinuumElement& e);
Ordinal elem_domain(const ContinuumElement& e);

// ProperPrefix: x is a strict initial restriction of y.
// ProperExtension: y is a strict initial restriction of x.
LexRelation lex_compare(const ContinuumElement& x, const ContinuumElement& y);

// x E y: x properly extends y.
bool extends(const ContinuumElement& x, const ContinuumElement& y);

// i -> y(dom(x) + i). Throws NotInMonad unless y properly extends x.
ContinuumElement tail(const ContinuumElement& x, const ContinuumElement& y);
ContinuumElement concat(const ContinuumElement& x, const ContinuumElement& z);

// `[len:value]` pieces, e.g. `[w:0][1:1/2]`. The result is canonical.
ContinuumElement parse_element(std::string_view text);
std::string print_element(const ContinuumElement& e);

}  // namespace eg
