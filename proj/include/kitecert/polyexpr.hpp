#pragma once

// Text grammar for exact polynomials:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+' | '-') factor | power
//   power  := atom ('^' <nonnegative integer>)?
//   atom   := <rational> | <variable> | 'pi2' | 'sqrt' '(' <rational> ')'
//           | '(' expr ')'
//
// Rational literals are "p" or "p/q" (never decimals).  'pi2' is the square of
// the circle constant; 'sqrt(r)' is the single square root the coefficient
// ring supports — two different radicands in one expression are an error.
// Exactly two variable identifiers are allowed, mapping to the first and
// second rectangle axes.  print() emits a canonical sum-of-monomials form that
// parses back to an identical polynomial.

#include "kitecert/poly2.hpp"
#include "kitecert/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kitecert::polyexpr {

namespace detail {

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;

  explicit Lexer(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      throw std::invalid_argument(std::string("expected '") + c + "' at offset " +
                                  std::to_string(pos) + " in polynomial");
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool at_ident() {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string integer_digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (pos == start)
      throw std::invalid_argument("expected an integer at offset " +
                                  std::to_string(pos) + " in polynomial");
    return src.substr(start, pos - start);
  }

  // "p" or "p/q"; the sign lives in the unary layer of the grammar.
  Rational rational() {
    const Integer n{integer_digits()};
    if (pos < src.size() && src[pos] == '/') {
      ++pos;
      const Integer d{integer_digits()};
      if (d == 0) throw std::invalid_argument("zero denominator in polynomial");
      return Rational(n, d);
    }
    return Rational(n);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    return src.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lex;
  std::string xname, yname;

  Parser(const std::string& src, std::string xn, std::string yn)
      : lex(src), xname(std::move(xn)), yname(std::move(yn)) {}

  Poly2 k(const Rational& r) const {
    return Poly2::constant(Coeff::rational(r), xname, yname, Rational(0));
  }

  Poly2 atom() {
    if (lex.accept('(')) {
      Poly2 inner = expr();
      lex.expect(')');
      return inner;
    }
    if (lex.at_digit()) return k(lex.rational());
    if (lex.at_ident()) {
      const std::string id = lex.identifier();
      if (id == "pi2")
        return Poly2::constant(Coeff::t_times(Rational(1)), xname, yname,
                               Rational(0));
      if (id == "sqrt") {
        lex.expect('(');
        const Rational r = lex.rational();
        lex.expect(')');
        if (r == 0) return Poly2::zero(xname, yname, Rational(0));
        return Poly2::constant(Coeff::sqrt_m_times(Rational(1)), xname, yname, r);
      }
      if (id == xname) return Poly2::var_x(xname, yname, Rational(0));
      if (id == yname) return Poly2::var_y(xname, yname, Rational(0));
      throw std::invalid_argument("unknown identifier '" + id +
                                  "' in polynomial (variables are '" + xname +
                                  "' and '" + yname + "')");
    }
    throw std::invalid_argument("unexpected character at offset " +
                                std::to_string(lex.pos) + " in polynomial");
  }

  Poly2 power() {
    Poly2 base = atom();
    if (!lex.accept('^')) return base;
    const std::string digits = lex.integer_digits();
    if (digits.size() > 2)
      throw std::invalid_argument("exponent too large in polynomial");
    const int e = std::stoi(digits);
    if (e > 64) throw std::invalid_argument("exponent too large in polynomial");
    return base.pow(static_cast<unsigned>(e));
  }

  Poly2 factor() {
    if (lex.accept('-')) return -factor();
    if (lex.accept('+')) return factor();
    return power();
  }

  Poly2 term() {
    Poly2 acc = factor();
    while (lex.accept('*')) acc = acc * factor();
    return acc;
  }

  Poly2 expr() {
    Poly2 acc = term();
    for (;;) {
      if (lex.accept('+'))
        acc = acc + term();
      else if (lex.accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }
};

inline std::string rat_str(const Rational& r) {
  return den(r) == 1 ? num(r).str() : num(r).str() + "/" + den(r).str();
}

// One coefficient as a sum of rational multiples of 1, pi2, pi2^2, and their
// sqrt(m) companions; parenthesized when it has several addends.
inline std::string coeff_str(const Coeff& c, const Rational& m) {
  std::vector<std::string> parts;
  const auto push = [&parts](const Rational& r, const std::string& suffix) {
    if (r == 0) return;
    parts.push_back(suffix.empty() ? rat_str(r) : rat_str(r) + "*" + suffix);
  };
  push(c.u.c0, "");
  push(c.u.c1, "pi2");
  push(c.u.c2, "pi2^2");
  const std::string root = "sqrt(" + rat_str(m) + ")";
  push(c.v.c0, root);
  push(c.v.c1, "pi2*" + root);
  push(c.v.c2, "pi2^2*" + root);
  if (parts.empty()) return "0";
  if (parts.size() == 1) return parts[0];
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " + ";
    out += parts[i];
  }
  return out + ")";
}

}  // namespace detail

// Parses an expression over the two named variables into a Poly2.  The
// radicand of any sqrt() atoms becomes the polynomial's ring radicand; an
// unused radicand is dropped so that print/parse round-trips are identities.
inline Poly2 parse(const std::string& src, const std::string& xname = "x",
                   const std::string& yname = "y") {
  if (xname == yname)
    throw std::invalid_argument("the two variable names must differ");
  detail::Parser p(src, xname, yname);
  Poly2 out = p.expr();
  if (!p.lex.done())
    throw std::invalid_argument("trailing input at offset " +
                                std::to_string(p.lex.pos) + " in polynomial");
  out.xname = xname;
  out.yname = yname;
  bool uses_root = false;
  for (const auto& row : out.rows)
    for (const auto& c : row)
      if (!c.v.is_zero()) uses_root = true;
  if (!uses_root) out.m = Rational(0);
  return out;
}

// Canonical form: monomials in ascending (x-degree, y-degree) order, every
// coefficient explicit, rationals as p or p/q.  parse(print(p)) == p.
inline std::string print(const Poly2& p) {
  std::vector<std::string> terms;
  for (int i = 0; i <= p.degree_x(); ++i) {
    for (int j = 0; j <= p.degree_y(); ++j) {
      const Coeff c = p.at(i, j);
      if (c.u.is_zero() && c.v.is_zero()) continue;
      std::string mono;
      if (i > 0) mono = i == 1 ? p.xname : p.xname + "^" + std::to_string(i);
      if (j > 0) {
        if (!mono.empty()) mono += "*";
        mono += j == 1 ? p.yname : p.yname + "^" + std::to_string(j);
      }
      const std::string cs = detail::coeff_str(c, p.m);
      terms.push_back(mono.empty() ? cs : cs + "*" + mono);
    }
  }
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i];
  }
  return out;
}

}  // namespace kitecert::polyexpr
