#pragma once
// Quadratic polynomials in the distinguished transcendental t = pi^2, with
// exact rational coefficients. The coefficient ring of every certified
// polynomial is Q[t]/deg<=2 (optionally extended by one square root, see
// coeff.hpp); keeping t symbolic until the final interval collapse is what
// lets equality cases (constant terms that vanish identically) certify with
// exact zero bounds instead of tiny positive interval residue.

#include "kitecert/interval.hpp"
#include "kitecert/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace kitecert {

struct PiQuad {
  Rational c0{0}, c1{0}, c2{0};  // c0 + c1*t + c2*t^2

  PiQuad() = default;
  explicit PiQuad(Rational constant) : c0(std::move(constant)) {}
  PiQuad(Rational a0, Rational a1, Rational a2 = Rational(0))
      : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)) {}

  static PiQuad t() { return PiQuad(Rational(0), Rational(1)); }

  bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
  bool is_rational() const { return c1 == 0 && c2 == 0; }
  int degree() const { return c2 != 0 ? 2 : (c1 != 0 ? 1 : 0); }

  friend PiQuad operator+(const PiQuad& a, const PiQuad& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
  }
  friend PiQuad operator-(const PiQuad& a, const PiQuad& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
  }
  friend PiQuad operator-(const PiQuad& a) { return {-a.c0, -a.c1, -a.c2}; }
  friend PiQuad operator*(const PiQuad& a, const Rational& s) {
    return {a.c0 * s, a.c1 * s, a.c2 * s};
  }
  friend PiQuad operator*(const Rational& s, const PiQuad& a) { return a * s; }

  // Product, defined only while the result still has degree <= 2. The proof
  // catalog never leaves this ring; exceeding it indicates a construction bug,
  // not a numerical condition, hence the exception.
  friend PiQuad operator*(const PiQuad& a, const PiQuad& b) {
    const Rational d3 = a.c1 * b.c2 + a.c2 * b.c1;
    const Rational d4 = a.c2 * b.c2;
    if (d3 != 0 || d4 != 0)
      throw std::logic_error("PiQuad product leaves the degree-2 ring");
    return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0,
            a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
  }

  PiQuad& operator+=(const PiQuad& o) { return *this = *this + o; }
  PiQuad& operator-=(const PiQuad& o) { return *this = *this - o; }

  friend bool operator==(const PiQuad& a, const PiQuad& b) {
    return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
  }

  Rational eval(const Rational& tv) const { return c0 + c1 * tv + c2 * tv * tv; }

  // Exact range over t in [tiv.lo, tiv.hi]: a quadratic attains its extrema at
  // the interval endpoints or at the (rational) vertex -c1/(2 c2).
  RatInterval range(const RatInterval& tiv) const {
    Rational v1 = eval(tiv.lo), v2 = eval(tiv.hi);
    Rational lo = rmin(v1, v2), hi = rmax(v1, v2);
    if (c2 != 0) {
      const Rational vtx = -c1 / (2 * c2);
      if (tiv.lo < vtx && vtx < tiv.hi) {
        const Rational vv = eval(vtx);
        lo = rmin(lo, vv);
        hi = rmax(hi, vv);
      }
    }
    return RatInterval(lo, hi);
  }
};

}  // namespace kitecert
