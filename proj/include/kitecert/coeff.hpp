#pragma once
// Coefficient ring for certified polynomials: u + v*sqrt(m) where u and v are
// quadratics in t = pi^2 and m is a fixed nonnegative rational radicand shared
// by the whole polynomial. All arithmetic is exact; collapse to a rational
// interval happens once, at fold time, through enclosure().

#include "kitecert/constants.hpp"
#include "kitecert/interval.hpp"
#include "kitecert/piquad.hpp"

namespace kitecert {

// Shared context for collapsing exact coefficients to rational intervals.
struct EnclosureContext {
  RatInterval t;       // enclosure of pi^2
  RatInterval sqrt_m;  // enclosure of sqrt(m) (point [0,0] when m == 0)
  Rational m{0};

  static EnclosureContext make(const Rational& m, unsigned pi_bits, unsigned sqrt_bits) {
    EnclosureContext ctx;
    ctx.m = m;
    ctx.t = pi2_enclosure(pi_bits);
    ctx.sqrt_m = sqrt_enclosure(m, sqrt_bits);
    return ctx;
  }
};

struct Coeff {
  PiQuad u;  // rational-in-t part
  PiQuad v;  // multiplies sqrt(m)

  Coeff() = default;
  explicit Coeff(Rational r) : u(std::move(r)) {}
  explicit Coeff(PiQuad uu) : u(std::move(uu)) {}
  Coeff(PiQuad uu, PiQuad vv) : u(std::move(uu)), v(std::move(vv)) {}

  static Coeff rational(const Rational& r) { return Coeff(PiQuad(r)); }
  static Coeff t_times(const Rational& r) { return Coeff(PiQuad(Rational(0), r)); }
  static Coeff sqrt_m_times(const Rational& r) {
    return Coeff(PiQuad(), PiQuad(r));
  }

  bool is_zero() const { return u.is_zero() && v.is_zero(); }

  friend Coeff operator+(const Coeff& a, const Coeff& b) { return {a.u + b.u, a.v + b.v}; }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return {a.u - b.u, a.v - b.v}; }
  friend Coeff operator-(const Coeff& a) { return {-a.u, -a.v}; }
  friend Coeff operator*(const Coeff& a, const Rational& s) { return {a.u * s, a.v * s}; }
  friend Coeff operator*(const Rational& s, const Coeff& a) { return a * s; }
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.u == b.u && a.v == b.v; }

  // (u1 + v1 s)(u2 + v2 s) = (u1 u2 + m v1 v2) + (u1 v2 + v1 u2) s,  s^2 = m.
  static Coeff mul(const Coeff& a, const Coeff& b, const Rational& m) {
    return {a.u * b.u + (a.v * b.v) * m, a.u * b.v + a.v * b.u};
  }

  static Coeff pow(const Coeff& a, unsigned n, const Rational& m) {
    Coeff acc = rational(Rational(1));
    for (unsigned i = 0; i < n; ++i) acc = mul(acc, a, m);
    return acc;
  }

  RatInterval enclosure(const EnclosureContext& ctx) const {
    RatInterval out = u.range(ctx.t);
    if (!v.is_zero()) out += ctx.sqrt_m * v.range(ctx.t);
    return out;
  }
};

}  // namespace kitecert
