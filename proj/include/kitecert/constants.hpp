#pragma once
// Certified enclosures of the two irrational quantities the toolkit needs:
// pi^2 and square roots of rationals. Everything is derived in exact rational
// arithmetic; the returned intervals are mathematically guaranteed to contain
// the true value.

#include "kitecert/interval.hpp"
#include "kitecert/rational.hpp"

#include <stdexcept>

namespace kitecert {

namespace detail {

// Enclosure of arctan(1/x) for integer x >= 2 via the alternating Taylor
// series; the truncation error is bounded by the first omitted term.
inline RatInterval arctan_inv(long x, unsigned bits) {
  const Rational inv_x2 = Rational(1, Integer(x) * x);
  Rational power(1, x);  // 1/x^(2k+1)
  Rational sum(0);
  const Rational eps(Integer(1), Integer(1) << (bits + 4));
  bool add = true;
  for (unsigned k = 0;; ++k) {
    const Rational term = power / Rational(2 * k + 1);
    if (term < eps) {
      // truth lies within [sum - term, sum + term]
      return RatInterval(sum - term, sum + term);
    }
    sum += add ? term : -term;
    add = !add;
    power *= inv_x2;
  }
}

}  // namespace detail

// Enclosure of pi with width <= 2^-(bits).
inline RatInterval pi_enclosure(unsigned bits) {
  // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)
  const unsigned work = bits + 8;
  RatInterval a5 = detail::arctan_inv(5, work);
  RatInterval a239 = detail::arctan_inv(239, work);
  RatInterval pi = a5 * Rational(16) - a239 * Rational(4);
  RatInterval rounded = pi.outward(bits + 4);
  if (rounded.width() > Rational(Integer(1), Integer(1) << bits))
    throw std::logic_error("pi enclosure wider than requested");
  return rounded;
}

// Enclosure of pi^2 with width <= 2^-(bits); denominators capped at bits+8
// dyadic digits.
inline RatInterval pi2_enclosure(unsigned bits) {
  RatInterval pi = pi_enclosure(bits + 4);
  RatInterval sq = pi * pi;
  RatInterval rounded = sq.outward(bits + 8);
  if (rounded.width() > Rational(Integer(1), Integer(1) << bits))
    throw std::logic_error("pi^2 enclosure wider than requested");
  return rounded;
}

// Enclosure of sqrt(r) for rational r >= 0, exact when r is a square of a
// rational, otherwise of width 2^-bits.
inline RatInterval sqrt_enclosure(const Rational& r, unsigned bits) {
  if (r < 0) throw std::domain_error("sqrt_enclosure of negative rational");
  if (r == 0) return RatInterval(Rational(0));
  const Integer p = num(r), q = den(r);
  const Integer rp = isqrt(p), rq = isqrt(q);
  if (rp * rp == p && rq * rq == q) return RatInterval(Rational(rp, rq));
  const Integer scale = Integer(1) << bits;
  const Integer v = (p * scale * scale) / q;  // floor
  const Integer root = isqrt(v);
  RatInterval out{Rational(root, scale), Rational(root + 1, scale)};
  // lo^2 <= r <= hi^2 by construction of the floor square root.
  return out;
}

}  // namespace kitecert
