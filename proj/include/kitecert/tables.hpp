#pragma once
// Fixed coefficient tables for the kite-diagonal eigenvalue-comparison
// polynomials (univariate in the apex offset a on [0, 1/2], with t = pi^2
// appearing in the coefficients). These are the long explicit polynomials of
// the proof; the test suite checks them against independently generated
// fixtures and against the algebraic identities that relate them.

#include "kitecert/poly2.hpp"

namespace kitecert::tables {

namespace detail {

inline Poly2 apoly(std::vector<PiQuad> coeffs_by_power) {
  Poly2 p = Poly2::zero("a", "b", Rational(0));
  p.ensure(static_cast<int>(coeffs_by_power.size()) - 1, 0);
  for (std::size_t i = 0; i < coeffs_by_power.size(); ++i)
    p.rows[i][0] = Coeff(std::move(coeffs_by_power[i]));
  p.trim();
  return p;
}

inline Poly2 times_t(const Poly2& p) { return p.scaled(Coeff::t_times(Rational(1))); }

}  // namespace detail

using detail::apoly;
using detail::times_t;
inline Rational R(long n, long d = 1) { return Rational(n, d); }

// Denominator polynomial of the weighted second-moment quotient:
//   C(a) = 67200 t a^4 + 12(74976 - 5600 t) a^3 + 12(15400 t - 182346) a^2
//        + 12(72429 - 8400 t) a + 25200 t
inline const Poly2& Cpol() {
  static const Poly2 p = apoly({
      PiQuad(R(0), R(25200)),
      PiQuad(R(12 * 72429), R(-12 * 8400)),
      PiQuad(R(-12 * 182346), R(12 * 15400)),
      PiQuad(R(12 * 74976), R(-12 * 5600)),
      PiQuad(R(0), R(67200)),
  });
  return p;
}

// Numerator polynomial of the same quotient:
//   B(a) = t (134400 t a^4 + (650880 - 134400 t) a^3 + (168000 t - 1867740) a^2
//            + (784800 - 67200 t) a + 127575 + 16800 t)
inline const Poly2& Bpol() {
  static const Poly2 p = times_t(apoly({
      PiQuad(R(127575), R(16800)),
      PiQuad(R(784800), R(-67200)),
      PiQuad(R(-1867740), R(168000)),
      PiQuad(R(650880), R(-134400)),
      PiQuad(R(0), R(134400)),
  }));
  return p;
}

//   A(a) = t (134400 t a^6 + (650880 - 268800 t) a^5 + (369600 t - 2518620) a^4
//            + (2105752 - 235200 t) a^3 + (89600 t - 924757) a^2
//            + (227938 - 22400 t) a + 5600 t - 42525)
inline const Poly2& Apol() {
  static const Poly2 p = times_t(apoly({
      PiQuad(R(-42525), R(5600)),
      PiQuad(R(227938), R(-22400)),
      PiQuad(R(-924757), R(89600)),
      PiQuad(R(2105752), R(-235200)),
      PiQuad(R(-2518620), R(369600)),
      PiQuad(R(650880), R(-268800)),
      PiQuad(R(0), R(134400)),
  }));
  return p;
}

// Quartic combining numerator and denominator: 12 B - 7 t C = 12 t K2(a) with
//   K2(a) = 95200 t a^4 + (126048 - 95200 t) a^3 + (60200 t - 591318) a^2
//         + (277797 - 8400 t) a + 2100 t + 127575
inline const Poly2& K2comb() {
  static const Poly2 p = apoly({
      PiQuad(R(127575), R(2100)),
      PiQuad(R(277797), R(-8400)),
      PiQuad(R(-591318), R(60200)),
      PiQuad(R(126048), R(-95200)),
      PiQuad(R(0), R(95200)),
  });
  return p;
}

// Quartic lower bound used to control the square-root term:
//   Q(a) = 5600 t a^4 + (74976 - 5600 t) a^3 + 2(7700 t - 91173) a^2
//        + (72429 - 8400 t) a + 2100 t
inline const Poly2& Q4() {
  static const Poly2 p = apoly({
      PiQuad(R(0), R(2100)),
      PiQuad(R(72429), R(-8400)),
      PiQuad(R(-2 * 91173), R(2 * 7700)),
      PiQuad(R(74976), R(-5600)),
      PiQuad(R(0), R(5600)),
  });
  return p;
}

// Quintic from the square-root-isolation step: the identity
//   12 A + (12 B - 7 t C)(1 - a + a^2)/3 - t C (3 + 7 a^2 - 7 a) = 4 t a P5(a)
// is what the tests verify.
inline const Poly2& P5() {
  static const Poly2 p = apoly({
      PiQuad(R(525 * 347), R(525 * 80)),
      PiQuad(R(-8 * 44211), R(-8 * 2450)),
      PiQuad(R(-480 * -2682), R(-480 * 665)),
      PiQuad(R(-2869464), R(868000)),
      PiQuad(R(504192), R(-761600)),
      PiQuad(R(0), R(380800)),
  });
  return p;
}

// Degree-8 master polynomial whose nonpositivity on [0, 1/2] removes the
// final square root: 4 * K4(a) = (P5^2 - 324 Q^2 (3 - 4a)) at a -> 1/2 - a,
// divided by a^2 (the division is exact; the tests check it).
inline const Poly2& K4() {
  static const Poly2 p = apoly({
      PiQuad(R(0), R(-36985183200L), R(3669120000L)),
      PiQuad(R(-1418249685780L), R(311172170400L), R(-20603520000L)),
      PiQuad(R(4864275678312L), R(-1107844970400L), R(70309120000L)),
      PiQuad(R(-1682712947520L), R(1404232972800L), R(-139740160000L)),
      PiQuad(R(-3554482258800L), R(-300435206400L), R(121433760000L)),
      PiQuad(R(-1352162962944L), R(582294182400L), R(-149461760000L)),
      PiQuad(R(63552393216L), R(-34277644800L), R(83354880000L)),
      PiQuad(R(0), R(-95998156800L), R(-46412800000L)),
      PiQuad(R(0), R(0), R(36252160000L)),
  });
  return p;
}

}  // namespace kitecert::tables
