#pragma once

// Closed-form eigenvalue bounds and parameter-region predicates for the
// triangle families, evaluated in exact rational interval arithmetic.
//
// Two parameterizations are used.  UnitBase places the triangle at
// (0,0), (1,0), (a,b); SymBase places it at (-1,0), (1,0), (a,b).  The two
// are related by the affine map x -> 2x - 1, y -> 2y, which doubles lengths
// and therefore divides Laplace eigenvalues by four.
//
// Every evaluator that depends on b only through b^2 has a *_b2 variant so
// that parameters with irrational height (b = 1/sqrt(3), b = sqrt(3), ...)
// can be handled exactly through their rational square.

#include "kitecert/constants.hpp"
#include "kitecert/interval.hpp"
#include "kitecert/piquad.hpp"
#include "kitecert/rational.hpp"
#include "kitecert/tables.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace kitecert::bounds {

struct TriParam {
  Rational a;
  Rational b;

  friend bool operator==(const TriParam& x, const TriParam& y) {
    return x.a == y.a && x.b == y.b;
  }
};

// ---------------------------------------------------------------------------
// Parameter regions (exact rational predicates).

// UnitBase canonical region: apex above the left half of the base, and the
// base is the longest side.
inline bool unitbase_admissible(const TriParam& t) {
  if (!(t.b > 0)) return false;
  if (t.a < 0 || t.a > Rational(1, 2)) return false;
  return rpow(Rational(1) - t.a, 2) + rpow(t.b, 2) <= 1;
}

// SymBase canonical region: apex right of center, apex angle the smallest,
// and the left side no longer than twice the base half-length.
inline bool symbase_admissible(const TriParam& t) {
  if (!(t.b > 0)) return false;
  if (t.a < 0) return false;
  if (rpow(t.a, 2) + rpow(t.b, 2) < 1) return false;
  return rpow(t.a + 1, 2) + rpow(t.b, 2) <= 4;
}

struct RegionFlags {
  bool kite_sym = false;      // 3b^2 <= 1 - a + a^2: kite reflection applies
  bool mu_cond = false;       // b^2 <= a^2 + (1-a)^2: box test function valid
  bool acute = false;         // a^2 + b^2 > a: the angle at the apex is acute
  bool small_angle = false;   // angle at (1,0) at most pi/6
  bool angle_le_pi4 = false;  // angle at (1,0) at most pi/4
};

// Exact classification of a UnitBase parameter point.  The angle tests at
// vertex (1,0) compare tangents: tan(theta) = b/(1-a), so theta <= pi/6 is
// 3b^2 <= (1-a)^2 and theta <= pi/4 is b^2 <= (1-a)^2, both exact.
inline RegionFlags region_classify(const TriParam& t) {
  RegionFlags f;
  const Rational a2 = rpow(t.a, 2);
  const Rational b2 = rpow(t.b, 2);
  const Rational one_minus_a = Rational(1) - t.a;
  f.kite_sym = 3 * b2 <= Rational(1) - t.a + a2;
  f.mu_cond = b2 <= a2 + rpow(one_minus_a, 2);
  f.acute = a2 + b2 > t.a;
  f.small_angle = one_minus_a > 0 && 3 * b2 <= rpow(one_minus_a, 2);
  f.angle_le_pi4 = one_minus_a > 0 && b2 <= rpow(one_minus_a, 2);
  return f;
}

// ---------------------------------------------------------------------------
// Convention conversions.

// Affine image of a UnitBase parameter point in SymBase coordinates.  The
// result may have a < 0; symbase_canonical reflects it into the canonical
// half-plane (a congruent triangle).
inline TriParam to_symbase(const TriParam& unit) {
  return {2 * unit.a - 1, 2 * unit.b};
}

inline TriParam to_unitbase(const TriParam& sym) {
  return {(sym.a + 1) / 2, sym.b / 2};
}

inline TriParam symbase_canonical(TriParam sym) {
  if (sym.a < 0) sym.a = -sym.a;
  return sym;
}

// Lengths double from UnitBase to SymBase, so eigenvalues divide by four.
inline RatInterval unit_to_sym_eigenvalue(const RatInterval& lam) {
  return lam * Rational(1, 4);
}
inline RatInterval sym_to_unit_eigenvalue(const RatInterval& lam) {
  return lam * Rational(4);
}

// ---------------------------------------------------------------------------
// Triangle geometry helpers (UnitBase).

// Squared side lengths: base, side from (0,0), side from (1,0).
inline std::array<Rational, 3> side_lengths_squared(const TriParam& t) {
  const Rational b2 = rpow(t.b, 2);
  return {Rational(1), rpow(t.a, 2) + b2, rpow(Rational(1) - t.a, 2) + b2};
}

// Image of (a,b) under inversion centered at (1,0) with radius 1.  The image
// describes the same triangle with the middle and longest sides exchanged
// (after rescaling): the squared side multiset {1, s1, s2} becomes
// {1, s1/s2, 1/s2}, a similar triangle.  The map is an involution and fixes
// the circle (a-1)^2 + b^2 = 1.
inline TriParam invert_isosceles(const TriParam& t) {
  if (!(t.b > 0)) throw std::domain_error("inversion requires b > 0");
  const Rational d = rpow(t.a - 1, 2) + rpow(t.b, 2);
  return {(t.a - 1) / d + 1, t.b / d};
}

// ---------------------------------------------------------------------------
// Bound evaluators.

namespace detail {

inline RatInterval pi2(int pi_bits) { return pi2_enclosure(pi_bits); }

inline void require_positive_b2(const Rational& b2, const char* who) {
  if (!(b2 > 0)) throw std::domain_error(std::string(who) + " requires b > 0");
}

}  // namespace detail

// Upper bound for the second Neumann eigenvalue on SymBase triangles:
//   (64 pi^2 (a^2 + b^2 + 3) + 243 (a^2 + b^2 - 6a - 3)) / (288 b^2).
// Exact at the equilateral triangle (0, sqrt(3)), where it equals 4 pi^2 / 9.
inline RatInterval u1_sym_b2(const Rational& a, const Rational& b2,
                             int pi_bits = 96) {
  detail::require_positive_b2(b2, "u1_sym");
  const Rational s = rpow(a, 2) + b2;
  const Rational den = 288 * b2;
  const PiQuad expr(243 * (s - 6 * a - 3) / den, 64 * (s + 3) / den);
  return expr.range(detail::pi2(pi_bits));
}

inline RatInterval u1_sym(const TriParam& t, int pi_bits = 96) {
  return u1_sym_b2(t.a, rpow(t.b, 2), pi_bits);
}

// Upper bound for the second Neumann eigenvalue on SymBase triangles from
// the linear test function x - a/3: the exact rational 18 / (a^2 + 3).
inline RatInterval u2_sym(const Rational& a) {
  return RatInterval::point(Rational(18) / (rpow(a, 2) + 3));
}

// Lower bound for the first Dirichlet eigenvalue of the rhombus with side 1
// and half-height h:  pi^2 (1 + 2h) / (4 h^2).
inline RatInterval hooker_protter(const Rational& h, int pi_bits = 96) {
  if (!(h > 0)) throw std::domain_error("hooker_protter requires h > 0");
  return detail::pi2(pi_bits) * ((1 + 2 * h) / (4 * rpow(h, 2)));
}

// Lower bound for the antisymmetric kite mode (UnitBase):
//   pi^2 (3 + 7 delta + 6 a sqrt(3 - 4a)) / (12 b^2),  delta = a^2 + b^2 - a,
// valid under the kite condition 3 b^2 <= 1 - a + a^2 with a <= 1/2 AND a
// nonobtuse apex, delta >= 0.  The derivation transplants trial functions to
// a reference triangle at c = a / (1 - 3 delta) and combines two eigenvalue
// inequalities with weights (c - a, 3a); both weights are nonnegative only
// when delta >= 0, and for delta < 0 the resulting value genuinely exceeds
// the eigenvalue on thin triangles (the thin-strip limit of the formula is
// pi^2 (3 - 7a + 7a^2 + 6a sqrt(3 - 4a)) / (12 b^2), which is above the true
// asymptotic pi^2 / (4 b^2) whenever a > 0).  Under delta >= 0 and the kite
// condition, c <= 1/2 holds automatically: 3 delta <= (1 - 2a)^2 <= 1 - 2a.
inline RatInterval mu_a_lower_b2(const Rational& a, const Rational& b2,
                                 int pi_bits = 96, int sqrt_bits = 192) {
  detail::require_positive_b2(b2, "mu_a_lower");
  if (a < 0 || a > Rational(1, 2))
    throw std::domain_error("mu_a_lower requires 0 <= a <= 1/2");
  if (!(3 * b2 <= Rational(1) - a + rpow(a, 2)))
    throw std::domain_error("mu_a_lower requires the kite condition");
  if (b2 < a - rpow(a, 2))
    throw std::domain_error(
        "mu_a_lower requires a nonobtuse apex: a^2 + b^2 >= a");
  const Rational delta = rpow(a, 2) + b2 - a;
  const RatInterval t = detail::pi2(pi_bits);
  const RatInterval root = sqrt_enclosure(Rational(3) - 4 * a, sqrt_bits);
  const Rational den = 12 * b2;
  return t * ((3 + 7 * delta) / den) + (t * (6 * a / den)) * root;
}

inline RatInterval mu_a_lower(const TriParam& t, int pi_bits = 96,
                              int sqrt_bits = 192) {
  return mu_a_lower_b2(t.a, rpow(t.b, 2), pi_bits, sqrt_bits);
}

// Upper bound for the second Neumann eigenvalue (UnitBase) from the
// two-cosine test function:
//   (pi^2 (2c(2 + b^2 + c) + b^2 + 1) - 16 c (b^2 + c)) / (2 (3c + 1) b^2),
// with c = a(a-1) <= 0.
inline RatInterval mu2_upper_lemma_b2(const Rational& a, const Rational& b2,
                                      int pi_bits = 96) {
  detail::require_positive_b2(b2, "mu2_upper_lemma");
  const Rational c = a * (a - 1);
  const Rational den = 2 * (3 * c + 1) * b2;
  if (!(den > 0))
    throw std::domain_error("mu2_upper_lemma requires 3 a (a-1) + 1 > 0");
  const Rational n1 = 2 * c * (2 + b2 + c) + b2 + 1;
  const Rational n0 = -16 * c * (b2 + c);
  const PiQuad expr(n0 / den, n1 / den);
  return expr.range(detail::pi2(pi_bits));
}

inline RatInterval mu2_upper_lemma(const TriParam& t, int pi_bits = 96) {
  return mu2_upper_lemma_b2(t.a, rpow(t.b, 2), pi_bits);
}

// Sign certificate for the comparison  mu2_upper_lemma <= pi^2 / b^2:
// returns the enclosure of (pi^2 / b^2 - mu2_upper_lemma) scaled by the
// positive factor 2 (3c + 1) b^2.  Nonnegative iff the inequality holds;
// exactly zero at the equality cases (a = 0, b = 1), which a direct interval
// comparison of the two sides could never confirm.
inline RatInterval mu2_upper_vs_box_gap_b2(const Rational& a,
                                           const Rational& b2,
                                           int pi_bits = 96) {
  detail::require_positive_b2(b2, "mu2_upper_vs_box_gap");
  const Rational c = a * (a - 1);
  if (!(3 * c + 1 > 0))
    throw std::domain_error("mu2_upper_vs_box_gap requires 3 a (a-1) + 1 > 0");
  const Rational n1 = 2 * c * (2 + b2 + c) + b2 + 1;
  const PiQuad gap(16 * c * (b2 + c), 2 * (3 * c + 1) - n1);
  return gap.range(detail::pi2(pi_bits));
}

// Upper bound for the second Neumann eigenvalue (UnitBase) from the
// two-parameter family of test functions: (A(a) + B(a) b^2) / (C(a) b^2).
// The enclosure of C(a) must be strictly positive for the quotient to be a
// valid bound; on [0, 1/2] this is part of what the proof cases certify.
inline RatInterval kite_upper_ABC_b2(const Rational& a, const Rational& b2,
                                     int pi_bits = 96) {
  detail::require_positive_b2(b2, "kite_upper_ABC");
  const EnclosureContext ctx = EnclosureContext::make(Rational(0), pi_bits, 192);
  const Coeff cv = tables::Cpol().eval(a, Rational(0));
  if (!cv.v.is_zero())
    throw std::logic_error("C table unexpectedly irrational");
  const RatInterval c_enc = cv.enclosure(ctx);
  if (!c_enc.strictly_positive())
    throw std::domain_error("kite_upper_ABC requires C(a) > 0");
  const RatInterval a_enc = tables::Apol().eval(a, Rational(0)).enclosure(ctx);
  const RatInterval b_enc = tables::Bpol().eval(a, Rational(0)).enclosure(ctx);
  return (a_enc + b_enc * b2) / (c_enc * b2);
}

inline RatInterval kite_upper_ABC(const TriParam& t, int pi_bits = 96) {
  return kite_upper_ABC_b2(t.a, rpow(t.b, 2), pi_bits);
}

}  // namespace kitecert::bounds
