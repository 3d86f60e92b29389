#pragma once
// Proof-case catalog. Each case states one or more polynomial nonpositivity
// claims over explicit rational rectangles; together they establish that for
// every admissible apex position the relevant eigenvalue comparisons hold.
//
// Coordinate conventions. The triangle has vertices (-1, 0), (1, 0), (a, b)
// with 0 <= a and b > 0 up to the equilateral height sqrt(3). Kite-diagonal
// cases (M1, K1..K4) are univariate in the apex offset a on [0, 1/2]; the
// S-cases are bivariate with first variable b, second variable a, each
// recentred so its rectangle list is anchored at the origin. N(a, b) below is
// the common positive denominator 64 t (a^2 + b^2 + 3) + 243 (a^2 + b^2 -
// 6a - 3), t = pi^2.

#include "kitecert/tables.hpp"
#include "kitecert/tactic.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kitecert {

// Coefficient of y^j as a univariate polynomial in x.
inline Poly2 y_coefficient(const Poly2& p, int j) {
  Poly2 out = Poly2::zero(p.xname, p.yname, p.m);
  out.ensure(std::max(p.degree_x(), 0), 0);
  for (int i = 0; i <= p.degree_x(); ++i) out.rows[i][0] = p.at(i, j);
  out.trim();
  return out;
}

// Exact composition p(x, q(x)) for a univariate q (degree_y(q) == 0).
inline Poly2 substitute_y(const Poly2& p, const Poly2& q) {
  if (q.degree_y() > 0) throw std::invalid_argument("substitute_y needs univariate q");
  const Rational m = Poly2::merged_radicand(p, q);
  Poly2 out = Poly2::zero(p.xname, p.yname, m);
  for (int j = p.degree_y(); j >= 0; --j) {
    Poly2 qq = q;
    qq.m = m;
    out = out * qq + y_coefficient(p, j);
  }
  return out;
}

namespace cases {

struct ClaimDef {
  std::string name;  // e.g. "S7mainB"
  Poly2 poly;
  std::vector<Rect> rects;
};

struct CaseDef {
  std::string id;    // e.g. "S7"
  std::string note;  // what the case establishes
  // Deviations from commonly quoted constants, surfaced in reports: set when a
  // quoted constant is provably unsound and a corrected value is used instead.
  std::string remark;
  std::vector<ClaimDef> claims;
  bool has_tactics = false;  // K4: scripted rewrite proof available
};

namespace detail {

// Small construction kit fixing variable names and the shared radicand.
struct Ring {
  std::string xn, yn;
  Rational m{0};

  Poly2 X() const { return Poly2::var_x(xn, yn, m); }
  Poly2 Y() const { return Poly2::var_y(xn, yn, m); }
  Poly2 k(const Rational& r) const {
    return Poly2::constant(Coeff::rational(r), xn, yn, m);
  }
  Poly2 t(const Rational& s = Rational(1)) const {
    return Poly2::constant(Coeff::t_times(s), xn, yn, m);
  }
  // s * sqrt(m)
  Poly2 root(const Rational& s) const {
    return Poly2::constant(Coeff::sqrt_m_times(s), xn, yn, m);
  }
};

// S-case ring: x = b, y = a.
inline Ring sring(const Rational& m) { return Ring{"b", "a", m}; }

inline Poly2 Npoly(const Ring& r) {
  const Poly2 A = r.Y(), B = r.X();
  const Poly2 s = A * A + B * B;
  return (s + r.k(3)) * r.t(64) + (s - Rational(6) * A - r.k(3)) * Rational(243);
}

// b -> sqrt(m)*c - b followed by a -> a + a0 (the standard recentring).
inline Poly2 reflect_b_shift_a(const Poly2& p, const Ring& r, const Rational& c,
                               const Rational& a0) {
  return p.substituted(Rational(-1), Coeff::sqrt_m_times(c), Rational(1),
                       Coeff::rational(a0));
}

inline Rect rect(const Rational& x0, const Rational& y0, const Rational& dx,
                 const Rational& dy) {
  return Rect{x0, y0, dx, dy};
}

inline Rational fr(long n, long d = 1) { return Rational(n, d); }

}  // namespace detail

// Upper endpoint of the sqrt(3) enclosure used for rectangles that must
// reach the equilateral height exactly.
inline const Rational& sqrt3_hi() {
  static const Rational v = sqrt_enclosure(Rational(3), 192).hi;
  return v;
}

inline CaseDef make_case(const std::string& id) {
  using namespace detail;
  using detail::fr;

  CaseDef def;
  def.id = id;

  if (id == "M1") {
    // Second-derivative sign of the eigenvalue quotient at the apex:
    // (3c + 1) c (2t - 16) >= 0 for c in [-1/4, 0]; substituting c -> -c
    // turns it into a nonpositivity claim on [0, 1/4].
    Ring r{"c", "a", Rational(0)};
    const Poly2 C = r.X();
    const Poly2 p =
        (Rational(-3) * C + r.k(1)) * (Rational(-1) * C) * (r.t(2) - r.k(16));
    def.note = "concavity window of the diagonal eigenvalue quotient";
    def.claims.push_back({"M1", p, {rect(fr(0), fr(0), fr(1, 4), fr(0))}});
    return def;
  }

  if (id == "K1") {
    def.note = "denominator polynomial is positive on the diagonal";
    def.claims.push_back({"K1", Rational(-1) * tables::Cpol(),
                          {rect(fr(0), fr(0), fr(1, 2), fr(0))}});
    return def;
  }
  if (id == "K2") {
    def.note = "numerator versus denominator comparison on the diagonal";
    def.claims.push_back({"K2", Rational(-1) * tables::K2comb(),
                          {rect(fr(0), fr(0), fr(1, 2), fr(0))}});
    return def;
  }
  if (id == "K3") {
    def.note = "square-root controller polynomial is positive";
    def.claims.push_back({"K3", Rational(-1) * tables::Q4(),
                          {rect(fr(0), fr(0), fr(1, 2), fr(0))}});
    return def;
  }
  if (id == "K4") {
    def.note = "degree-8 master inequality on the diagonal";
    def.remark =
        "rewrite script uses the mean split a^4 <= (3/14)a^3 + (7/6)a^5; the "
        "2/7-weighted split leaves a positive degree-5 coefficient and cannot "
        "finish";
    def.has_tactics = true;
    def.claims.push_back(
        {"K4", tables::K4(), {rect(fr(0), fr(0), fr(1, 2), fr(0))}});
    return def;
  }

  if (id == "S1") {
    // Nearly degenerate strip: a in [1/2, 1] via a -> a + 1/2. Two pieces:
    // the b-independent part and the boundary profile at b = 27/25.
    Ring r = sring(Rational(0));
    const Poly2 A = r.Y();
    {
      Ring u{"a", "b", Rational(0)};
      const Poly2 a = u.X();
      const Poly2 g0 = Rational(27) * (Rational(8) * a - Rational(3) * a * a - u.k(1)) -
                       u.t(2) * (a + u.k(1)) * (a * a + u.k(3));
      def.claims.push_back({"S1a",
                            g0.substituted(Rational(1), Coeff::rational(fr(1, 2)),
                                           Rational(1), Coeff{}),
                            {rect(fr(0), fr(0), fr(1, 2), fr(0))}});
    }
    const Poly2 B = r.X();
    const Poly2 g1 =
        Rational(81) * B * B - r.t(2) * (A + r.k(1)) * (A * A + r.k(3));
    def.claims.push_back(
        {"S1b",
         g1.substituted(Rational(-1), Coeff::rational(fr(27, 25)), Rational(1),
                        Coeff::rational(fr(1, 2))),
         {rect(fr(0), fr(0), fr(27, 25), fr(1, 2))}});
    def.note = "nearly degenerate strip via the Rayleigh test function";
    return def;
  }

  if (id == "S2") {
    Ring r = sring(Rational(7));
    const Poly2 A = r.Y(), B = r.X(), N = Npoly(r);
    const Poly2 p = N * (A * A - A + r.k(1) + Rational(3) * A * B -
                         fr(3, 2) * B + Rational(2) * B * B) -
                    r.t(576) * B * B;
    def.note = "middle region eigenvalue comparison";
    def.claims.push_back({"S2", reflect_b_shift_a(p, r, fr(1, 2), fr(1, 2)),
                          {rect(fr(0), fr(0), fr(1, 4), fr(99, 1000)),
                           rect(fr(1, 9), fr(99, 1000), fr(3, 20), fr(1, 10))}});
    return def;
  }

  if (id == "S3") {
    Ring r = sring(Rational(7));
    const Poly2 A = r.Y(), B = r.X(), N = Npoly(r);
    const Poly2 ga = B * B + A - A * A - r.k(1) +
                     (B - A) * (B * B - A * A - r.k(3));
    const Poly2 comb =
        N * ((A * A - A + r.k(1) + Rational(2) * B * B + Rational(3) * A * B -
              fr(3, 2) * B) +
             (B - A) * (A * A + r.k(3) + Rational(2) * B * B + Rational(3) * A * B)) -
        r.t(576) * B * B * (Rational(2) * B - Rational(2) * A + r.k(1));
    def.note = "combined comparison with the mixing weight";
    def.claims.push_back({"S3a", reflect_b_shift_a(ga, r, fr(1, 2), fr(1, 2)),
                          {rect(fr(0), fr(0), fr(1, 4), fr(1, 4))}});
    def.claims.push_back({"S3b", reflect_b_shift_a(comb, r, fr(1, 2), fr(1, 2)),
                          {rect(fr(0), fr(0), fr(1, 4), fr(1, 20)),
                           rect(fr(1, 20), fr(1, 20), fr(1, 5), fr(9, 100)),
                           rect(fr(17, 100), fr(7, 50), fr(2, 25), fr(3, 50))}});
    return def;
  }

  if (id == "S4") {
    // Nearly equilateral; the slack multiplier is 1000 (the larger value
    // 2000 makes the claim false near the apex, see the test suite).
    Ring r = sring(Rational(3));
    const Poly2 A = r.Y(), B = r.X(), N = Npoly(r);
    const Poly2 p = N * (A + B) - r.t(384) * B +
                    Rational(1000) * (r.k(4) - (A + r.k(1)) * (A + r.k(1)) - B * B) *
                        (B - r.root(fr(1, 2)));
    def.note = "nearly equilateral comparison, slack multiplier 1000";
    def.remark =
        "slack multiplier corrected to 1000: with 2000 the claim reaches +35 "
        "near (0, 1.638) and no cover exists; any multiplier in [730, 1751] "
        "certifies";
    def.claims.push_back({"S4", reflect_b_shift_a(p, r, fr(1), fr(0)),
                          {rect(fr(0), fr(0), fr(2, 3), fr(1, 2)),
                           rect(fr(2, 3), fr(0), fr(1, 3), fr(1, 2))}});
    return def;
  }

  if (id == "S5") {
    Ring r0 = sring(Rational(0));
    {
      const Poly2 A = r0.Y(), B = r0.X(), N = Npoly(r0);
      const Poly2 p = N * (A * (A * A - A + r0.k(1)) +
                           (r0.k(fr(1, 2)) - A) * (A * A + r0.k(1))) -
                      r0.t(108) * B * B + r0.t(24) * A * B * B;
      def.claims.push_back({"S5r1",
                            p.substituted(Rational(1), Coeff::rational(fr(97, 100)),
                                          Rational(1), Coeff{}),
                            {rect(fr(0), fr(0), fr(4, 5), fr(1, 2))}});
    }
    Ring r3 = sring(Rational(3));
    {
      const Poly2 A = r3.Y(), B = r3.X(), N = Npoly(r3);
      const Poly2 p = N * (A * (A * A - A + r3.k(1)) +
                           (r3.k(fr(1, 2)) - A) * (A * A + r3.k(1))) -
                      r3.t(108) * B * B + r3.t(24) * A * B * B;
      def.claims.push_back(
          {"S5r2",
           p.substituted(Rational(1), Coeff::sqrt_m_times(fr(1, 2)), Rational(1),
                         Coeff::rational(fr(1, 5))),
           {rect(fr(0), fr(0), fr(1, 5), fr(3, 10))}});
    }
    def.note = "flat-apex comparison in two height bands";
    return def;
  }

  if (id == "S6") {
    Ring r = sring(Rational(3));
    const Poly2 A = r.Y(), B = r.X(), N = Npoly(r);
    {
      // Slack multiplier 4800 (the round value 10^4 makes the claim false).
      const Poly2 p =
          N * (A * A + Rational(3) * A * B + Rational(2) * B * B - A -
               fr(3, 2) * B + r.k(1)) -
          r.t(576) * B * B +
          Rational(4800) * (r.k(4) - (A + r.k(1)) * (A + r.k(1)) - B * B) *
              (B - r.root(fr(1, 2)));
      def.claims.push_back({"S6a", reflect_b_shift_a(p, r, fr(1), fr(0)),
                            {rect(fr(0), fr(0), fr(7, 50), fr(1, 4)),
                             rect(fr(7, 50), fr(0), fr(31, 100), fr(1, 2)),
                             rect(fr(9, 20), fr(0), fr(9, 20), fr(1, 2))}});
    }
    {
      const Poly2 q =
          N * (A * A + Rational(3) * A * B + Rational(2) * B * B + r.k(3)) -
          r.t(1152) * B * B +
          Rational(7000) * (r.k(4) - (A + r.k(1)) * (A + r.k(1)) - B * B) *
              (B - r.k(1)) * (B - r.k(1));
      def.claims.push_back({"S6b", reflect_b_shift_a(q, r, fr(1), fr(0)),
                            {rect(fr(0), fr(0), fr(23, 100), fr(33, 100)),
                             rect(fr(23, 100), fr(0), fr(43, 100), fr(1, 2)),
                             rect(fr(33, 50), fr(0), fr(3, 20), fr(1, 2)),
                             rect(fr(81, 100), fr(1, 3), fr(2, 25), fr(1, 6))}});
    }
    def.note = "steep-apex comparison with quadratic slack terms";
    def.remark =
        "first-band slack multiplier corrected to 4800: with 10000 the claim "
        "reaches +566 near (0.1, 1.6); any multiplier in [4378, 5429] "
        "certifies";
    return def;
  }

  if (id == "S7") {
    Ring r = sring(Rational(3));
    const Poly2 A = r.Y(), B = r.X(), N = Npoly(r);
    // Weight polynomial of the mixing coefficient.
    const Poly2 W = (A + B - r.k(1)) * (B * B - A * A - r.k(3)) +
                    fr(8, 7) * (r.root(fr(1)) - B) * (B * B - A * A - r.k(1));
    const Poly2 w2 = y_coefficient(W, 2);
    const Poly2 w1 = y_coefficient(W, 1);
    const Poly2 w0 = y_coefficient(W, 0);
    const Rational s3h = sqrt3_hi();

    def.claims.push_back({"S7ga2", w2, {rect(fr(0), fr(0), fr(7, 4), fr(0))}});
    def.claims.push_back(
        {"S7ga1",
         w1.substituted(Rational(-1), Coeff::sqrt_m_times(fr(1)), Rational(1), Coeff{}),
         {rect(fr(0), fr(0), s3h, fr(0))}});
    def.claims.push_back(
        {"S7gw0p1",
         w0.substituted(Rational(1), Coeff::rational(fr(1)), Rational(1), Coeff{}),
         {rect(fr(0), fr(0), fr(2, 5), fr(0))}});
    def.claims.push_back(
        {"S7gw0p2",
         w0.substituted(Rational(-1), Coeff::sqrt_m_times(fr(1)), Rational(1), Coeff{}),
         {rect(fr(0), fr(0), s3h - fr(7, 5), fr(0))}});
    {
      // W along the edge a = 1 - b, then b -> 1 - b to anchor at the origin.
      const Poly2 edge = substitute_y(W, r.k(1) - B);
      def.claims.push_back(
          {"S7gwab",
           edge.substituted(Rational(-1), Coeff::rational(fr(1)), Rational(1), Coeff{}),
           {rect(fr(0), fr(0), fr(1, 2), fr(0))}});
    }
    {
      const Poly2 P7 =
          Rational(7) * (A + B - r.k(1)) *
              (N * (A * A + r.k(3) - A * B) - r.t(384) * B * B) +
          Rational(8) * (r.root(fr(1)) - B) *
              (N * (A * A + r.k(1) - A * B) - r.t(216) * B * B);
      def.claims.push_back({"S7mainA", reflect_b_shift_a(P7, r, fr(1), fr(0)),
                            {rect(fr(0), fr(0), fr(1, 5), fr(3, 25)),
                             rect(fr(1, 5), fr(0), fr(7, 20), fr(3, 25))}});
      def.claims.push_back(
          {"S7mainB",
           P7.substituted(Rational(1), Coeff::sqrt_m_times(fr(1, 2)), Rational(-1),
                          Coeff::rational(fr(1, 2))),
           {rect(fr(0), fr(0), s3h / 2, fr(19, 50)),
            rect(fr(0), fr(19, 50), fr(8, 25), fr(3, 25))}});
    }
    def.note = "steepest sector: weight sign analysis and main combination";
    def.remark =
        "one quoted cover rectangle, [sqrt(3/2), sqrt(3)/2 + 1/5] x [1/5, 1/2] "
        "in (height, offset), is empty (its lower height bound 1.2247 exceeds "
        "its upper 1.0660); the cover is re-derived from the sector "
        "constraints instead";
    return def;
  }

  if (id == "S8") {
    Ring r = sring(Rational(3));
    const Poly2 A = r.Y(), B = r.X(), N = Npoly(r);
    const Rational s3h = sqrt3_hi();
    const Poly2 p = N -
                    r.t(12) * (r.k(11) + Rational(7) * B * B + Rational(7) * A * A -
                               Rational(4) * A) -
                    Rational(48) * A * (A - r.k(20)) -
                    Rational(36) * (B * B - r.k(3));
    const Poly2 q = Rational(4) * A * (A - r.k(20)) + Rational(3) * (B * B - r.k(3));
    def.note = "interior envelope bounds around the equilateral point";
    def.claims.push_back({"S8a", reflect_b_shift_a(p, r, fr(1), fr(0)),
                          {rect(fr(0), fr(0), s3h, fr(1, 2))}});
    def.claims.push_back({"S8b", reflect_b_shift_a(q, r, fr(1), fr(0)),
                          {rect(fr(0), fr(0), s3h, fr(1, 2))}});
    return def;
  }

  throw std::invalid_argument("unknown case id: " + id);
}

inline const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids = {
      "M1", "K1", "K2", "K3", "K4", "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8"};
  return ids;
}

// Scripted rewrite proof for the degree-8 master inequality: repeatedly
// replace a high power whose coefficient is provably nonnegative by a
// piecewise-certified rational upper bound, or drop a provably nonpositive
// term, until only a linear polynomial remains.
inline const std::vector<TacticStep>& k4_tactic_steps() {
  using detail::fr;
  static const std::vector<TacticStep> steps = [] {
    std::vector<TacticStep> s;
    s.push_back(TacticStep::replace(
        8, {{7, fr(1, 2)}}, {{fr(0), fr(1, 4), false}, {fr(1, 4), fr(1, 2), true}}));
    s.push_back(TacticStep::replace(
        6, {{5, fr(1, 2)}}, {{fr(0), fr(1, 4), false}, {fr(1, 4), fr(1, 2), true}}));
    s.push_back(TacticStep::replace(4, {{3, fr(3, 14)}, {5, fr(7, 6)}},
                                    {{fr(0), fr(1, 5), false},
                                     {fr(1, 5), fr(3, 7), true},
                                     {fr(3, 7), fr(1, 2), false}}));
    s.push_back(TacticStep::replace(
        2, {{1, fr(1, 4)}, {3, fr(1)}},
        {{fr(0), fr(1, 4), false}, {fr(1, 4), fr(1, 2), true}}));
    s.push_back(TacticStep::drop(7));
    s.push_back(TacticStep::drop(5));
    s.push_back(TacticStep::replace(
        3, {{1, fr(1, 4)}}, {{fr(0), fr(1, 4), false}, {fr(1, 4), fr(1, 2), true}}));
    return s;
  }();
  return steps;
}

}  // namespace cases
}  // namespace kitecert
