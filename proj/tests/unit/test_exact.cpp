// Exact arithmetic foundation: rationals, intervals, constant enclosures,
// quadratics in t = pi^2, and the surd coefficient ring.
#include <catch2/catch_amalgamated.hpp>

#include "kitecert/coeff.hpp"

using namespace kitecert;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-0") == Rational(0));
  CHECK(to_fraction_string(Rational(3, 4)) == "3/4");
  CHECK(to_fraction_string(Rational(-5)) == "-5/1");
  CHECK(to_fraction_string(Rational(6, 4)) == "3/2");  // canonical form

  CHECK_FALSE(try_parse_rational("1.5").has_value());
  CHECK_FALSE(try_parse_rational("1/0").has_value());
  CHECK_FALSE(try_parse_rational("1 /2").has_value());
  CHECK_FALSE(try_parse_rational("").has_value());
  CHECK_FALSE(try_parse_rational("two").has_value());

  // Round trip through the canonical string form.
  const Rational vals[] = {Rational(0), Rational(-7, 3), Rational(22, 7),
                           Rational(Integer("123456789123456789"), Integer(997))};
  for (const auto& v : vals) CHECK(parse_rational(to_fraction_string(v)) == v);
}

TEST_CASE("rational helpers") {
  CHECK(rfloor(Rational(7, 2)) == Integer(3));
  CHECK(rfloor(Rational(-7, 2)) == Integer(-4));
  CHECK(rfloor(Rational(4)) == Integer(4));
  CHECK(rpow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rpow(Rational(5), 0) == Rational(1));
  CHECK(isqrt(Integer(48)) == Integer(6));
  CHECK(isqrt(Integer(49)) == Integer(7));

  // Dyadic rounding brackets the value with error < 2^-bits.
  const Rational x(355, 113);
  const Rational lo = dyadic_floor(x, 30), hi = dyadic_ceil(x, 30);
  CHECK(lo <= x);
  CHECK(x <= hi);
  CHECK(hi - lo <= Rational(2, Integer(1) << 29));
}

TEST_CASE("interval arithmetic") {
  const RatInterval a(Rational(1), Rational(2));
  const RatInterval b(Rational(-3), Rational(5));
  CHECK((a + b) == RatInterval(Rational(-2), Rational(7)));
  CHECK((a - b) == RatInterval(Rational(-4), Rational(5)));
  CHECK((a * b) == RatInterval(Rational(-6), Rational(10)));
  CHECK((-a) == RatInterval(Rational(-2), Rational(-1)));
  CHECK(b.contains(Rational(0)));
  CHECK(a.strictly_positive());
  CHECK_FALSE(b.strictly_positive());
  CHECK_THROWS(RatInterval(Rational(2), Rational(1)));
  CHECK_THROWS(a / b);  // divisor straddles zero
  CHECK((a / RatInterval(Rational(2), Rational(4))) ==
        RatInterval(Rational(1, 4), Rational(1)));
  CHECK(iv_pow(RatInterval(Rational(-2), Rational(3)), 2) ==
        RatInterval(Rational(0), Rational(9)));
  CHECK(iv_pow(RatInterval(Rational(-2), Rational(3)), 3) ==
        RatInterval(Rational(-8), Rational(27)));
}

TEST_CASE("pi^2 enclosure is tight and correct") {
  // Decimal bracket: 9.8696044010893586 < pi^2 < 9.8696044010893587
  // (pi^2 = 9.869604401089358618...).
  const Rational lo_ref(98696044010893586, 10000000000000000);
  const Rational hi_ref(98696044010893587, 10000000000000000);
  for (unsigned bits : {64u, 96u, 192u}) {
    const RatInterval t = pi2_enclosure(bits);
    CAPTURE(bits);
    CHECK(t.lo < t.hi);
    // At width <= 2^-64 the enclosure fits strictly inside the bracket.
    CHECK(t.lo > lo_ref);
    CHECK(t.hi < hi_ref);
    CHECK(t.hi - t.lo <= Rational(1, Integer(1) << bits));
  }
  // Monotone refinement: higher precision nests inside lower precision.
  const RatInterval t96 = pi2_enclosure(96), t192 = pi2_enclosure(192);
  CHECK(t96.lo <= t192.lo);
  CHECK(t192.hi <= t96.hi);
}

TEST_CASE("sqrt enclosures") {
  // Perfect squares of rationals are exact.
  CHECK(sqrt_enclosure(Rational(9, 4), 192) ==
        RatInterval(Rational(3, 2), Rational(3, 2)));
  CHECK(sqrt_enclosure(Rational(0), 192) == RatInterval(Rational(0), Rational(0)));

  for (long m : {2L, 3L, 7L}) {
    const RatInterval s = sqrt_enclosure(Rational(m), 192);
    CAPTURE(m);
    CHECK(s.lo * s.lo <= Rational(m));
    CHECK(Rational(m) <= s.hi * s.hi);
    CHECK(s.hi - s.lo == Rational(1, Integer(1) << 192));
  }
  CHECK_THROWS(sqrt_enclosure(Rational(-1), 64));
}

TEST_CASE("quadratics in t: arithmetic and exact range") {
  const PiQuad p(Rational(1), Rational(-2), Rational(3));  // 1 - 2t + 3t^2
  const PiQuad q(Rational(0), Rational(1));                // t
  CHECK((p + q) == PiQuad(Rational(1), Rational(-1), Rational(3)));
  CHECK((p * Rational(2)) == PiQuad(Rational(2), Rational(-4), Rational(6)));
  CHECK((q * q) == PiQuad(Rational(0), Rational(0), Rational(1)));
  CHECK_THROWS_AS(p * q, std::logic_error);  // degree 3 leaves the ring
  CHECK(p.eval(Rational(2)) == Rational(9));

  // Range must include the vertex minimum when it lies inside the interval:
  // f(t) = (t - 1)^2 on [0, 3] has range [0, 4].
  const PiQuad f(Rational(1), Rational(-2), Rational(1));
  CHECK(f.range(RatInterval(Rational(0), Rational(3))) ==
        RatInterval(Rational(0), Rational(4)));
  // Vertex outside: endpoints only.
  CHECK(f.range(RatInterval(Rational(2), Rational(3))) ==
        RatInterval(Rational(1), Rational(4)));
  // Downward parabola: maximum at the vertex.
  const PiQuad g(Rational(0), Rational(2), Rational(-1));  // 2t - t^2
  CHECK(g.range(RatInterval(Rational(0), Rational(3))) ==
        RatInterval(Rational(-3), Rational(1)));
}

TEST_CASE("surd coefficients: ring operations and enclosure") {
  const Rational m(3);
  const Coeff a(PiQuad(Rational(1)), PiQuad(Rational(2)));   // 1 + 2 sqrt(3)
  const Coeff b(PiQuad(Rational(-1)), PiQuad(Rational(1)));  // -1 + sqrt(3)
  // (1 + 2 s)(-1 + s) = -1 + s - 2s + 2*3 = 5 - s   with s = sqrt(3)
  CHECK(Coeff::mul(a, b, m) == Coeff(PiQuad(Rational(5)), PiQuad(Rational(-1))));
  // (1 + s)^2 = 4 + 2s
  const Coeff c(PiQuad(Rational(1)), PiQuad(Rational(1)));
  CHECK(Coeff::pow(c, 2, m) == Coeff(PiQuad(Rational(4)), PiQuad(Rational(2))));

  const EnclosureContext ctx = EnclosureContext::make(m, 96, 192);
  // t + sqrt(3) is enclosed by the sum of the two enclosures.
  const Coeff d(PiQuad(Rational(0), Rational(1)), PiQuad(Rational(1)));
  const RatInterval e = d.enclosure(ctx);
  CHECK(e.lo == ctx.t.lo + ctx.sqrt_m.lo);
  CHECK(e.hi == ctx.t.hi + ctx.sqrt_m.hi);

  // Structural cancelation gives an exact zero enclosure, which is what lets
  // equality cases certify with bound exactly 0.
  const Coeff z = Coeff::t_times(Rational(2)) - Coeff::t_times(Rational(2));
  CHECK(z.is_zero());
  CHECK(z.enclosure(ctx) == RatInterval(Rational(0), Rational(0)));

  // Rational-only coefficients ignore the radicand entirely.
  CHECK(Coeff::rational(Rational(5, 7)).enclosure(ctx) ==
        RatInterval(Rational(5, 7), Rational(5, 7)));
}
