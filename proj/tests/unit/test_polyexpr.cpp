// Polynomial text grammar (parse + canonical print) and run configuration.

#include <catch2/catch_amalgamated.hpp>

#include "kitecert/config.hpp"
#include "kitecert/polyexpr.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace kitecert;

TEST_CASE("expression parser handles the reference inputs") {
  const Poly2 xm1 = polyexpr::parse("x - 1");
  CHECK(xm1 == Poly2::var_x() - Rational(1));

  CHECK(polyexpr::parse("x") == Poly2::var_x());

  const Poly2 c = polyexpr::parse("-1/2 + 0*x");
  CHECK(c == Poly2::constant(Coeff::rational(Rational(-1, 2))));

  const Poly2 ym1 = polyexpr::parse("y - 1");
  CHECK(ym1 == Poly2::var_y() - Rational(1));

  // pi2 and sqrt atoms land in the coefficient ring.
  const Poly2 p = polyexpr::parse("pi2*x^2 - 3/4");
  CHECK(p.at(2, 0) == Coeff::t_times(Rational(1)));
  CHECK(p.at(0, 0) == Coeff::rational(Rational(-3, 4)));

  const Poly2 s = polyexpr::parse("sqrt(3)*y + 2");
  CHECK(s.m == Rational(3));
  CHECK(s.at(0, 1) == Coeff::sqrt_m_times(Rational(1)));

  // Products fold sqrt(m)*sqrt(m) back into the rational part.
  const Poly2 sq = polyexpr::parse("sqrt(3)*sqrt(3)");
  CHECK(sq.at(0, 0) == Coeff::rational(Rational(3)));

  // Unary signs, nesting, and powers.
  const Poly2 u = polyexpr::parse("-(x - y)^2 * 2 + +1/3");
  const Poly2 want = Rational(-2) * (Poly2::var_x() - Poly2::var_y()).pow(2) +
                     Rational(1, 3);
  CHECK(u == want);

  // Custom variable names.
  const Poly2 ca = polyexpr::parse("c - 4*a", "c", "a");
  CHECK(ca.xname == "c");
  CHECK(ca.yname == "a");
  CHECK(ca.at(1, 0) == Coeff::rational(Rational(1)));
  CHECK(ca.at(0, 1) == Coeff::rational(Rational(-4)));

  // A radicand that cancels out of every coefficient is dropped.
  CHECK(polyexpr::parse("0*sqrt(5) + x").m == Rational(0));
}

TEST_CASE("expression parser rejects malformed input") {
  CHECK_THROWS_AS(polyexpr::parse("z + 1"), std::invalid_argument);
  CHECK_THROWS_AS(polyexpr::parse("x + "), std::invalid_argument);
  CHECK_THROWS_AS(polyexpr::parse("x 1"), std::invalid_argument);
  CHECK_THROWS_AS(polyexpr::parse("(x"), std::invalid_argument);
  CHECK_THROWS_AS(polyexpr::parse("x^"), std::invalid_argument);
  CHECK_THROWS_AS(polyexpr::parse("x^999"), std::invalid_argument);
  CHECK_THROWS_AS(polyexpr::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(polyexpr::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(polyexpr::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(polyexpr::parse("x", "x", "x"), std::invalid_argument);
  // Two different radicands cannot share one ring.
  CHECK_THROWS_AS(polyexpr::parse("sqrt(2) + sqrt(3)"), std::logic_error);
  // pi2 powers beyond the quadratic ring are construction errors.
  CHECK_THROWS_AS(polyexpr::parse("pi2^3"), std::logic_error);
}

TEST_CASE("canonical print parses back to the same polynomial") {
  CHECK(polyexpr::print(polyexpr::parse("x - 1")) == "-1 + 1*x");
  CHECK(polyexpr::print(Poly2::zero()) == "0");
  CHECK(polyexpr::print(polyexpr::parse("0*x")) == "0");

  // Corpus of generated expression trees; parse, print, reparse, compare.
  std::mt19937 rng(424242u);
  const auto rnd = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  int built = 0, attempts = 0;
  while (built < 100 && attempts < 400) {
    ++attempts;
    const int radicand = std::vector<int>{0, 2, 3, 5}[rnd(0, 3)];
    // Random expression tree as a string, explicit parens everywhere.
    const std::function<std::string(int)> gen = [&](int depth) -> std::string {
      const int pick = depth >= 3 ? rnd(0, 4) : rnd(0, 8);
      switch (pick) {
        case 0: {
          const int num = rnd(-40, 40);
          const int den = rnd(1, 12);
          return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
        }
        case 1:
          return "x";
        case 2:
          return "y";
        case 3:
          return "pi2";
        case 4:
          return radicand == 0 ? "x" : "sqrt(" + std::to_string(radicand) + ")";
        case 5:
          return "(" + gen(depth + 1) + " + " + gen(depth + 1) + ")";
        case 6:
          return "(" + gen(depth + 1) + " - " + gen(depth + 1) + ")";
        case 7:
          return "(" + gen(depth + 1) + " * " + gen(depth + 1) + ")";
        default:
          return "(" + gen(depth + 1) + ")^" + std::to_string(rnd(0, 3));
      }
    };
    const std::string src = "-" + gen(0);
    Poly2 p = Poly2::zero();
    try {
      p = polyexpr::parse(src);
    } catch (const std::logic_error&) {
      continue;  // tree left the quadratic pi2 ring; draw another
    }
    ++built;
    const std::string printed = polyexpr::print(p);
    const Poly2 again = polyexpr::parse(printed);
    REQUIRE(again == p);
    // Printing is canonical: a second round trip reproduces the same text.
    CHECK(polyexpr::print(again) == printed);
  }
  REQUIRE(built == 100);
}

TEST_CASE("run configuration: defaults, file text, overrides, validation") {
  RunConfig cfg;
  CHECK(cfg.pi_bits == 96);
  CHECK(cfg.max_depth == 12);
  CHECK(cfg.denom_bits == 192);
  CHECK(cfg.fem_level_lo == 5);
  CHECK(cfg.fem_level_hi == 6);
  CHECK(cfg.grid == 40);
  CHECK(cfg.out_dir == "out");

  const CertifyOptions opts = cfg.certify_options();
  CHECK(opts.pi_bits == 96);
  CHECK(opts.sqrt_bits == 192);
  CHECK(opts.max_depth == 12);

  std::istringstream file(
      "# run settings\n"
      "pi_bits = 128\n"
      "\n"
      "fem_levels = 4,5   # coarser oracle\n"
      "out_dir = results\n");
  apply_config_text(cfg, file, "test.cfg");
  CHECK(cfg.pi_bits == 128);
  CHECK(cfg.fem_level_lo == 4);
  CHECK(cfg.fem_level_hi == 5);
  CHECK(cfg.out_dir == "results");
  CHECK(cfg.max_depth == 12);  // untouched keys keep their defaults

  // Flags override the file.
  set_option(cfg, "pi_bits", "160");
  CHECK(cfg.pi_bits == 160);

  CHECK_THROWS_AS(set_option(cfg, "pie_bits", "96"), std::invalid_argument);
  CHECK_THROWS_AS(set_option(cfg, "pi_bits", "0"), std::invalid_argument);
  CHECK_THROWS_AS(set_option(cfg, "pi_bits", "-8"), std::invalid_argument);
  CHECK_THROWS_AS(set_option(cfg, "pi_bits", "9x"), std::invalid_argument);
  CHECK_THROWS_AS(set_option(cfg, "fem_levels", "6,5"), std::invalid_argument);
  CHECK_THROWS_AS(set_option(cfg, "fem_levels", "5"), std::invalid_argument);
  CHECK_THROWS_AS(set_option(cfg, "out_dir", ""), std::invalid_argument);

  std::istringstream bad("grid: 7\n");
  CHECK_THROWS_WITH(apply_config_text(cfg, bad, "bad.cfg"),
                    Catch::Matchers::ContainsSubstring("bad.cfg:1"));
  std::istringstream unknown("pi_bits = 96\nwat = 3\n");
  CHECK_THROWS_WITH(apply_config_text(cfg, unknown, "u.cfg"),
                    Catch::Matchers::ContainsSubstring("unknown config key"));
}
