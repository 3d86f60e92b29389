// Scripted rewrite proof of the degree-8 master inequality: gate conditions,
// side-piece certification, and the exact final polynomial.
#include <catch2/catch_amalgamated.hpp>

#include "kitecert/cases.hpp"

#include <fstream>

using namespace kitecert;

namespace {

Json load_json(const std::string& rel) {
  const std::string path = std::string(KITECERT_SOURCE_DIR) + "/" + rel;
  std::ifstream in(path);
  REQUIRE(in.good());
  return Json::parse(in);
}

}  // namespace

TEST_CASE("degree-8 rewrite proof completes and matches the fixture") {
  const Json fx = load_json("tests/fixtures/k4_tactics.json");
  const Poly2& k4 = tables::K4();
  const Rect rect{Rational(0), Rational(0), Rational(1, 2), Rational(0)};
  const EnclosureContext ctx = EnclosureContext::make(Rational(0), 96, 192);

  const TacticResult res =
      apply_tactics(k4, rect, cases::k4_tactic_steps(), ctx, {});
  REQUIRE(res.certified);
  CHECK(res.failure.empty());
  CHECK(res.final_bound <= 0);
  // The certified bound is large and negative (about -7.6e9).
  CHECK(res.final_bound < Rational(-7000000000LL));

  // Final polynomial is linear with the exact fixture coefficients.
  REQUIRE(res.final_poly.degree_x() == 1);
  CHECK(res.final_poly.at(0, 0) == coeff_from_json(fx.at("final").at("a0")));
  CHECK(res.final_poly.at(1, 0) == coeff_from_json(fx.at("final").at("a1")));

  // Walk the tactic chain: ops, powers, and gate coefficients in order.
  const Json& gates = fx.at("gates");
  const CertNode* node = &res.tree;
  Poly2 cur = k4;
  std::size_t gi = 0;
  while (node->kind == CertNode::Kind::Tactic) {
    REQUIRE(gi < gates.size());
    const Json& g = gates.at(gi);
    CHECK(node->op == (g.at("op") == "replace" ? "replace_power" : "drop_term"));
    CHECK(node->power == g.at("power").get<int>());
    // The gate coefficient recomputed from the running polynomial equals the
    // fixture value.
    const Coeff c = cur.at(node->power, 0);
    CHECK(c == coeff_from_json(g.at("coeff")));
    // Advance the running polynomial the same way the engine does.
    if (node->op == "replace_power") {
      const Poly2 side = tactic_side_poly(node->power, node->replacement, cur);
      cur = cur - side.scaled(c);
    }
    if (node->power < static_cast<int>(cur.rows.size()))
      cur.rows[node->power][0] = Coeff{};
    node = node->child.get();
    REQUIRE(node != nullptr);
    ++gi;
  }
  CHECK(gi == gates.size());
  CHECK(node->kind == CertNode::Kind::Fold);
  CHECK(cur == res.final_poly);

  // Side pieces: every replacement certified its bound polynomial on pieces
  // tiling [0, 1/2], with the recorded orientation.
  int side_claims = 0;
  const CertNode* n = &res.tree;
  while (n->kind == CertNode::Kind::Tactic) {
    if (n->op == "replace_power") {
      REQUIRE_FALSE(n->sides.empty());
      Rational cursor(0);
      for (const auto& s : n->sides) {
        REQUIRE(s.certified);
        REQUIRE(s.piece_lo.has_value());
        REQUIRE(*s.piece_lo == cursor);
        cursor = *s.piece_hi;
        ++side_claims;
      }
      CHECK(cursor == Rational(1, 2));
    }
    n = n->child.get();
  }
  CHECK(side_claims == 2 + 2 + 3 + 2 + 2);
}

TEST_CASE("tactic gates reject polynomials that violate them") {
  // drop_term on a coefficient that is not provably nonpositive fails.
  const Poly2 x = Poly2::var_x();
  const Poly2 p = x * x * x - x;  // coefficient of x^3 is +1
  const Rect rect{Rational(0), Rational(0), Rational(1), Rational(0)};
  const EnclosureContext ctx = EnclosureContext::make(Rational(0), 96, 192);

  TacticResult dropped = apply_tactics(p, rect, {TacticStep::drop(3)}, ctx, {});
  CHECK_FALSE(dropped.certified);
  CHECK(dropped.failure.find("drop_term gate") != std::string::npos);

  // replace_power on a coefficient that is not provably nonnegative fails.
  TacticResult replaced = apply_tactics(
      -p, rect,
      {TacticStep::replace(3, {{1, Rational(1)}},
                           {{Rational(0), Rational(1), false}})},
      ctx, {});
  CHECK_FALSE(replaced.certified);
  CHECK(replaced.failure.find("replace_power gate") != std::string::npos);
}

TEST_CASE("a valid replacement certifies through the side pieces") {
  // x^2 <= x on [0, 1]: replace x^2 by x in p = x^2 - x - 1/4 - eps proof.
  // After the rewrite p' = 2x... use p = x^2 - 2x: p' = x - 2x = -x <= 0.
  const Poly2 x = Poly2::var_x();
  const Poly2 p = x * x - Rational(2) * x;
  const Rect rect{Rational(0), Rational(0), Rational(1), Rational(0)};
  const EnclosureContext ctx = EnclosureContext::make(Rational(0), 96, 192);
  const TacticResult res = apply_tactics(
      p, rect,
      {TacticStep::replace(2, {{1, Rational(1)}},
                           {{Rational(0), Rational(1), false}})},
      ctx, {});
  REQUIRE(res.certified);
  CHECK(res.final_poly == Rational(-1) * x);
  CHECK(res.final_bound == Rational(0));

  // The side polynomial x^2 - x is certified on [0, 1]; as a univariate
  // claim its recorded bound must be exact zero (touching at both ends).
  REQUIRE(res.tree.kind == CertNode::Kind::Tactic);
  REQUIRE(res.tree.sides.size() == 1);
  CHECK(res.tree.sides[0].certified);
}

TEST_CASE("tactic preconditions") {
  const Poly2 x = Poly2::var_x();
  const Poly2 xy = x * Poly2::var_y();
  const EnclosureContext ctx = EnclosureContext::make(Rational(0), 96, 192);
  // Bivariate claims cannot take the univariate tactic route.
  CHECK_THROWS(apply_tactics(xy,
                             Rect{Rational(0), Rational(0), Rational(1), Rational(1)},
                             {TacticStep::drop(1)}, ctx, {}));
  // Claims must be anchored at the origin.
  CHECK_THROWS(apply_tactics(x, Rect{Rational(1), Rational(0), Rational(1), Rational(0)},
                             {TacticStep::drop(1)}, ctx, {}));
  // Pieces must tile the interval exactly (gate passes, tiling is short).
  CHECK_THROWS(apply_tactics(
      x * x, Rect{Rational(0), Rational(0), Rational(1), Rational(0)},
      {TacticStep::replace(2, {{1, Rational(1)}},
                           {{Rational(0), Rational(1, 2), false}})},
      ctx, {}));
}
