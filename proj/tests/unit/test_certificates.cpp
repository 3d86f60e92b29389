// End-to-end certificate pipeline: prove, serialize, verify, and reject
// tampered proofs.
#include <catch2/catch_amalgamated.hpp>

#include "kitecert/checker.hpp"
#include "kitecert/prove.hpp"

#include <random>
#include <string>

using namespace kitecert;

namespace {

// Mutates the first node matching `kind` found in document order; applies
// `fn` to that node and reports whether a target was found.
template <typename Fn>
bool mutate_first(Json& j, const std::string& kind, Fn&& fn) {
  if (j.is_object()) {
    if (j.contains("kind") && j.at("kind") == kind) {
      fn(j);
      return true;
    }
    for (auto& el : j.items())
      if (mutate_first(el.value(), kind, fn)) return true;
  } else if (j.is_array()) {
    for (auto& el : j)
      if (mutate_first(el, kind, fn)) return true;
  }
  return false;
}

bool any_issue_contains(const CheckReport& rep, const std::string& what) {
  for (const auto& is : rep.issues)
    if (is.detail.find(what) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("emitted certificates verify and round-trip through JSON") {
  for (const std::string& id : cases::case_ids()) {
    INFO("case " << id);
    const CaseCertificate cc = prove_case(id);
    CHECK(cc.certified);

    const CheckReport rep = check_certificate(cc);
    CHECK(rep.valid);
    CHECK(rep.certified);
    CHECK(rep.issues.empty());
    CHECK(rep.leaves_checked > 0);

    const std::string s1 = certificate_to_json(cc).dump(2);
    const std::string s2 =
        certificate_to_json(certificate_from_json(Json::parse(s1))).dump(2);
    CHECK(s1 == s2);
  }
}

TEST_CASE("the degree-8 case verifies under both strategies") {
  const auto def = cases::make_case("K4");
  for (Strategy s : {Strategy::Subdivide, Strategy::Tactics}) {
    const CaseCertificate cc = prove_case(def, s);
    CHECK(cc.certified);
    CHECK(check_certificate(cc).certified);
  }
  CHECK(prove_case(def, Strategy::Subdivide).strategy == "subdivide");
  CHECK(prove_case(def).strategy == "tactics");
  CHECK_THROWS_AS(prove_case(cases::make_case("M1"), Strategy::Tactics),
                  std::invalid_argument);
}

TEST_CASE("proof tree shapes match the reference statistics") {
  // Hardest subdivision claim: 4 leaves, 3 nested splits.
  const CaseCertificate s7 = prove_case("S7");
  const Claim* hardest = nullptr;
  for (const auto& c : s7.claims)
    if (c.name == "S7mainB/r0") hardest = &c;
  REQUIRE(hardest != nullptr);
  const TreeStats hs = tree_stats(hardest->tree);
  CHECK(hs.fold_leaves == 4);
  CHECK(hs.max_depth == 3);
  CHECK(hs.fail_nodes == 0);

  // Scripted rewrite proof: eleven side pieces plus the terminal fold,
  // twenty leaves in all, never more than three nested splits.
  const CaseCertificate k4 = prove_case("K4", Strategy::Tactics);
  REQUIRE(k4.claims.size() == 1);
  const TreeStats ks = tree_stats(k4.claims[0].tree);
  CHECK(ks.fold_leaves == 20);
  CHECK(ks.max_depth == 3);
  CHECK(ks.fail_nodes == 0);
}

TEST_CASE("a mutated leaf bound is rejected by the checker") {
  for (const std::string& id : {std::string("S2"), std::string("K4")}) {
    INFO("case " << id);
    Json j = certificate_to_json(prove_case(id));
    REQUIRE(mutate_first(j, "fold", [](Json& n) {
      const Rational b = rational_from_json(n.at("bound"));
      n["bound"] = rational_to_json(b - Rational(1, 97));
    }));
    const CheckReport rep = check_certificate(j);
    CHECK_FALSE(rep.certified);
    CHECK(any_issue_contains(rep, "does not match recomputed"));
  }
}

TEST_CASE("other tampering is rejected by the checker") {
  SECTION("split point moved off the midpoint") {
    Json j = certificate_to_json(prove_case("S7"));
    REQUIRE(mutate_first(j, "split", [](Json& n) {
      const Rational at = rational_from_json(n.at("at"));
      n["at"] = rational_to_json(at + Rational(1, 1000));
    }));
    const CheckReport rep = check_certificate(j);
    CHECK_FALSE(rep.certified);
    CHECK(any_issue_contains(rep, "not the exact midpoint"));
  }

  SECTION("claim polynomial coefficient changed") {
    Json j = certificate_to_json(prove_case("S2"));
    j.at("claims").at(0).at("poly").at("rows").at(0).at(0).at("u").at(0) =
        "999999/1";
    const CheckReport rep = check_certificate(j);
    CHECK_FALSE(rep.certified);
  }

  SECTION("certified flag flipped on a sound claim") {
    Json j = certificate_to_json(prove_case("S2"));
    j.at("claims").at(0).at("certified") = false;
    const CheckReport rep = check_certificate(j);
    CHECK_FALSE(rep.valid);
    CHECK_FALSE(rep.certified);
    CHECK(any_issue_contains(rep, "certified flag disagrees"));
  }

  SECTION("fold leaf rectangle displaced") {
    Json j = certificate_to_json(prove_case("M1"));
    REQUIRE(mutate_first(j, "fold", [](Json& n) {
      n.at("rect").at("x0") = "1/100";
    }));
    const CheckReport rep = check_certificate(j);
    CHECK_FALSE(rep.certified);
    CHECK(any_issue_contains(rep, "does not match its derived position"));
  }
}

TEST_CASE("certifier outcomes on the reference examples") {
  const EnclosureContext ctx = EnclosureContext::make(Rational(0), 96, 192);
  const Poly2 x = Poly2::var_x();
  const Poly2 y = Poly2::var_y();

  // x - 1 on the unit square: certified, maximum touching zero.
  const auto r1 = certify_nonpos(x - Rational(1),
                                 Rect{Rational(0), Rational(0), Rational(1), Rational(1)},
                                 ctx, {});
  REQUIRE(r1.certified);
  CHECK(r1.worst_bound == 0);

  // x on [0, 1]: positive at the right endpoint; the witness stops the
  // search immediately instead of splitting to the depth cap.
  const auto r2 = certify_nonpos(
      x, Rect{Rational(0), Rational(0), Rational(1), Rational(0)}, ctx, {});
  CHECK_FALSE(r2.certified);
  CHECK(r2.stats.folds == 1);
  CHECK(r2.tree.kind == CertNode::Kind::Fail);

  // Constant -1/2: certified with its own value as the bound.
  const auto r3 = certify_nonpos(
      Poly2::constant(Coeff::rational(Rational(-1, 2))),
      Rect{Rational(0), Rational(0), Rational(1), Rational(1)}, ctx, {});
  REQUIRE(r3.certified);
  CHECK(r3.worst_bound == Rational(-1, 2));

  // y - 1 on [0,1] x [0,2]: positive near y = 2, never certified.
  const auto r4 = certify_nonpos(
      y - Rational(1), Rect{Rational(0), Rational(0), Rational(1), Rational(2)},
      ctx, {});
  CHECK_FALSE(r4.certified);
}

TEST_CASE("certified random polynomials are nonpositive on their rectangle") {
  std::mt19937 rng(987654321u);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> deg(0, 4);
  const EnclosureContext ctx = EnclosureContext::make(Rational(0), 64, 96);
  CertifyOptions opts;
  opts.pi_bits = 64;
  opts.sqrt_bits = 96;
  opts.max_depth = 6;

  int certified = 0, rejected = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int dx_deg = deg(rng);
    const int dy_deg = deg(rng) / 2;
    Poly2 p = Poly2::zero();
    for (int i = 0; i <= dx_deg; ++i)
      for (int j = 0; j <= dy_deg; ++j)
        p = p + Poly2::monomial(i, j,
                                Coeff::rational(Rational(num(rng), den(rng))));
    p = p - Rational(trial % 3);  // bias: a third of trials are shifted down
    // A polynomial with y-terms needs a genuinely two-dimensional rectangle.
    const Rational dy =
        dy_deg > 0 ? Rational(1 + trial % 2, 2) : Rational(trial % 3, 2);
    const Rect r{Rational(0), Rational(0), Rational(1 + trial % 2, 1), dy};

    const auto res = certify_nonpos(p, r, ctx, opts);
    if (!res.certified) {
      ++rejected;
      continue;
    }
    ++certified;
    // Exact nonpositivity on a 9x9 grid plus random rational points. The
    // coefficients are plain rationals, so the enclosure is a single point.
    const auto value_at = [&](const Rational& px, const Rational& py) {
      const RatInterval e = p.eval(px, py).enclosure(ctx);
      REQUIRE(e.is_point());
      return e.hi;
    };
    const int n = 8;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const Rational px = r.x0 + r.dx * Rational(i, n);
        const Rational py = r.y0 + r.dy * Rational(j, n);
        REQUIRE(value_at(px, py) <= 0);
      }
    }
    for (int k = 0; k < 20; ++k) {
      const Rational px = r.x0 + r.dx * Rational(num(rng) + 8, 16);
      const Rational py = r.y0 + r.dy * Rational(num(rng) + 8, 16);
      REQUIRE(value_at(px, py) <= 0);
    }
  }
  // The sample exercises both outcomes.
  CHECK(certified >= 25);
  CHECK(rejected >= 25);
}

TEST_CASE("linear parameter elimination reduces to the endpoint claims") {
  const Poly2 x = Poly2::var_x();
  const Poly2 p0 = x - Rational(1);
  const Poly2 p1 = Rational(-1) * x;
  const auto [e0, e1] = eliminate_linear_param(p0, p1);
  CHECK(e0 == p0);
  CHECK(e1 == p0 + p1);

  const EnclosureContext ctx = EnclosureContext::make(Rational(0), 96, 192);
  const Rect seg{Rational(0), Rational(0), Rational(1), Rational(0)};
  CHECK(certify_nonpos(e0, seg, ctx, {}).certified);
  CHECK(certify_nonpos(e1, seg, ctx, {}).certified);
  // Certifying both endpoints covers every parameter value in between.
  for (const Rational& s : {Rational(0), Rational(2, 5), Rational(1)}) {
    const Poly2 ps = p0 + p1 * s;
    CHECK(ps.eval(Rational(7, 9), Rational(0)).enclosure(ctx).hi <= 0);
  }
}
