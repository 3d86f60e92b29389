#pragma once
// Independent certificate verification. The checker trusts nothing in the
// tree beyond its shape: it re-derives every sub-rectangle from the claim
// rectangle (splits must sit at exact midpoints and tile their parent),
// re-computes every fold bound from the claim polynomial at the precision
// recorded in the certificate header, re-applies every tactic transformation
// from scratch, and re-checks every gate. Any stored value that disagrees
// with the recomputation invalidates the certificate.

#include "kitecert/tactic.hpp"

#include <string>
#include <vector>

namespace kitecert {

struct CheckIssue {
  std::string claim;
  std::string detail;
};

struct CheckReport {
  bool valid = false;      // internally consistent (recomputations all match)
  bool certified = false;  // valid and every claim is a complete proof
  int leaves_checked = 0;
  std::vector<CheckIssue> issues;
};

namespace detail {

struct CheckWorker {
  const std::string& claim_name;
  const EnclosureContext& ctx;
  CheckReport& report;

  void issue(const std::string& detail) {
    report.valid = false;
    report.issues.push_back({claim_name, detail});
  }

  // Verifies node n proves poly <= 0 on expect; returns whether the subtree
  // is a complete proof. Structure errors are recorded as issues.
  bool node(const CertNode& n, const Poly2& poly, const Rect& expect) {
    switch (n.kind) {
      case CertNode::Kind::Fold: {
        if (!(n.rect == expect)) {
          issue("fold leaf rectangle does not match its derived position");
          return false;
        }
        const Poly2 local = poly.shifted(expect.x0, expect.y0);
        const Rational recomputed = fold_bound(local, expect.dx, expect.dy, ctx);
        ++report.leaves_checked;
        if (recomputed != n.bound) {
          issue("stored fold bound " + to_fraction_string(n.bound) +
                " does not match recomputed " + to_fraction_string(recomputed));
          return false;
        }
        if (!(n.bound <= 0)) {
          issue("fold leaf bound is positive");
          return false;
        }
        return true;
      }
      case CertNode::Kind::Fail:
        return false;  // honest failure: structurally fine, not a proof
      case CertNode::Kind::Split: {
        if (n.axis != 0 && n.axis != 1) {
          issue("split axis out of range");
          return false;
        }
        if (n.axis == 1 && expect.one_dimensional()) {
          issue("split on y of a one-dimensional rectangle");
          return false;
        }
        const auto [lo_half, hi_half] = expect.split(n.axis);
        const Rational mid = n.axis == 0 ? lo_half.x0 + lo_half.dx
                                         : lo_half.y0 + lo_half.dy;
        if (n.at != mid) {
          issue("split point is not the exact midpoint");
          return false;
        }
        const bool a = node(n.children[0], poly, lo_half);
        const bool b = node(n.children[1], poly, hi_half);
        return a && b;
      }
      case CertNode::Kind::Tactic:
        return tactic(n, poly, expect);
    }
    return false;
  }

  bool tactic(const CertNode& n, const Poly2& poly, const Rect& expect) {
    if (!expect.one_dimensional() || poly.degree_y() > 0 || expect.x0 != 0) {
      issue("tactic node on a non-univariate or non-anchored claim");
      return false;
    }
    const std::size_t k = static_cast<std::size_t>(n.power);
    const Coeff c = k < poly.rows.size() ? poly.rows[k][0] : Coeff{};
    const RatInterval ce = c.enclosure(ctx);
    Poly2 next = poly;

    if (n.op == "drop_term") {
      if (!(ce.hi <= 0)) {
        issue("drop_term gate does not hold at power " + std::to_string(n.power));
        return false;
      }
      if (k < next.rows.size()) next.rows[k][0] = Coeff{};
    } else if (n.op == "replace_power") {
      if (!(ce.lo >= 0)) {
        issue("replace_power gate does not hold at power " + std::to_string(n.power));
        return false;
      }
      // Side pieces must tile [0, dx] and carry the derived polynomials.
      std::vector<const Claim*> pieces;
      for (const auto& s : n.sides) pieces.push_back(&s);
      std::sort(pieces.begin(), pieces.end(), [](const Claim* a, const Claim* b) {
        if (!a->piece_lo || !b->piece_lo) return false;
        return *a->piece_lo < *b->piece_lo;
      });
      Rational cursor{0};
      const Poly2 side = tactic_side_poly(n.power, n.replacement, poly);
      bool ok = true;
      for (const Claim* s : pieces) {
        if (!s->piece_lo || !s->piece_hi) {
          issue("tactic side piece without interval metadata");
          return false;
        }
        if (*s->piece_lo != cursor) {
          issue("tactic side pieces do not tile the interval");
          return false;
        }
        if (!(*s->piece_lo < *s->piece_hi)) {
          issue("tactic side piece with empty interval");
          return false;
        }
        cursor = *s->piece_hi;
        const Rational width = *s->piece_hi - *s->piece_lo;
        if (!(s->rect == Rect{Rational(0), Rational(0), width, Rational(0)})) {
          issue("tactic side piece rectangle does not match its interval");
          return false;
        }
        const Poly2 derived =
            s->flipped ? side.substituted(Rational(-1), Coeff::rational(*s->piece_hi),
                                          Rational(1), Coeff{})
                       : side.substituted(Rational(1), Coeff::rational(*s->piece_lo),
                                          Rational(1), Coeff{});
        if (!(derived == s->poly)) {
          issue("tactic side polynomial does not match its derivation");
          return false;
        }
        ok = node(s->tree, s->poly, s->rect) && ok;
      }
      if (cursor != expect.dx) {
        issue("tactic side pieces do not cover the interval");
        return false;
      }
      if (!ok) return false;
      next = poly - side.scaled(c);
      if (k < next.rows.size()) next.rows[k][0] = Coeff{};
    } else {
      issue("unknown tactic op " + n.op);
      return false;
    }

    if (!n.child) {
      issue("tactic node without continuation");
      return false;
    }
    return node(*n.child, next, expect);
  }
};

}  // namespace detail

inline CheckReport check_certificate(const CaseCertificate& cc) {
  CheckReport report;
  report.valid = true;
  bool all = true;
  for (const auto& claim : cc.claims) {
    try {
      claim.rect.validate();
      const EnclosureContext ctx =
          EnclosureContext::make(claim.poly.m, cc.pi_bits, cc.sqrt_bits);
      detail::CheckWorker w{claim.name, ctx, report};
      const bool ok = w.node(claim.tree, claim.poly, claim.rect);
      if (ok != claim.certified) {
        report.valid = false;
        report.issues.push_back(
            {claim.name, "stored certified flag disagrees with verification"});
      }
      all = all && ok;
    } catch (const std::exception& e) {
      report.valid = false;
      report.issues.push_back({claim.name, std::string("exception: ") + e.what()});
      all = false;
    }
  }
  if (cc.certified != all) {
    report.valid = false;
    report.issues.push_back(
        {"<case>", "stored case certified flag disagrees with verification"});
  }
  report.certified = report.valid && all;
  return report;
}

inline CheckReport check_certificate(const Json& j) {
  return check_certificate(certificate_from_json(j));
}

}  // namespace kitecert
