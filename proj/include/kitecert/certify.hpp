#pragma once
// Rigorous nonpositivity certification on axis-aligned boxes.
//
// certify_nonpos(p, rect) attempts to prove p(x, y) <= 0 for all (x, y) in
// rect, by bounding p with the cumulative fold of upper coefficient
// enclosures and bisecting the longer side on failure. The result tree
// records exactly what was established and is independently re-checkable
// (see checker.hpp).

#include "kitecert/certificate.hpp"
#include "kitecert/fold.hpp"

#include <algorithm>
#include <utility>

namespace kitecert {

struct CertifyOptions {
  unsigned pi_bits = 96;     // width target for the pi^2 enclosure
  unsigned sqrt_bits = 192;  // denominator bits for sqrt(m) enclosures
  int max_depth = 12;        // bisection depth cap
};

struct CertifyStats {
  int leaves = 0;     // fold leaves in the final tree
  int max_depth = 0;  // deepest split reached
  int folds = 0;      // fold-bound evaluations performed
};

struct CertifyResult {
  bool certified = false;
  CertNode tree;
  CertifyStats stats;
  Rational worst_bound{0};  // max fold bound over certified leaves
};

namespace detail {

// Exact evaluation of the shifted polynomial at a local sample point. A
// strictly positive enclosure disproves the claim on any box containing the
// point, so subdivision can stop immediately.
inline bool positive_witness(const Poly2& local, const Rect& r,
                             const EnclosureContext& ctx) {
  std::vector<std::pair<Rational, Rational>> pts;
  const Rational zero{0};
  pts.emplace_back(zero, zero);
  pts.emplace_back(r.dx, zero);
  pts.emplace_back(r.dx / 2, r.dy / 2);
  if (!r.one_dimensional()) {
    pts.emplace_back(zero, r.dy);
    pts.emplace_back(r.dx, r.dy);
  }
  for (const auto& [px, py] : pts) {
    const Coeff val = local.eval(Coeff::rational(px), Coeff::rational(py));
    if (val.enclosure(ctx).strictly_positive()) return true;
  }
  return false;
}

struct CertifyWorker {
  const Poly2& root_poly;  // absolute coordinates
  const EnclosureContext& ctx;
  const CertifyOptions& opts;
  CertifyStats stats;
  Rational worst{0};
  bool have_worst = false;

  // Certify on the absolute rectangle r at the given depth. Returns the
  // node; ok reports success.
  CertNode run(const Rect& r, int depth, bool& ok) {
    const Poly2 local = root_poly.shifted(r.x0, r.y0);
    const Rational bound = fold_bound(local, r.dx, r.dy, ctx);
    ++stats.folds;
    stats.max_depth = std::max(stats.max_depth, depth);

    CertNode n;
    n.rect = r;
    n.bound = bound;
    if (bound <= 0) {
      n.kind = CertNode::Kind::Fold;
      ++stats.leaves;
      if (!have_worst || bound > worst) {
        worst = bound;
        have_worst = true;
      }
      ok = true;
      return n;
    }
    if (depth >= opts.max_depth || positive_witness(local, r, ctx)) {
      n.kind = CertNode::Kind::Fail;
      ok = false;
      return n;
    }

    // Bisect the longer side (ties go to x), low half first.
    const int axis = (r.one_dimensional() || r.dx >= r.dy) ? 0 : 1;
    const auto [lo_half, hi_half] = r.split(axis);
    CertNode split;
    split.kind = CertNode::Kind::Split;
    split.axis = axis;
    split.at = axis == 0 ? lo_half.x0 + lo_half.dx : lo_half.y0 + lo_half.dy;
    bool ok_lo = false;
    split.children.push_back(run(lo_half, depth + 1, ok_lo));
    if (!ok_lo) {
      ok = false;
      return split;  // short-circuit: no point refining the other half
    }
    bool ok_hi = false;
    split.children.push_back(run(hi_half, depth + 1, ok_hi));
    ok = ok_hi;
    return split;
  }
};

}  // namespace detail

inline CertifyResult certify_nonpos(const Poly2& p, const Rect& r,
                                    const EnclosureContext& ctx,
                                    const CertifyOptions& opts = {}) {
  r.validate();
  if (r.one_dimensional() && p.degree_y() > 0)
    throw std::invalid_argument("2-D polynomial on a segment rectangle");
  detail::CertifyWorker w{p, ctx, opts, {}, Rational{0}, false};
  bool ok = false;
  CertifyResult res;
  res.tree = w.run(r, 0, ok);
  res.certified = ok;
  res.stats = w.stats;
  res.worst_bound = w.worst;
  return res;
}

inline CertifyResult certify_nonpos(const Poly2& p, const Rect& r,
                                    const CertifyOptions& opts = {}) {
  const EnclosureContext ctx =
      EnclosureContext::make(p.m, opts.pi_bits, opts.sqrt_bits);
  return certify_nonpos(p, r, ctx, opts);
}

// Reduce a claim that is affine in a parameter s on [0, 1]:
//   p0 + s*p1 <= 0 for all s in [0,1]  <=>  p0 <= 0 and p0 + p1 <= 0.
inline std::pair<Poly2, Poly2> eliminate_linear_param(const Poly2& p0,
                                                      const Poly2& p1) {
  return {p0, p0 + p1};
}

}  // namespace kitecert
