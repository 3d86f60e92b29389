#pragma once
// Univariate rewrite tactics. For a polynomial p on [0, dx] whose claim is
// p <= 0, a step replaces a monomial whose coefficient is provably
// nonnegative by a rational upper bound of the monomial itself
// (x^k <= sum_j f_j x^{p_j} on [0, dx], certified piecewise), or drops a
// monomial whose coefficient is provably nonpositive. Both moves can only
// increase p, so nonpositivity of the final, simpler polynomial implies
// nonpositivity of the original.

#include "kitecert/certify.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace kitecert {

struct TacticStep {
  enum class Op { Replace, Drop };
  Op op = Op::Drop;
  int power = 0;
  // Replace only: x^power <= sum factor * x^{target} on the whole interval.
  std::vector<std::pair<int, Rational>> replacement;
  // Replace only: certification pieces (lo, hi, flip). flip certifies the
  // side polynomial in the reversed variable hi - x.
  std::vector<std::tuple<Rational, Rational, bool>> pieces;

  static TacticStep replace(int power,
                            std::vector<std::pair<int, Rational>> repl,
                            std::vector<std::tuple<Rational, Rational, bool>> pieces) {
    TacticStep s;
    s.op = Op::Replace;
    s.power = power;
    s.replacement = std::move(repl);
    s.pieces = std::move(pieces);
    return s;
  }
  static TacticStep drop(int power) {
    TacticStep s;
    s.op = Op::Drop;
    s.power = power;
    return s;
  }
};

struct TacticResult {
  bool certified = false;
  CertNode tree;
  Poly2 final_poly;          // polynomial handed to the terminal fold
  Rational final_bound{0};   // worst fold bound of the terminal subtree
  std::string failure;       // human-readable reason when not certified
};

// x^k - sum_j f_j x^{p_j}, expressed in the same coefficient ring as `like`
// so that downstream arithmetic shares one radicand.
inline Poly2 tactic_side_poly(int power,
                              const std::vector<std::pair<int, Rational>>& repl,
                              const Poly2& like) {
  Poly2 s = Poly2::monomial(power, 0, Coeff::rational(Rational(1)), like.xname,
                            like.yname, like.m);
  for (const auto& [p, f] : repl)
    s = s - Poly2::monomial(p, 0, Coeff::rational(f), like.xname, like.yname,
                            like.m);
  return s;
}

namespace detail {

inline Claim certify_side_piece(const Poly2& side, const Rational& lo,
                                const Rational& hi, bool flip,
                                const EnclosureContext& ctx,
                                CertifyOptions opts, int index) {
  if (!(lo < hi)) throw std::logic_error("tactic piece with empty interval");
  Claim cl;
  cl.name = "piece" + std::to_string(index);
  cl.piece_lo = lo;
  cl.piece_hi = hi;
  cl.flipped = flip;
  cl.rect = Rect{Rational{0}, Rational{0}, hi - lo, Rational{0}};
  cl.poly = flip ? side.substituted(Rational{-1}, Coeff::rational(hi),
                                    Rational{1}, Coeff{})
                 : side.substituted(Rational{1}, Coeff::rational(lo),
                                    Rational{1}, Coeff{});
  // Side pieces are not bound by the caller's depth budget for primary
  // rectangles; give them room.
  opts.max_depth = std::max(opts.max_depth, 8);
  CertifyResult r = certify_nonpos(cl.poly, cl.rect, ctx, opts);
  cl.certified = r.certified;
  cl.tree = std::move(r.tree);
  return cl;
}

inline CertNode tactic_chain(Poly2 cur, const Rect& rect,
                             const std::vector<TacticStep>& steps,
                             std::size_t idx, const EnclosureContext& ctx,
                             const CertifyOptions& opts, TacticResult& out) {
  if (idx == steps.size()) {
    CertifyResult r = certify_nonpos(cur, rect, ctx, opts);
    out.certified = r.certified;
    out.final_poly = cur;
    out.final_bound = r.worst_bound;
    if (!r.certified) out.failure = "terminal fold not certified";
    return std::move(r.tree);
  }

  const TacticStep& st = steps[idx];
  CertNode n;
  n.kind = CertNode::Kind::Tactic;
  n.power = st.power;
  const std::size_t k = static_cast<std::size_t>(st.power);
  const Coeff c = k < cur.rows.size() ? cur.rows[k][0] : Coeff{};
  const RatInterval ce = c.enclosure(ctx);

  if (st.op == TacticStep::Op::Drop) {
    n.op = "drop_term";
    if (!(ce.hi <= 0)) {
      out.certified = false;
      out.failure = "drop_term gate failed at power " + std::to_string(st.power);
      n.child = std::make_unique<CertNode>();
      n.child->kind = CertNode::Kind::Fail;
      n.child->rect = rect;
      return n;
    }
    if (k < cur.rows.size()) cur.rows[k][0] = Coeff{};
    n.child = std::make_unique<CertNode>(
        tactic_chain(std::move(cur), rect, steps, idx + 1, ctx, opts, out));
    return n;
  }

  // Replace.
  n.op = "replace_power";
  n.replacement = st.replacement;
  if (!(ce.lo >= 0)) {
    out.certified = false;
    out.failure = "replace_power gate failed at power " + std::to_string(st.power);
    n.child = std::make_unique<CertNode>();
    n.child->kind = CertNode::Kind::Fail;
    n.child->rect = rect;
    return n;
  }

  // Pieces must tile [0, dx] exactly.
  auto pieces = st.pieces;
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
  Rational cursor{0};
  for (const auto& [lo, hi, flip] : pieces) {
    if (lo != cursor) throw std::logic_error("tactic pieces do not tile the interval");
    cursor = hi;
  }
  if (cursor != rect.dx) throw std::logic_error("tactic pieces do not cover the interval");

  const Poly2 side = tactic_side_poly(st.power, st.replacement, cur);
  bool sides_ok = true;
  int piece_index = 0;
  for (const auto& [lo, hi, flip] : pieces) {
    Claim cl = certify_side_piece(side, lo, hi, flip, ctx, opts, piece_index++);
    sides_ok = sides_ok && cl.certified;
    n.sides.push_back(std::move(cl));
  }
  if (!sides_ok) {
    out.certified = false;
    out.failure = "side condition failed at power " + std::to_string(st.power);
    n.child = std::make_unique<CertNode>();
    n.child->kind = CertNode::Kind::Fail;
    n.child->rect = rect;
    return n;
  }

  // p' = p - c * side  (removes c x^k, adds c * sum f_j x^{p_j}).
  cur = cur - side.scaled(c);
  if (k < cur.rows.size()) cur.rows[k][0] = Coeff{};  // cancelation is exact
  n.child = std::make_unique<CertNode>(
      tactic_chain(std::move(cur), rect, steps, idx + 1, ctx, opts, out));
  return n;
}

}  // namespace detail

// Prove p <= 0 on rect (univariate: rect.dy == 0) via the given rewrite
// steps followed by a terminal fold certification of the rewritten
// polynomial.
inline TacticResult apply_tactics(const Poly2& p, const Rect& rect,
                                  const std::vector<TacticStep>& steps,
                                  const EnclosureContext& ctx,
                                  const CertifyOptions& opts = {}) {
  rect.validate();
  if (!rect.one_dimensional() || p.degree_y() > 0)
    throw std::invalid_argument("tactics require a univariate claim");
  if (rect.x0 != 0)
    throw std::invalid_argument("tactic claims must start at the origin");
  TacticResult out;
  out.tree = detail::tactic_chain(p, rect, steps, 0, ctx, opts, out);
  return out;
}

}  // namespace kitecert
