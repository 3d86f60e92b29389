#pragma once

// Drives the certifier over a case definition and packages the results as a
// self-contained certificate that check_certificate can verify from scratch.

#include "kitecert/cases.hpp"
#include "kitecert/certificate.hpp"
#include "kitecert/certify.hpp"
#include "kitecert/tactic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace kitecert {

enum class Strategy { Auto, Subdivide, Tactics };

inline Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::Auto;
  if (s == "subdivide") return Strategy::Subdivide;
  if (s == "tactics") return Strategy::Tactics;
  throw std::invalid_argument("unknown strategy: " + s);
}

// Size and shape of a proof tree. max_depth counts split nesting within a
// single certified rectangle; tactic side pieces are independent rectangles
// and restart the depth count at zero.
struct TreeStats {
  long long fold_leaves = 0;
  long long fail_nodes = 0;
  int max_depth = 0;
};

namespace detail {

inline void accumulate_tree_stats(const CertNode& n, int depth, TreeStats& s) {
  switch (n.kind) {
    case CertNode::Kind::Fold:
      ++s.fold_leaves;
      s.max_depth = std::max(s.max_depth, depth);
      return;
    case CertNode::Kind::Fail:
      ++s.fail_nodes;
      return;
    case CertNode::Kind::Split:
      for (const auto& c : n.children) accumulate_tree_stats(c, depth + 1, s);
      return;
    case CertNode::Kind::Tactic:
      for (const auto& side : n.sides) accumulate_tree_stats(side.tree, 0, s);
      if (n.child) accumulate_tree_stats(*n.child, depth, s);
      return;
  }
}

}  // namespace detail

inline TreeStats tree_stats(const CertNode& n) {
  TreeStats s;
  detail::accumulate_tree_stats(n, 0, s);
  return s;
}

// Proves every rectangle of every claim in the case. Strategy::Auto picks the
// scripted rewrite proof where one exists and subdivision otherwise;
// Strategy::Tactics on a case without a script is an error.
inline CaseCertificate prove_case(const cases::CaseDef& def,
                                  Strategy strategy = Strategy::Auto,
                                  const CertifyOptions& opts = {}) {
  if (strategy == Strategy::Tactics && !def.has_tactics)
    throw std::invalid_argument("case " + def.id + " has no tactic script");
  const bool use_tactics = def.has_tactics && strategy != Strategy::Subdivide;

  CaseCertificate cc;
  cc.case_id = def.id;
  cc.strategy = use_tactics ? "tactics" : "subdivide";
  cc.pi_bits = opts.pi_bits;
  cc.sqrt_bits = opts.sqrt_bits;
  bool all = true;
  for (const auto& cd : def.claims) {
    const EnclosureContext ctx =
        EnclosureContext::make(cd.poly.m, opts.pi_bits, opts.sqrt_bits);
    for (std::size_t i = 0; i < cd.rects.size(); ++i) {
      Claim c;
      c.name = cd.rects.size() == 1 ? cd.name : cd.name + "/r" + std::to_string(i);
      c.poly = cd.poly;
      c.rect = cd.rects[i];
      if (use_tactics) {
        TacticResult r =
            apply_tactics(cd.poly, cd.rects[i], cases::k4_tactic_steps(), ctx, opts);
        c.certified = r.certified;
        c.tree = std::move(r.tree);
      } else {
        CertifyResult r = certify_nonpos(cd.poly, cd.rects[i], ctx, opts);
        c.certified = r.certified;
        c.tree = std::move(r.tree);
      }
      all = all && c.certified;
      cc.claims.push_back(std::move(c));
    }
  }
  cc.certified = all;
  return cc;
}

inline CaseCertificate prove_case(const std::string& id,
                                  Strategy strategy = Strategy::Auto,
                                  const CertifyOptions& opts = {}) {
  return prove_case(cases::make_case(id), strategy, opts);
}

}  // namespace kitecert
