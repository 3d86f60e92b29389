#pragma once
// Certificate data model and its exact JSON serialization. Every number in a
// certificate is an exact rational rendered as "num/den"; reading a
// certificate back reproduces the same objects bit for bit. Decimal output
// never appears here (only in human-facing CSV columns elsewhere).

#include "kitecert/poly2.hpp"
#include "kitecert/rect.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kitecert {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON helpers for the exact types
// ---------------------------------------------------------------------------

inline Json rational_to_json(const Rational& r) { return to_fraction_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

inline Json piquad_to_json(const PiQuad& p) {
  return Json::array({rational_to_json(p.c0), rational_to_json(p.c1), rational_to_json(p.c2)});
}

inline PiQuad piquad_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected 3-element PiQuad");
  return PiQuad(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]));
}

inline Json coeff_to_json(const Coeff& c) {
  Json j;
  j["u"] = piquad_to_json(c.u);
  if (!c.v.is_zero()) j["v"] = piquad_to_json(c.v);
  return j;
}

inline Coeff coeff_from_json(const Json& j) {
  Coeff c;
  c.u = piquad_from_json(j.at("u"));
  if (j.contains("v")) c.v = piquad_from_json(j.at("v"));
  return c;
}

inline Json poly_to_json(const Poly2& p) {
  Json j;
  j["x"] = p.xname;
  j["y"] = p.yname;
  j["m"] = rational_to_json(p.m);
  Json rows = Json::array();
  for (const auto& row : p.rows) {
    Json jr = Json::array();
    for (const auto& c : row) jr.push_back(coeff_to_json(c));
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline Poly2 poly_from_json(const Json& j) {
  Poly2 p;
  p.xname = j.at("x").get<std::string>();
  p.yname = j.at("y").get<std::string>();
  p.m = rational_from_json(j.at("m"));
  p.rows.clear();
  for (const auto& jr : j.at("rows")) {
    std::vector<Coeff> row;
    for (const auto& jc : jr) row.push_back(coeff_from_json(jc));
    p.rows.push_back(std::move(row));
  }
  if (p.rows.empty() || p.rows[0].empty())
    throw std::invalid_argument("polynomial with no coefficients");
  for (const auto& row : p.rows)
    if (row.size() != p.rows[0].size())
      throw std::invalid_argument("ragged polynomial coefficient matrix");
  return p;
}

inline Json rect_to_json(const Rect& r) {
  Json j;
  j["x0"] = rational_to_json(r.x0);
  j["y0"] = rational_to_json(r.y0);
  j["dx"] = rational_to_json(r.dx);
  j["dy"] = rational_to_json(r.dy);
  return j;
}

inline Rect rect_from_json(const Json& j) {
  return Rect{rational_from_json(j.at("x0")), rational_from_json(j.at("y0")),
              rational_from_json(j.at("dx")), rational_from_json(j.at("dy"))};
}

// ---------------------------------------------------------------------------
// Certificate tree
// ---------------------------------------------------------------------------

struct Claim;  // forward: tactic nodes carry side-condition claims

struct CertNode {
  enum class Kind { Fold, Split, Fail, Tactic };
  Kind kind = Kind::Fold;

  // Fold / Fail
  Rect rect;
  Rational bound{0};

  // Split
  int axis = 0;  // 0 = x, 1 = y
  Rational at{0};
  std::vector<CertNode> children;

  // Tactic (univariate rewrite step): op is "replace_power" or "drop_term".
  std::string op;
  int power = 0;
  std::vector<std::pair<int, Rational>> replacement;  // (target power, factor)
  std::vector<Claim> sides;                           // piece certificates
  std::unique_ptr<CertNode> child;                    // continuation

  CertNode() = default;
  CertNode(const CertNode& o) { *this = o; }
  CertNode& operator=(const CertNode& o);
  CertNode(CertNode&&) = default;
  CertNode& operator=(CertNode&&) = default;
};

// One provable statement: poly <= 0 on rect (poly expressed in absolute
// coordinates; verification shifts it to each sub-rectangle's corner).
struct Claim {
  std::string name;
  Poly2 poly;
  Rect rect;
  CertNode tree;
  bool certified = false;

  // Orientation metadata for tactic side pieces (piece of the original
  // variable interval this claim covers, possibly direction-reversed).
  std::optional<Rational> piece_lo, piece_hi;
  bool flipped = false;
};

inline CertNode& CertNode::operator=(const CertNode& o) {
  if (this == &o) return *this;
  kind = o.kind;
  rect = o.rect;
  bound = o.bound;
  axis = o.axis;
  at = o.at;
  children = o.children;
  op = o.op;
  power = o.power;
  replacement = o.replacement;
  sides = o.sides;
  child = o.child ? std::make_unique<CertNode>(*o.child) : nullptr;
  return *this;
}

struct CaseCertificate {
  std::string case_id;
  std::string strategy = "subdivide";  // or "tactics"
  unsigned pi_bits = 96;
  unsigned sqrt_bits = 192;
  std::vector<Claim> claims;
  bool certified = false;
};

// ---------------------------------------------------------------------------
// Tree serialization
// ---------------------------------------------------------------------------

Json claim_to_json(const Claim& c);
Claim claim_from_json(const Json& j);

inline Json node_to_json(const CertNode& n) {
  Json j;
  switch (n.kind) {
    case CertNode::Kind::Fold:
      j["kind"] = "fold";
      j["rect"] = rect_to_json(n.rect);
      j["bound"] = rational_to_json(n.bound);
      break;
    case CertNode::Kind::Fail:
      j["kind"] = "fail";
      j["rect"] = rect_to_json(n.rect);
      j["bound"] = rational_to_json(n.bound);
      break;
    case CertNode::Kind::Split: {
      j["kind"] = "split";
      j["axis"] = n.axis == 0 ? "x" : "y";
      j["at"] = rational_to_json(n.at);
      Json ch = Json::array();
      for (const auto& c : n.children) ch.push_back(node_to_json(c));
      j["children"] = std::move(ch);
      break;
    }
    case CertNode::Kind::Tactic: {
      j["kind"] = "tactic";
      j["op"] = n.op;
      j["power"] = n.power;
      if (n.op == "replace_power") {
        Json rep = Json::array();
        for (const auto& [p, f] : n.replacement) {
          Json e;
          e["power"] = p;
          e["factor"] = rational_to_json(f);
          rep.push_back(std::move(e));
        }
        j["replacement"] = std::move(rep);
        Json sides = Json::array();
        for (const auto& s : n.sides) sides.push_back(claim_to_json(s));
        j["sides"] = std::move(sides);
      }
      if (!n.child) throw std::logic_error("tactic node without continuation");
      j["child"] = node_to_json(*n.child);
      break;
    }
  }
  return j;
}

inline CertNode node_from_json(const Json& j) {
  CertNode n;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "fold" || kind == "fail") {
    n.kind = kind == "fold" ? CertNode::Kind::Fold : CertNode::Kind::Fail;
    n.rect = rect_from_json(j.at("rect"));
    n.bound = rational_from_json(j.at("bound"));
  } else if (kind == "split") {
    n.kind = CertNode::Kind::Split;
    const std::string ax = j.at("axis").get<std::string>();
    if (ax != "x" && ax != "y") throw std::invalid_argument("bad split axis");
    n.axis = ax == "x" ? 0 : 1;
    n.at = rational_from_json(j.at("at"));
    for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c));
    if (n.children.size() != 2) throw std::invalid_argument("split must have 2 children");
  } else if (kind == "tactic") {
    n.kind = CertNode::Kind::Tactic;
    n.op = j.at("op").get<std::string>();
    if (n.op != "replace_power" && n.op != "drop_term")
      throw std::invalid_argument("unknown tactic op: " + n.op);
    n.power = j.at("power").get<int>();
    if (n.op == "replace_power") {
      for (const auto& e : j.at("replacement"))
        n.replacement.emplace_back(e.at("power").get<int>(),
                                   rational_from_json(e.at("factor")));
      for (const auto& s : j.at("sides")) n.sides.push_back(claim_from_json(s));
    }
    n.child = std::make_unique<CertNode>(node_from_json(j.at("child")));
  } else {
    throw std::invalid_argument("unknown certificate node kind: " + kind);
  }
  return n;
}

inline Json claim_to_json(const Claim& c) {
  Json j;
  j["name"] = c.name;
  j["poly"] = poly_to_json(c.poly);
  j["rect"] = rect_to_json(c.rect);
  if (c.piece_lo) j["piece_lo"] = rational_to_json(*c.piece_lo);
  if (c.piece_hi) j["piece_hi"] = rational_to_json(*c.piece_hi);
  if (c.flipped) j["flipped"] = true;
  j["certified"] = c.certified;
  j["tree"] = node_to_json(c.tree);
  return j;
}

inline Claim claim_from_json(const Json& j) {
  Claim c;
  c.name = j.at("name").get<std::string>();
  c.poly = poly_from_json(j.at("poly"));
  c.rect = rect_from_json(j.at("rect"));
  if (j.contains("piece_lo")) c.piece_lo = rational_from_json(j.at("piece_lo"));
  if (j.contains("piece_hi")) c.piece_hi = rational_from_json(j.at("piece_hi"));
  c.flipped = j.value("flipped", false);
  c.certified = j.at("certified").get<bool>();
  c.tree = node_from_json(j.at("tree"));
  return c;
}

inline Json certificate_to_json(const CaseCertificate& cc) {
  Json j;
  j["format"] = "kitecert-cert-1";
  j["case"] = cc.case_id;
  j["strategy"] = cc.strategy;
  j["pi_bits"] = cc.pi_bits;
  j["sqrt_bits"] = cc.sqrt_bits;
  j["certified"] = cc.certified;
  Json cl = Json::array();
  for (const auto& c : cc.claims) cl.push_back(claim_to_json(c));
  j["claims"] = std::move(cl);
  return j;
}

inline CaseCertificate certificate_from_json(const Json& j) {
  if (j.value("format", "") != "kitecert-cert-1")
    throw std::invalid_argument("not a kitecert certificate");
  CaseCertificate cc;
  cc.case_id = j.at("case").get<std::string>();
  cc.strategy = j.at("strategy").get<std::string>();
  cc.pi_bits = j.at("pi_bits").get<unsigned>();
  cc.sqrt_bits = j.at("sqrt_bits").get<unsigned>();
  cc.certified = j.at("certified").get<bool>();
  for (const auto& c : j.at("claims")) cc.claims.push_back(claim_from_json(c));
  return cc;
}

}  // namespace kitecert
