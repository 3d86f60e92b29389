#pragma once
// Bivariate polynomials with exact Coeff coefficients (Q[t, sqrt(m)]), stored
// as a dense rectangular matrix rows[i][j] = coefficient of x^i y^j. The first
// variable ("x") is always the one whose power indexes rows; the fold
// algorithm and all rectangle semantics follow that convention.

#include "kitecert/coeff.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kitecert {

struct Poly2 {
  std::string xname = "x";
  std::string yname = "y";
  Rational m{0};  // radicand of the (single) square root in the ring
  std::vector<std::vector<Coeff>> rows{{Coeff{}}};

  int degree_x() const { return static_cast<int>(rows.size()) - 1; }
  int degree_y() const { return static_cast<int>(rows[0].size()) - 1; }

  bool is_zero() const {
    for (const auto& r : rows)
      for (const auto& c : r)
        if (!c.is_zero()) return false;
    return true;
  }

  static Poly2 zero(std::string x = "x", std::string y = "y", Rational m = Rational(0)) {
    Poly2 p;
    p.xname = std::move(x);
    p.yname = std::move(y);
    p.m = std::move(m);
    return p;
  }

  static Poly2 constant(Coeff c, std::string x = "x", std::string y = "y",
                        Rational m = Rational(0)) {
    Poly2 p = zero(std::move(x), std::move(y), std::move(m));
    p.rows[0][0] = std::move(c);
    return p;
  }

  static Poly2 monomial(int i, int j, Coeff c, std::string x = "x", std::string y = "y",
                        Rational m = Rational(0)) {
    Poly2 p = zero(std::move(x), std::move(y), std::move(m));
    p.ensure(i, j);
    p.rows[i][j] = std::move(c);
    return p;
  }

  static Poly2 var_x(std::string x = "x", std::string y = "y", Rational m = Rational(0)) {
    return monomial(1, 0, Coeff::rational(Rational(1)), std::move(x), std::move(y),
                    std::move(m));
  }
  static Poly2 var_y(std::string x = "x", std::string y = "y", Rational m = Rational(0)) {
    return monomial(0, 1, Coeff::rational(Rational(1)), std::move(x), std::move(y),
                    std::move(m));
  }

  void ensure(int i, int j) {
    const std::size_t want_cols =
        std::max(rows[0].size(), static_cast<std::size_t>(j) + 1);
    for (auto& r : rows) r.resize(want_cols);
    while (rows.size() <= static_cast<std::size_t>(i))
      rows.emplace_back(want_cols);
  }

  const Coeff& at(int i, int j) const {
    static const Coeff kZero{};
    if (i < 0 || j < 0 || i >= static_cast<int>(rows.size()) ||
        j >= static_cast<int>(rows[0].size()))
      return kZero;
    return rows[i][j];
  }

  void trim() {
    while (rows.size() > 1) {
      bool all_zero = true;
      for (const auto& c : rows.back())
        if (!c.is_zero()) { all_zero = false; break; }
      if (!all_zero) break;
      rows.pop_back();
    }
    std::size_t cols = 1;
    for (const auto& r : rows)
      for (std::size_t j = r.size(); j > cols; --j)
        if (!r[j - 1].is_zero()) { cols = std::max(cols, j); break; }
    for (auto& r : rows) r.resize(cols);
  }

  static Rational merged_radicand(const Poly2& a, const Poly2& b) {
    if (a.m == b.m) return a.m;
    if (a.m == 0) return b.m;
    if (b.m == 0) return a.m;
    throw std::logic_error("mixing polynomials over different radicands");
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 out = zero(a.xname, a.yname, merged_radicand(a, b));
    out.ensure(std::max(a.degree_x(), b.degree_x()), std::max(a.degree_y(), b.degree_y()));
    for (int i = 0; i <= out.degree_x(); ++i)
      for (int j = 0; j <= out.degree_y(); ++j) out.rows[i][j] = a.at(i, j) + b.at(i, j);
    out.trim();
    return out;
  }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }
  friend Poly2 operator-(const Poly2& a) {
    Poly2 out = a;
    for (auto& r : out.rows)
      for (auto& c : r) c = -c;
    return out;
  }
  friend Poly2 operator*(const Poly2& a, const Rational& s) {
    Poly2 out = a;
    for (auto& r : out.rows)
      for (auto& c : r) c = c * s;
    out.trim();
    return out;
  }
  friend Poly2 operator*(const Rational& s, const Poly2& a) { return a * s; }
  friend Poly2 operator+(const Poly2& a, const Rational& s) {
    return a + constant(Coeff::rational(s), a.xname, a.yname, a.m);
  }
  friend Poly2 operator-(const Poly2& a, const Rational& s) { return a + (-s); }

  Poly2 scaled(const Coeff& s) const {
    Poly2 out = *this;
    for (auto& r : out.rows)
      for (auto& c : r) c = Coeff::mul(c, s, m);
    out.trim();
    return out;
  }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out = zero(a.xname, a.yname, merged_radicand(a, b));
    out.ensure(a.degree_x() + b.degree_x(), a.degree_y() + b.degree_y());
    for (int i = 0; i <= a.degree_x(); ++i)
      for (int j = 0; j <= a.degree_y(); ++j) {
        if (a.rows[i][j].is_zero()) continue;
        for (int k = 0; k <= b.degree_x(); ++k)
          for (int l = 0; l <= b.degree_y(); ++l) {
            if (b.rows[k][l].is_zero()) continue;
            out.rows[i + k][j + l] += Coeff::mul(a.rows[i][j], b.rows[k][l], out.m);
          }
      }
    out.trim();
    return out;
  }

  friend bool operator==(const Poly2& a, const Poly2& b) {
    if (a.m != b.m) return false;
    const int dx = std::max(a.degree_x(), b.degree_x());
    const int dy = std::max(a.degree_y(), b.degree_y());
    for (int i = 0; i <= dx; ++i)
      for (int j = 0; j <= dy; ++j)
        if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
  }

  Poly2 pow(unsigned n) const {
    Poly2 acc = constant(Coeff::rational(Rational(1)), xname, yname, m);
    for (unsigned i = 0; i < n; ++i) acc = acc * (*this);
    return acc;
  }

  // Exact evaluation at coefficient-ring points.
  Coeff eval(const Coeff& x, const Coeff& y) const {
    Coeff out{};
    for (int i = degree_x(); i >= 0; --i) {
      Coeff row{};
      for (int j = degree_y(); j >= 0; --j) row = Coeff::mul(row, y, m) + rows[i][j];
      out = Coeff::mul(out, x, m) + row;
    }
    return out;
  }
  Coeff eval(const Rational& x, const Rational& y) const {
    return eval(Coeff::rational(x), Coeff::rational(y));
  }

  // Substitution x -> sx*x + cx, y -> sy*y + cy (exact, binomial expansion).
  // The affine images keep the polynomial inside the same coefficient ring.
  Poly2 substituted(const Rational& sx, const Coeff& cx, const Rational& sy,
                    const Coeff& cy) const {
    const int dx = degree_x(), dy = degree_y();
    // powers[i][p] = coefficient of x^p in (sx x + cx)^i
    auto build = [this](int deg, const Rational& s, const Coeff& c) {
      std::vector<std::vector<Coeff>> powers(deg + 1);
      powers[0] = {Coeff::rational(Rational(1))};
      for (int i = 1; i <= deg; ++i) {
        powers[i].assign(i + 1, Coeff{});
        for (int p = 0; p < i; ++p) {
          powers[i][p + 1] += powers[i - 1][p] * s;
          powers[i][p] += Coeff::mul(powers[i - 1][p], c, m);
        }
      }
      return powers;
    };
    const auto px = build(dx, sx, cx);
    const auto py = build(dy, sy, cy);
    Poly2 out = zero(xname, yname, m);
    out.ensure(dx, dy);
    for (int i = 0; i <= dx; ++i)
      for (int j = 0; j <= dy; ++j) {
        if (rows[i][j].is_zero()) continue;
        for (int p = 0; p <= i; ++p) {
          if (px[i][p].is_zero()) continue;
          const Coeff partial = Coeff::mul(rows[i][j], px[i][p], m);
          for (int q = 0; q <= j; ++q) {
            if (py[j][q].is_zero()) continue;
            out.rows[p][q] += Coeff::mul(partial, py[j][q], m);
          }
        }
      }
    out.trim();
    return out;
  }

  // Translation-only substitution x -> x + x0, y -> y + y0 with rational
  // offsets: the form used when anchoring certificate rectangles at the
  // origin.
  Poly2 shifted(const Rational& x0, const Rational& y0) const {
    if (x0 == 0 && y0 == 0) return *this;
    return substituted(Rational(1), Coeff::rational(x0), Rational(1),
                       Coeff::rational(y0));
  }

  std::vector<std::vector<RatInterval>> coefficient_matrix(
      const EnclosureContext& ctx) const {
    std::vector<std::vector<RatInterval>> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out[i].reserve(rows[i].size());
      for (const auto& c : rows[i]) out[i].push_back(c.enclosure(ctx));
    }
    return out;
  }
};

}  // namespace kitecert
