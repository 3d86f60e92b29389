#pragma once
// The coefficient-fold nonpositivity test. Given the coefficient matrix
// rows[i][j] of p(x, y) = sum rows[i][j] x^i y^j, the fold processes rows from
// the highest x power down, maintaining a running vector acc (initially zero):
//
//     v[j] = max(acc[j], 0) * dx + rows[i][j]
//     z[0] = v[0];  z[j] = min(z[j-1], 0) / dy + v[j]
//     acc  = z
//
// and returns max(acc) after the last row. A result <= 0 proves
// p <= 0 on [0, dx] x [0, dy]. Every operation is monotone nondecreasing in
// the coefficients, so running it on upper endpoints of coefficient
// enclosures is sound for the exact polynomial.

#include "kitecert/interval.hpp"
#include "kitecert/poly2.hpp"
#include "kitecert/rational.hpp"

#include <stdexcept>
#include <vector>

namespace kitecert {

// Core fold on exact upper bounds of the coefficients. Requires dx > 0 and,
// when the polynomial actually involves y (more than one column), dy > 0.
inline Rational fold_value(const std::vector<std::vector<Rational>>& hi, const Rational& dx,
                           const Rational& dy) {
  if (hi.empty() || hi[0].empty()) throw std::invalid_argument("fold of empty matrix");
  const std::size_t ny = hi[0].size();
  if (dx <= 0) throw std::invalid_argument("fold requires dx > 0 (zero-area rectangle)");
  if (ny > 1 && dy <= 0)
    throw std::invalid_argument("fold requires dy > 0 for a bivariate polynomial");
  std::vector<Rational> acc(ny, Rational(0));
  std::vector<Rational> v(ny), z(ny);
  for (std::size_t ii = hi.size(); ii-- > 0;) {
    if (hi[ii].size() != ny) throw std::invalid_argument("ragged coefficient matrix");
    for (std::size_t j = 0; j < ny; ++j) v[j] = rmax(acc[j], Rational(0)) * dx + hi[ii][j];
    z[0] = v[0];
    for (std::size_t j = 1; j < ny; ++j) z[j] = rmin(z[j - 1], Rational(0)) / dy + v[j];
    acc = z;
  }
  Rational best = acc[0];
  for (std::size_t j = 1; j < ny; ++j) best = rmax(best, acc[j]);
  return best;
}

// Fold bound from interval coefficients (upper endpoints).
inline Rational fold_bound(const std::vector<std::vector<RatInterval>>& coeffs,
                           const Rational& dx, const Rational& dy) {
  std::vector<std::vector<Rational>> hi(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    hi[i].reserve(coeffs[i].size());
    for (const auto& c : coeffs[i]) hi[i].push_back(c.hi);
  }
  return fold_value(hi, dx, dy);
}

// Fold bound for an exact polynomial on an origin-anchored rectangle
// [0, dx] x [0, dy]. The polynomial must already be expressed relative to the
// rectangle corner. For univariate polynomials dy may be 0.
inline Rational fold_bound(const Poly2& p, const Rational& dx, const Rational& dy,
                           const EnclosureContext& ctx) {
  return fold_bound(p.coefficient_matrix(ctx), dx,
                    (p.degree_y() == 0 && dy == 0) ? Rational(1) : dy);
}

}  // namespace kitecert
