#pragma once
// Closed intervals with exact rational endpoints. All operations return
// enclosures: the exact real-arithmetic image is contained in the result.
// Because endpoints are rationals there is no rounding anywhere except in the
// explicit outward() denominator-capping helper.

#include "kitecert/rational.hpp"

#include <initializer_list>
#include <stdexcept>

namespace kitecert {

struct RatInterval {
  Rational lo{0};
  Rational hi{0};

  RatInterval() = default;
  explicit RatInterval(const Rational& point) : lo(point), hi(point) {}
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  }

  static RatInterval point(const Rational& v) { return RatInterval(v); }
  static RatInterval hull(const RatInterval& a, const RatInterval& b) {
    return RatInterval(rmin(a.lo, b.lo), rmax(a.hi, b.hi));
  }

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool strictly_positive() const { return lo > 0; }
  bool strictly_negative() const { return hi < 0; }
  bool nonpositive() const { return hi <= 0; }
  bool nonnegative() const { return lo >= 0; }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo + b.lo, a.hi + b.hi);
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo - b.hi, a.hi - b.lo);
  }
  friend RatInterval operator-(const RatInterval& a) { return RatInterval(-a.hi, -a.lo); }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return RatInterval(rmin(rmin(p1, p2), rmin(p3, p4)), rmax(rmax(p1, p2), rmax(p3, p4)));
  }
  friend RatInterval operator*(const RatInterval& a, const Rational& s) {
    return s >= 0 ? RatInterval(a.lo * s, a.hi * s) : RatInterval(a.hi * s, a.lo * s);
  }
  friend RatInterval operator*(const Rational& s, const RatInterval& a) { return a * s; }
  friend RatInterval operator+(const RatInterval& a, const Rational& s) {
    return RatInterval(a.lo + s, a.hi + s);
  }

  RatInterval& operator+=(const RatInterval& o) { return *this = *this + o; }

  // Division by an interval bounded away from zero.
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains(Rational(0)))
      throw std::domain_error("interval division by interval containing zero");
    RatInterval inv(Rational(1) / b.hi, Rational(1) / b.lo);
    return a * inv;
  }
  friend RatInterval operator/(const RatInterval& a, const Rational& s) {
    if (s == 0) throw std::domain_error("interval division by zero");
    return a * Rational(Rational(1) / s);
  }

  // Smallest enclosing interval whose endpoints are dyadic with denominator
  // <= 2^bits. Sound: always a superset.
  RatInterval outward(unsigned bits) const {
    return RatInterval(dyadic_floor(lo, bits), dyadic_ceil(hi, bits));
  }

  friend bool operator==(const RatInterval& a, const RatInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Enclosure of x^n.
inline RatInterval iv_pow(const RatInterval& x, unsigned n) {
  if (n == 0) return RatInterval(Rational(1));
  if (n % 2 == 1 || x.lo >= 0) {
    // monotone on the whole line (odd) or on [0,inf)
    return RatInterval(rpow(x.lo, n), rpow(x.hi, n));
  }
  if (x.hi <= 0) return RatInterval(rpow(x.hi, n), rpow(x.lo, n));
  return RatInterval(Rational(0), rmax(rpow(x.lo, n), rpow(x.hi, n)));
}

}  // namespace kitecert
