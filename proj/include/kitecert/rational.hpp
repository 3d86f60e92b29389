#pragma once
// Exact rational arithmetic (arbitrary precision) plus the small set of
// utilities the rest of the library needs: parsing/printing in "p/q" form,
// integer square roots, and dyadic rounding used to cap denominator growth.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kitecert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

inline Rational rabs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

// x^n for n >= 0.
inline Rational rpow(const Rational& x, unsigned n) {
  Rational acc(1), base(x);
  while (n) {
    if (n & 1u) acc *= base;
    base *= base;
    n >>= 1u;
  }
  return acc;
}

// Canonical exact form used in all file formats: always "num/den", denominator
// positive (cpp_rational already keeps it canonical and positive).
inline std::string to_fraction_string(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

// Human-facing decimal approximation (never used in certificates).
inline std::string to_decimal_string(const Rational& r, int digits = 12) {
  using boost::multiprecision::cpp_dec_float_50;
  cpp_dec_float_50 v = cpp_dec_float_50(num(r)) / cpp_dec_float_50(den(r));
  std::string s = v.str(digits);
  return s;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses "p", "-p", "p/q" (q > 0 after normalization). No decimals, no
// whitespace. Returns std::nullopt on malformed input.
inline std::optional<Rational> try_parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t slash = s.find('/');
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(s)) return std::nullopt;
      return Rational(Integer(std::string(s)));
    }
    std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds)) return std::nullopt;
    Integer n{std::string(ns)}, d{std::string(ds)};
    if (d == 0) return std::nullopt;
    return Rational(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline Rational parse_rational(std::string_view s) {
  auto r = try_parse_rational(s);
  if (!r) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  return *r;
}

// floor(x) as an Integer.
inline Integer rfloor(const Rational& x) {
  Integer q = num(x) / den(x);
  if (x < 0 && q * den(x) != num(x)) --q;
  return q;
}

// Largest dyadic k/2^bits <= x.
inline Rational dyadic_floor(const Rational& x, unsigned bits) {
  Integer scale = Integer(1) << bits;
  return Rational(rfloor(x * scale), scale);
}

// Smallest dyadic k/2^bits >= x.
inline Rational dyadic_ceil(const Rational& x, unsigned bits) {
  return -dyadic_floor(-x, bits);
}

// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

}  // namespace kitecert
