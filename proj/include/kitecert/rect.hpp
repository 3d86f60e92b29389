#pragma once
// Axis-aligned rectangles with exact rational corner and sides. dy == 0 marks
// a one-dimensional domain (a segment [x0, x0+dx] for univariate claims).

#include "kitecert/rational.hpp"

#include <stdexcept>

namespace kitecert {

struct Rect {
  Rational x0{0}, y0{0}, dx{0}, dy{0};

  bool one_dimensional() const { return dy == 0; }

  void validate() const {
    if (dx <= 0) throw std::invalid_argument("rectangle needs dx > 0");
    if (dy < 0) throw std::invalid_argument("rectangle needs dy >= 0");
  }

  Rational x1() const { return x0 + dx; }
  Rational y1() const { return y0 + dy; }

  friend bool operator==(const Rect& a, const Rect& b) {
    return a.x0 == b.x0 && a.y0 == b.y0 && a.dx == b.dx && a.dy == b.dy;
  }

  // Halves along the given axis (0 = x, 1 = y) at the midpoint; returns
  // {low, high}.
  std::pair<Rect, Rect> split(int axis) const {
    if (axis == 0) {
      const Rational h = dx / 2;
      return {Rect{x0, y0, h, dy}, Rect{x0 + h, y0, h, dy}};
    }
    const Rational h = dy / 2;
    return {Rect{x0, y0, dx, h}, Rect{x0, y0 + h, dx, h}};
  }
};

}  // namespace kitecert
