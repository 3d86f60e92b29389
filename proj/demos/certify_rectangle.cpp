// Certify nonpositivity of bivariate polynomials on axis-aligned rectangles.
// Shows one claim that certifies after subdivision and one that is refused
// because the polynomial takes a positive value inside the rectangle.

#include <cstdio>

#include "kitecert/certify.hpp"
#include "kitecert/poly2.hpp"
#include "kitecert/rect.hpp"

using namespace kitecert;

static void report(const char* label, const CertifyResult& r) {
  std::printf("%-36s %-13s leaves=%-3d depth=%-2d folds=%-3d worst=%s\n",
              label, r.certified ? "CERTIFIED" : "not certified",
              r.stats.leaves, r.stats.max_depth, r.stats.folds,
              to_fraction_string(r.worst_bound).c_str());
}

int main() {
  const Poly2 x = Poly2::var_x();
  const Poly2 y = Poly2::var_y();

  // x^2 + y^2 - 4 on [-1,1]^2: maximum is -2, certified at the root.
  const Poly2 ball = x * x + y * y - Rational(4);
  const Rect square{Rational(-1), Rational(-1), Rational(2), Rational(2)};
  report("x^2 + y^2 - 4 on [-1,1]^2", certify_nonpos(ball, square));

  // x y (1 - x - y) - 1/20 on [0,1]^2: the true maximum is 1/27 - 1/20 < 0
  // at the interior point x = y = 1/3, so the fold bound needs a few
  // bisections before every box clears zero.
  const Poly2 interior = x * y * (-x - y + Rational(1)) - Rational(1, 20);
  const Rect unit{Rational(0), Rational(0), Rational(1), Rational(1)};
  report("x y (1-x-y) - 1/20 on [0,1]^2", certify_nonpos(interior, unit));

  // Constant shrunk below the true maximum 1/27: once subdivision isolates
  // the bump, an exact rational sample point evaluates positive and the
  // claim is refused without exhausting the depth budget.
  const Poly2 bad = x * y * (-x - y + Rational(1)) - Rational(1, 28);
  report("x y (1-x-y) - 1/28 on [0,1]^2", certify_nonpos(bad, unit));

  return 0;
}
