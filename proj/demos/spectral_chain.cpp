// Evaluate the closed-form spectral bounds at a sample shape and verify the
// exact inequality chain that separates the antisymmetric mode from the
// second symmetric mode inside the kite-reflection region.

#include <cstdio>

#include "kitecert/bounds.hpp"

using namespace kitecert;
using namespace kitecert::bounds;

static void show(const char* label, const RatInterval& iv) {
  std::printf("  %-28s [%.9f, %.9f]\n", label, to_double(iv.lo), to_double(iv.hi));
}

int main() {
  // Base-(0,0)-(1,0) triangle with apex (a, b) = (1/8, 3/8).
  const TriParam t{Rational(1, 8), Rational(3, 8)};
  const RegionFlags f = region_classify(t);
  std::printf("apex (1/8, 3/8): admissible=%d kite=%d acute=%d small_angle=%d\n",
              int(unitbase_admissible(t)), int(f.kite_sym), int(f.acute),
              int(f.small_angle));

  // Lower bound for the antisymmetric (odd) mode of the reflected kite and
  // upper bound for the second symmetric mode; both exact rational interval
  // enclosures of pi^2-multiples.
  const RatInterval lo = mu_a_lower(t);
  const RatInterval hi = kite_upper_ABC(t);
  show("mu_a lower bound", lo);
  show("mu_2 upper bound", hi);
  std::printf("  strict separation: %s\n", lo.lo > hi.hi ? "yes" : "NO");

  // Rayleigh upper bounds in the symmetric parametrization, i.e. for the
  // congruent triangle (-1,0)-(1,0)-(a',b') whose eigenvalues are 1/4 of
  // the unit-base ones.
  const TriParam s = symbase_canonical(to_symbase(t));
  show("u1 (linear trial fn)", u1_sym(s));
  show("u2 (uniform trial fn)", u2_sym(s.a));

  // Hooker-Protter bound against the rhombus fundamental tone.
  show("hooker_protter(h=3/16)", hooker_protter(Rational(3, 16)));

  return 0;
}
