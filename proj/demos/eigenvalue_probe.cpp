// Exercise the finite-element oracle: extrapolated eigenvalues against
// closed forms, hot-spot location for the second Neumann mode, and the
// spectral gap that guards simplicity.

#include <cmath>
#include <cstdio>

#include "kitecert/fem.hpp"

using namespace kitecert::fem;

static const char* class_name(ExtremumClass c) {
  switch (c) {
    case ExtremumClass::Vertex: return "vertex";
    case ExtremumClass::EdgeInterior: return "edge";
    default: return "interior";
  }
}

int main() {
  const double pi2 = M_PI * M_PI;

  // Unit square, second Neumann eigenvalue: exactly pi^2.
  {
    const OracleResult r = solve_domain(DomainSpec::square(), 2);
    const ModeEstimate& m = r.modes[1];
    std::printf("square     mu_2 = %.8f  (pi^2 = %.8f, err est %.1e)\n",
                m.value, pi2, m.error);
  }

  // Acute scalene triangle (0,0)-(1,0)-(0.3,0.6): where does mode 2 peak?
  {
    const OracleResult r = solve_domain(DomainSpec::triangle_unit(0.3, 0.6), 3);
    const HotSpotReport h = hot_spots(r);
    std::printf("triangle   mu_2 = %.6f   max at %s %d, min at %s %d\n",
                r.modes[1].value, class_name(h.max_class), h.max_corner,
                class_name(h.min_class), h.min_corner);
  }

  // Spectral gap mu_3 - mu_2: comfortably positive away from the
  // equilateral shape, zero (to resolution) at it.
  {
    const GapResult scalene = simplicity_gap(DomainSpec::triangle_sym(0.2, 1.1));
    const GapResult equi = simplicity_gap(DomainSpec::triangle_sym(0.0, std::sqrt(3.0)));
    std::printf("gap        scalene %.5f +/- %.1e   equilateral %.1e +/- %.1e\n",
                scalene.gap, scalene.error, equi.gap, equi.error);
  }

  return 0;
}
