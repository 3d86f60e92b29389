// Finite-element oracle: meshing, spectra against closed forms, invariants
// (null mode, nesting monotonicity, mirror reduction, scaling), lower-bound
// margins for the rhombus, hot-spot location, and the simplicity gap.

#include <catch2/catch_amalgamated.hpp>

#include <kitecert/fem.hpp>

#include <cmath>
#include <set>
#include <stdexcept>

using namespace kitecert::fem;

namespace {

constexpr double kPi2 = 9.86960440108935861883;  // pi^2

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("seed meshes and refinement have the expected shape") {
  const Mesh tri = seed_mesh(DomainSpec::triangle_unit(0.25, 0.45));
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.elements.size() == 1);
  CHECK(tri.boundary_side.size() == 3);
  CHECK(tri.num_sides == 3);
  CHECK(tri.level == 0);

  // Counts follow the uniform refinement formulas for a single seed.
  Mesh m = tri;
  for (int level = 1; level <= 4; ++level) {
    m = refined(m);
    const int s = 1 << level;
    CHECK(m.level == level);
    CHECK(m.vertex_count() == (s + 1) * (s + 2) / 2);
    CHECK(m.elements.size() == static_cast<std::size_t>(s) * s);
    CHECK(m.boundary_side.size() == static_cast<std::size_t>(3) * s);
  }

  const Mesh kite0 = seed_mesh(DomainSpec::kite(0.25, 0.45));
  CHECK(kite0.vertex_count() == 4);
  CHECK(kite0.elements.size() == 2);
  CHECK(kite0.num_sides == 4);
  const Mesh kite1 = refined(kite0);
  CHECK(kite1.elements.size() == 8);
  CHECK(kite1.vertex_count() == 9);  // the shared diagonal midpoint is created once
  CHECK(kite1.boundary_side.size() == 8);

  // Vertices are nested: a coarse mesh is a prefix of its refinement.
  const Mesh fine = refined(kite1);
  REQUIRE(fine.vertex_count() > kite1.vertex_count());
  for (int i = 0; i < kite1.vertex_count(); ++i) {
    CHECK(fine.vertices[i].x == kite1.vertices[i].x);
    CHECK(fine.vertices[i].y == kite1.vertices[i].y);
  }

  // All elements positively oriented, for every domain constructor.
  for (const DomainSpec& spec :
       {DomainSpec::triangle_unit(0.3, 0.6), DomainSpec::triangle_sym(-0.4, 1.2),
        DomainSpec::kite(0.25, 0.45), DomainSpec::rhombus(0.375),
        DomainSpec::square()}) {
    const Mesh mm = mesh_domain(spec, 2);
    for (const auto& el : mm.elements) {
      const Point& p0 = mm.vertices[el[0]];
      const Point& p1 = mm.vertices[el[1]];
      const Point& p2 = mm.vertices[el[2]];
      const double det =
          (p1.x - p0.x) * (p2.y - p0.y) - (p1.y - p0.y) * (p2.x - p0.x);
      CHECK(det > 0);
    }
  }

  CHECK_THROWS_AS(seed_mesh(DomainSpec::triangle_unit(0.25, 0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(seed_mesh(DomainSpec::kite(0.25, -0.1)), std::invalid_argument);
  CHECK_THROWS_AS(seed_mesh(DomainSpec::rhombus(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(seed_mesh(DomainSpec::rhombus(0.6)), std::invalid_argument);

  // The extreme rhombus is exactly the unit square.
  const Mesh rh = seed_mesh(DomainSpec::rhombus(0.5));
  CHECK(rh.vertices[2].x == Catch::Approx(1.0).margin(1e-15));
  CHECK(rh.vertices[2].y == Catch::Approx(1.0).margin(1e-15));
}

TEST_CASE("Neumann solves carry the constant null mode and refine monotonically") {
  const DomainSpec sq = DomainSpec::square();
  const Mesh m4 = mesh_domain(sq, 4);
  const EigenSolution s4 = solve_eigen(m4, 3);

  CHECK(std::abs(s4.values[0]) < 1e-8 * s4.values[1]);
  const Eigen::VectorXd c = s4.vectors.col(0);
  CHECK(c.maxCoeff() - c.minCoeff() < 1e-6 * c.cwiseAbs().maxCoeff());

  // Mass normalization of every mode.
  Eigen::SparseMatrix<double> K, M;
  assemble(m4, K, M);
  for (int i = 0; i < 3; ++i) {
    const double norm = s4.vectors.col(i).dot(M * s4.vectors.col(i));
    CHECK(norm == Catch::Approx(1.0).epsilon(1e-8));
  }

  // Conforming P1 eigenvalues do not increase under nested refinement.
  const EigenSolution s5 = solve_eigen(mesh_domain(sq, 5), 3);
  CHECK(s5.values[1] <= s4.values[1] + 1e-10);
  CHECK(s5.values[2] <= s4.values[2] + 1e-10);
}

TEST_CASE("extrapolated spectra match closed forms") {
  // Unit square, Neumann: 0, pi^2 (twice), 2 pi^2.
  const OracleResult sq = solve_domain(DomainSpec::square(), 4);
  CHECK(rel_err(sq.modes[1].value, kPi2) < 1e-5);
  CHECK(rel_err(sq.modes[2].value, kPi2) < 1e-5);  // duplicate copy recovered
  CHECK(rel_err(sq.modes[3].value, 2 * kPi2) < 1e-5);
  CHECK(sq.modes[1].error > 0);
  CHECK(rel_err(sq.modes[1].value, kPi2) < 3.0 * sq.modes[1].error / kPi2);

  // Unit square, Dirichlet on all sides: 2 pi^2.
  const OracleResult sqd = solve_domain(
      DomainSpec::square(), 1, BoundaryCondition::dirichlet_everywhere());
  CHECK(rel_err(sqd.modes[0].value, 2 * kPi2) < 1e-5);

  // Equilateral triangle with side 2: mu_2 = mu_3 = 4 pi^2 / 9.
  const OracleResult eq =
      solve_domain(DomainSpec::triangle_sym(0.0, std::sqrt(3.0)), 3);
  CHECK(rel_err(eq.modes[1].value, 4.0 * kPi2 / 9.0) < 1e-5);
  CHECK(rel_err(eq.modes[2].value, 4.0 * kPi2 / 9.0) < 1e-5);

  // Right isosceles triangle (-1,0),(1,0),(0,1): mu_2 + mu_3 = 3 pi^2 / 2.
  const OracleResult ri = solve_domain(DomainSpec::triangle_sym(0.0, 1.0), 3);
  CHECK(rel_err(ri.modes[1].value + ri.modes[2].value, 1.5 * kPi2) < 1e-5);

  // Mixed problem on the right triangle (0,0),(1,0),(0,1/sqrt(3)) with the
  // base grounded: lambda_1 = 4 pi^2 / 3.
  const OracleResult mx =
      solve_domain(DomainSpec::triangle_unit(0.0, 1.0 / std::sqrt(3.0)), 1,
                   BoundaryCondition::dirichlet_on({0}));
  CHECK(rel_err(mx.modes[0].value, 4.0 * kPi2 / 3.0) < 1e-5);
}

TEST_CASE("kite spectrum splits into triangle Neumann and mixed parts") {
  const double a = 0.25, b = 0.45;
  const OracleResult kite = solve_domain(DomainSpec::kite(a, b), 4);
  const OracleResult tri = solve_domain(DomainSpec::triangle_unit(a, b), 3);
  const OracleResult mixed =
      solve_domain(DomainSpec::triangle_unit(a, b), 1,
                   BoundaryCondition::dirichlet_on({0}));

  // The symmetric half of the kite problem is exactly the triangle problem,
  // so the discrete eigenvalues agree to solver accuracy, not just O(h^2).
  CHECK(rel_err(kite.modes[1].value, tri.modes[1].value) < 1e-6);

  // Frozen references for this kite.
  CHECK(kite.modes[1].value == Catch::Approx(17.443264).margin(2e-3));
  CHECK(mixed.modes[0].value == Catch::Approx(23.220466).margin(2e-3));
  CHECK(kite.modes[1].value < mixed.modes[0].value);

  // The lowest antisymmetric kite mode is the mixed eigenvalue.
  const std::vector<Parity> par = classify_symmetry(kite.mesh_hi, kite.sol_hi);
  REQUIRE(par.size() == 4);
  CHECK(par[0] == Parity::Symmetric);
  CHECK(par[1] == Parity::Symmetric);
  bool found_anti = false;
  for (int i = 2; i < 4; ++i) {
    if (par[i] != Parity::Antisymmetric) continue;
    found_anti = true;
    CHECK(rel_err(kite.modes[i].value, mixed.modes[0].value) < 1e-6);
    break;
  }
  CHECK(found_anti);
}

TEST_CASE("eigenvalues scale like one over length squared") {
  // The symmetric-base triangle is the unit-base one magnified by 2.
  const double a = 0.3, b = 0.6;
  const EigenSolution unit =
      solve_eigen(mesh_domain(DomainSpec::triangle_unit(a, b), 4), 3);
  const EigenSolution sym = solve_eigen(
      mesh_domain(DomainSpec::triangle_sym(2 * a - 1, 2 * b), 4), 3);
  CHECK(rel_err(unit.values[1], 4.0 * sym.values[1]) < 1e-8);
  CHECK(rel_err(unit.values[2], 4.0 * sym.values[2]) < 1e-8);
}

TEST_CASE("rhombus fundamental tone dominates the closed-form lower bound") {
  const auto margin = [](double h) {
    const OracleResult r = solve_domain(
        DomainSpec::rhombus(h), 1, BoundaryCondition::dirichlet_everywhere());
    const double hp = kPi2 * (1.0 + 2.0 * h) / (4.0 * h * h);
    return r.modes[0].value - hp;
  };
  const double m14 = margin(0.25);
  CHECK(m14 > 3.0);
  CHECK(m14 < 3.4);
  const double m38 = margin(0.375);
  CHECK(m38 > 0.7);
  CHECK(m38 < 0.95);
  // The extreme rhombus is the unit square, where the bound is exact.
  CHECK(std::abs(margin(0.5)) < 1e-3);
}

TEST_CASE("hot spots of the second kite mode sit at the axis corners") {
  const OracleResult kite = solve_domain(DomainSpec::kite(0.25, 0.45), 4);
  const HotSpotReport rep = hot_spots(kite);
  CHECK(rep.max_class == ExtremumClass::Vertex);
  CHECK(rep.min_class == ExtremumClass::Vertex);
  const std::set<int> corners{rep.max_corner, rep.min_corner};
  CHECK(corners == std::set<int>{0, 2});

  // Stable across the last two levels.
  const HotSpotReport coarse =
      analyze_hot_spots(kite.mesh_lo, kite.sol_lo.vectors.col(1));
  CHECK(coarse.max_class == ExtremumClass::Vertex);
  CHECK(coarse.min_class == ExtremumClass::Vertex);
  CHECK(std::set<int>{coarse.max_corner, coarse.min_corner} == corners);

  // Monotone boundary trace: no interior critical point on any side.
  for (int side = 0; side < 4; ++side)
    CHECK(rep.side_sign_changes[side] == 0);

  // The analysis refuses a degenerate second eigenvalue.
  const OracleResult eq =
      solve_domain(DomainSpec::triangle_sym(0.0, std::sqrt(3.0)), 3, {}, 4, 5);
  CHECK_THROWS_AS(hot_spots(eq), std::runtime_error);
}

TEST_CASE("simplicity gap is resolved away from the equilateral point") {
  const GapResult away = simplicity_gap(DomainSpec::triangle_sym(0.2, 1.3));
  CHECK(away.gap > 0);
  CHECK(away.gap > 5.0 * away.error);
  CHECK(away.mu3 - away.mu2 == Catch::Approx(away.gap).margin(10 * away.error));

  const GapResult at = simplicity_gap(DomainSpec::triangle_sym(0.0, std::sqrt(3.0)));
  CHECK(std::abs(at.gap) < 1e-3);
}
