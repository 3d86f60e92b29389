#pragma once

// Floating-point P1 finite-element oracle for Neumann / mixed eigenproblems
// on triangles, kites, rhombi and squares.  This module cross-checks the
// certified bounds numerically; it is never part of a certificate.
//
// Pipeline: seed mesh (1 element for a triangle, 2 for quadrilaterals) ->
// nested uniform 4-way midpoint refinement -> exact per-element P1
// stiffness/mass -> generalized symmetric eigensolve (dense for small
// problems, shift-invert Lanczos with full reorthogonalization otherwise) ->
// Richardson extrapolation over two consecutive levels.  P1 eigenvalues on
// nested meshes converge from above at order h^2, so the extrapolated value
// is (4 mu_fine - mu_coarse) / 3 with error estimate |mu_fine - mu_coarse|/3.

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kitecert::fem {

struct Point {
  double x = 0, y = 0;
};

// Conforming triangle mesh with boundary edges labeled by the side of the
// parent polygon they subdivide.
struct Mesh {
  std::vector<Point> vertices;
  std::vector<std::array<int, 3>> elements;          // positively oriented
  std::map<std::pair<int, int>, int> boundary_side;  // sorted vertex pair -> side id
  std::vector<Point> corners;                        // parent polygon vertices
  int level = 0;
  int num_sides = 0;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
};

// ---------------------------------------------------------------------------
// Domains.

enum class DomainKind { TriangleUnit, TriangleSym, Kite, RhombusPaper, Square };

struct DomainSpec {
  DomainKind kind = DomainKind::TriangleUnit;
  double a = 0, b = 0;  // apex parameters for triangles and kites
  double h = 0;         // rhombus half-height

  static DomainSpec triangle_unit(double a, double b) {
    return {DomainKind::TriangleUnit, a, b, 0};
  }
  static DomainSpec triangle_sym(double a, double b) {
    return {DomainKind::TriangleSym, a, b, 0};
  }
  static DomainSpec kite(double a, double b) {
    return {DomainKind::Kite, a, b, 0};
  }
  static DomainSpec rhombus(double h) {
    return {DomainKind::RhombusPaper, 0, 0, h};
  }
  static DomainSpec square() { return {DomainKind::Square, 0, 0, 0}; }
};

namespace detail {

inline void add_side(Mesh& m, int v0, int v1, int side) {
  m.boundary_side[{std::min(v0, v1), std::max(v0, v1)}] = side;
}

}  // namespace detail

// Minimal seed mesh for a domain, with polygon sides labeled 0..n-1 in the
// order of the vertex list.  Side 0 of a triangle or kite is the base on the
// x-axis (the Dirichlet side of the mixed problems).
inline Mesh seed_mesh(const DomainSpec& spec) {
  Mesh m;
  m.level = 0;
  switch (spec.kind) {
    case DomainKind::TriangleUnit:
    case DomainKind::TriangleSym: {
      if (!(spec.b > 0)) throw std::invalid_argument("triangle requires b > 0");
      const double x0 = spec.kind == DomainKind::TriangleUnit ? 0.0 : -1.0;
      m.vertices = {{x0, 0}, {1, 0}, {spec.a, spec.b}};
      m.elements = {{0, 1, 2}};
      m.num_sides = 3;
      detail::add_side(m, 0, 1, 0);
      detail::add_side(m, 1, 2, 1);
      detail::add_side(m, 2, 0, 2);
      break;
    }
    case DomainKind::Kite: {
      if (!(spec.b > 0)) throw std::invalid_argument("kite requires b > 0");
      // Mirror image of the triangle across the x-axis; the segment from
      // (0,0) to (1,0) is an interior diagonal.
      m.vertices = {{0, 0}, {spec.a, -spec.b}, {1, 0}, {spec.a, spec.b}};
      m.elements = {{0, 1, 2}, {0, 2, 3}};
      m.num_sides = 4;
      detail::add_side(m, 0, 1, 0);
      detail::add_side(m, 1, 2, 1);
      detail::add_side(m, 2, 3, 2);
      detail::add_side(m, 3, 0, 3);
      break;
    }
    case DomainKind::RhombusPaper: {
      // Rhombus with side 1 whose lower-left corner sits at the origin and
      // whose horizontal sides are at heights 0 and 2h; the slant offset c
      // satisfies c - c^2 = h^2.
      if (!(spec.h > 0) || spec.h > 0.5)
        throw std::invalid_argument("rhombus requires 0 < h <= 1/2");
      const double c = (1.0 - std::sqrt(1.0 - 4.0 * spec.h * spec.h)) / 2.0;
      const double t = 2.0 * spec.h;
      m.vertices = {{0, 0}, {1, 0}, {2 * c, t}, {2 * c - 1, t}};
      m.elements = {{0, 1, 2}, {0, 2, 3}};
      m.num_sides = 4;
      detail::add_side(m, 0, 1, 0);
      detail::add_side(m, 1, 2, 1);
      detail::add_side(m, 2, 3, 2);
      detail::add_side(m, 3, 0, 3);
      break;
    }
    case DomainKind::Square: {
      m.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
      m.elements = {{0, 1, 2}, {0, 2, 3}};
      m.num_sides = 4;
      detail::add_side(m, 0, 1, 0);
      detail::add_side(m, 1, 2, 1);
      detail::add_side(m, 2, 3, 2);
      detail::add_side(m, 3, 0, 3);
      break;
    }
  }
  m.corners = m.vertices;
  return m;
}

// One uniform 4-way refinement step: every edge gains its midpoint, every
// element becomes four.  Vertices of the parent mesh keep their indices, so
// the vertex sets are nested across levels.
inline Mesh refined(const Mesh& in) {
  Mesh out;
  out.vertices = in.vertices;
  out.level = in.level + 1;
  out.num_sides = in.num_sides;
  out.corners = in.corners;
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int i, int j) {
    const std::pair<int, int> key{std::min(i, j), std::max(i, j)};
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    const Point& p = in.vertices[i];
    const Point& q = in.vertices[j];
    out.vertices.push_back({(p.x + q.x) / 2.0, (p.y + q.y) / 2.0});
    const int idx = out.vertex_count() - 1;
    midpoint.emplace(key, idx);
    return idx;
  };
  out.elements.reserve(in.elements.size() * 4);
  for (const auto& [a, b, c] : in.elements) {
    const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
    out.elements.push_back({a, ab, ca});
    out.elements.push_back({ab, b, bc});
    out.elements.push_back({ca, bc, c});
    out.elements.push_back({ab, bc, ca});
  }
  for (const auto& [edge, side] : in.boundary_side) {
    const int m = midpoint.at(edge);
    detail::add_side(out, edge.first, m, side);
    detail::add_side(out, m, edge.second, side);
  }
  return out;
}

inline Mesh mesh_domain(const DomainSpec& spec, int level) {
  Mesh m = seed_mesh(spec);
  for (int i = 0; i < level; ++i) m = refined(m);
  return m;
}

// ---------------------------------------------------------------------------
// Assembly.

// Exact P1 element matrices: Ke = area * g g^T with g the barycentric
// gradients, Me = area/12 * (ones + eye).
inline void assemble(const Mesh& mesh, Eigen::SparseMatrix<double>& K,
                     Eigen::SparseMatrix<double>& M) {
  const int n = mesh.vertex_count();
  std::vector<Eigen::Triplet<double>> tk, tm;
  tk.reserve(mesh.elements.size() * 9);
  tm.reserve(mesh.elements.size() * 9);
  for (const auto& el : mesh.elements) {
    const Point& p0 = mesh.vertices[el[0]];
    const Point& p1 = mesh.vertices[el[1]];
    const Point& p2 = mesh.vertices[el[2]];
    const double det =
        (p1.x - p0.x) * (p2.y - p0.y) - (p1.y - p0.y) * (p2.x - p0.x);
    if (det == 0) throw std::runtime_error("degenerate mesh element");
    const double area = std::abs(det) / 2.0;
    const double g[3][2] = {
        {(p1.y - p2.y) / det, (p2.x - p1.x) / det},
        {(p2.y - p0.y) / det, (p0.x - p2.x) / det},
        {(p0.y - p1.y) / det, (p1.x - p0.x) / det},
    };
    for (int r = 0; r < 3; ++r) {
      for (int s = 0; s < 3; ++s) {
        const double ke = area * (g[r][0] * g[s][0] + g[r][1] * g[s][1]);
        const double me = area / 12.0 * (r == s ? 2.0 : 1.0);
        tk.emplace_back(el[r], el[s], ke);
        tm.emplace_back(el[r], el[s], me);
      }
    }
  }
  K.resize(n, n);
  M.resize(n, n);
  K.setFromTriplets(tk.begin(), tk.end());
  M.setFromTriplets(tm.begin(), tm.end());
}

// ---------------------------------------------------------------------------
// Boundary conditions.

struct BoundaryCondition {
  std::vector<int> dirichlet_sides;  // polygon side ids
  bool all_sides = false;

  static BoundaryCondition neumann() { return {}; }
  static BoundaryCondition dirichlet_on(std::vector<int> sides) {
    return {std::move(sides), false};
  }
  static BoundaryCondition dirichlet_everywhere() { return {{}, true}; }
};

// Vertices pinned to zero by the boundary condition.
inline std::vector<char> dirichlet_mask(const Mesh& mesh,
                                        const BoundaryCondition& bc) {
  std::vector<char> mask(mesh.vertex_count(), 0);
  for (const auto& [edge, side] : mesh.boundary_side) {
    const bool hit =
        bc.all_sides ||
        std::find(bc.dirichlet_sides.begin(), bc.dirichlet_sides.end(), side) !=
            bc.dirichlet_sides.end();
    if (hit) {
      mask[edge.first] = 1;
      mask[edge.second] = 1;
    }
  }
  return mask;
}

// ---------------------------------------------------------------------------
// Generalized symmetric eigensolver.

struct EigenSolution {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // full-length columns, zero at Dirichlet nodes,
                            // normalized to v^T M v = 1
};

namespace detail {

// Smallest eigenpairs of K u = mu M u restricted to the free nodes, via
// Lanczos on the shift-inverted operator (K - sigma M)^{-1} M, which is
// self-adjoint in the M inner product.  sigma = -1/100 keeps the operator
// positive definite despite the Neumann null mode.
inline void lanczos_smallest(const Eigen::SparseMatrix<double>& K,
                             const Eigen::SparseMatrix<double>& M, int k,
                             Eigen::VectorXd& values, Eigen::MatrixXd& vectors) {
  const int n = static_cast<int>(K.rows());
  const double sigma = -0.01;
  Eigen::SparseMatrix<double> A = K - sigma * M;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(A);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver factorization failed");

  // Generous Krylov size: multiple eigenvalues (square, equilateral) are
  // recovered through rounding-noise growth, which needs extra iterations.
  const int m = std::min(n - 1, std::max(4 * k + 60, 90));
  Eigen::MatrixXd Q(n, m + 1);
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(m);

  std::mt19937 rng(20260818u + static_cast<unsigned>(n));
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = uni(rng);
  v /= std::sqrt(v.dot(M * v));
  Q.col(0) = v;

  int steps = m;
  for (int j = 0; j < m; ++j) {
    Eigen::VectorXd w = solver.solve(M * Q.col(j));
    alpha[j] = w.dot(M * Q.col(j));
    w -= alpha[j] * Q.col(j);
    if (j > 0) w -= beta[j - 1] * Q.col(j - 1);
    // Full reorthogonalization (twice) in the M inner product.
    for (int pass = 0; pass < 2; ++pass) {
      const Eigen::VectorXd proj =
          Q.leftCols(j + 1).transpose() * (M * w);
      w -= Q.leftCols(j + 1) * proj;
    }
    const double b = std::sqrt(std::max(0.0, w.dot(M * w)));
    beta[j] = b;
    if (b < 1e-13) {
      steps = j + 1;  // invariant subspace found
      break;
    }
    Q.col(j + 1) = w / b;
  }

  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(steps, steps);
  for (int j = 0; j < steps; ++j) {
    T(j, j) = alpha[j];
    if (j + 1 < steps) T(j, j + 1) = T(j + 1, j) = beta[j];
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigensolver tridiagonal solve failed");

  // Largest nu of the inverted operator are the smallest mu = sigma + 1/nu.
  if (steps < k) throw std::runtime_error("Krylov space too small");
  values.resize(k);
  vectors.resize(n, k);
  for (int i = 0; i < k; ++i) {
    const int col = steps - 1 - i;  // eigenvalues ascend in `es`
    const double nu = es.eigenvalues()[col];
    if (nu <= 0) throw std::runtime_error("eigensolver did not converge");
    values[i] = sigma + 1.0 / nu;
    vectors.col(i) = Q.leftCols(steps) * es.eigenvectors().col(col);
  }
}

}  // namespace detail

// First k eigenpairs of the Neumann / mixed problem on the mesh.
inline EigenSolution solve_eigen(const Mesh& mesh, int k,
                                 const BoundaryCondition& bc = {}) {
  if (k < 1) throw std::invalid_argument("need k >= 1 eigenpairs");
  Eigen::SparseMatrix<double> K, M;
  assemble(mesh, K, M);

  const std::vector<char> mask = dirichlet_mask(mesh, bc);
  std::vector<int> free_nodes;
  free_nodes.reserve(mesh.vertex_count());
  for (int i = 0; i < mesh.vertex_count(); ++i)
    if (!mask[i]) free_nodes.push_back(i);
  const int nf = static_cast<int>(free_nodes.size());
  if (nf < k) throw std::invalid_argument("mesh too coarse for requested modes");

  Eigen::SparseMatrix<double> Kf, Mf;
  if (nf == mesh.vertex_count()) {
    Kf = K;
    Mf = M;
  } else {
    std::vector<int> where(mesh.vertex_count(), -1);
    for (int i = 0; i < nf; ++i) where[free_nodes[i]] = i;
    std::vector<Eigen::Triplet<double>> tk, tm;
    for (int col = 0; col < K.outerSize(); ++col) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(K, col); it; ++it)
        if (where[it.row()] >= 0 && where[it.col()] >= 0)
          tk.emplace_back(where[it.row()], where[it.col()], it.value());
      for (Eigen::SparseMatrix<double>::InnerIterator it(M, col); it; ++it)
        if (where[it.row()] >= 0 && where[it.col()] >= 0)
          tm.emplace_back(where[it.row()], where[it.col()], it.value());
    }
    Kf.resize(nf, nf);
    Mf.resize(nf, nf);
    Kf.setFromTriplets(tk.begin(), tk.end());
    Mf.setFromTriplets(tm.begin(), tm.end());
  }

  Eigen::VectorXd vals;
  Eigen::MatrixXd vecs;
  if (nf <= 260) {
    // Dense path for tiny problems (and Krylov-degenerate cases).
    const Eigen::MatrixXd Kd(Kf), Md(Mf);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(Kd, Md);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("dense eigensolver failed");
    vals = es.eigenvalues().head(k);
    vecs = es.eigenvectors().leftCols(k);
  } else {
    detail::lanczos_smallest(Kf, Mf, k, vals, vecs);
  }

  EigenSolution out;
  out.values = vals;
  out.vectors = Eigen::MatrixXd::Zero(mesh.vertex_count(), k);
  for (int i = 0; i < nf; ++i) out.vectors.row(free_nodes[i]) = vecs.row(i);
  // Canonical sign: the entry of largest magnitude is positive.
  for (int c = 0; c < k; ++c) {
    int imax = 0;
    out.vectors.col(c).cwiseAbs().maxCoeff(&imax);
    if (out.vectors(imax, c) < 0) out.vectors.col(c) *= -1.0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Two-level driver with Richardson extrapolation.

struct ModeEstimate {
  double value = 0;   // extrapolated
  double error = 0;   // |fine - coarse| / 3
  double coarse = 0;  // value at the lower level
  double fine = 0;    // value at the higher level
};

struct OracleResult {
  std::vector<ModeEstimate> modes;
  Mesh mesh_lo, mesh_hi;
  EigenSolution sol_lo, sol_hi;
};

inline OracleResult solve_domain(const DomainSpec& spec, int k,
                                 const BoundaryCondition& bc = {},
                                 int level_lo = 5, int level_hi = 6) {
  if (level_lo >= level_hi)
    throw std::invalid_argument("need two increasing refinement levels");
  OracleResult out;
  out.mesh_lo = mesh_domain(spec, level_lo);
  for (int l = level_lo; l < level_hi; ++l)
    out.mesh_hi = refined(l == level_lo ? out.mesh_lo : out.mesh_hi);
  out.sol_lo = solve_eigen(out.mesh_lo, k, bc);
  out.sol_hi = solve_eigen(out.mesh_hi, k, bc);
  out.modes.resize(k);
  for (int i = 0; i < k; ++i) {
    const double lo = out.sol_lo.values[i];
    const double hi = out.sol_hi.values[i];
    out.modes[i] = {(4.0 * hi - lo) / 3.0, std::abs(hi - lo) / 3.0, lo, hi};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Eigenfunction analysis.

enum class Parity { Symmetric, Antisymmetric, Mixed };

// Per-mode parity of eigenfunctions on a mirror-symmetric mesh (kite or
// rhombus reflected across y -> -y is not applicable; the kite is symmetric
// across the x-axis).  Degenerate pairs typically come out Mixed.
inline std::vector<Parity> classify_symmetry(const Mesh& mesh,
                                             const EigenSolution& sol,
                                             double tol = 1e-6) {
  std::map<std::pair<std::int64_t, std::int64_t>, int> pos;
  const auto key = [](const Point& p) {
    return std::pair<std::int64_t, std::int64_t>{
        static_cast<std::int64_t>(std::llround(p.x * 1e12)),
        static_cast<std::int64_t>(std::llround(p.y * 1e12))};
  };
  for (int i = 0; i < mesh.vertex_count(); ++i)
    pos.emplace(key(mesh.vertices[i]), i);

  std::vector<int> mirror(mesh.vertex_count(), -1);
  for (int i = 0; i < mesh.vertex_count(); ++i) {
    const Point p = mesh.vertices[i];
    const auto it = pos.find(key({p.x, -p.y}));
    if (it == pos.end())
      throw std::invalid_argument("mesh is not mirror-symmetric");
    mirror[i] = it->second;
  }

  std::vector<Parity> out;
  for (int c = 0; c < sol.vectors.cols(); ++c) {
    double sym_err = 0, asym_err = 0, scale = 0;
    for (int i = 0; i < mesh.vertex_count(); ++i) {
      const double u = sol.vectors(i, c);
      const double v = sol.vectors(mirror[i], c);
      sym_err = std::max(sym_err, std::abs(u - v));
      asym_err = std::max(asym_err, std::abs(u + v));
      scale = std::max(scale, std::abs(u));
    }
    if (sym_err <= tol * scale)
      out.push_back(Parity::Symmetric);
    else if (asym_err <= tol * scale)
      out.push_back(Parity::Antisymmetric);
    else
      out.push_back(Parity::Mixed);
  }
  return out;
}

enum class ExtremumClass { Vertex, EdgeInterior, Interior };

struct HotSpotReport {
  ExtremumClass max_class = ExtremumClass::Interior;
  ExtremumClass min_class = ExtremumClass::Interior;
  int max_corner = -1;  // polygon corner index when max_class == Vertex
  int min_corner = -1;
  std::vector<int> side_sign_changes;  // tangential-derivative flips per side
};

namespace detail {

inline double dist(const Point& p, const Point& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

// Longest edge of the seed polygon divided by 2^level: the mesh pitch used
// for the "within one cell of a corner" classification rule.
inline double mesh_pitch(const Mesh& mesh) {
  double longest = 0;
  const int n = static_cast<int>(mesh.corners.size());
  for (int i = 0; i < n; ++i)
    longest = std::max(longest, dist(mesh.corners[i], mesh.corners[(i + 1) % n]));
  return longest / static_cast<double>(1 << mesh.level);
}

inline std::pair<ExtremumClass, int> classify_node(const Mesh& mesh, int node,
                                                   const std::vector<char>& on_boundary) {
  const double cell = 1.25 * mesh_pitch(mesh);
  for (int c = 0; c < static_cast<int>(mesh.corners.size()); ++c)
    if (dist(mesh.vertices[node], mesh.corners[c]) <= cell)
      return {ExtremumClass::Vertex, c};
  if (on_boundary[node]) return {ExtremumClass::EdgeInterior, -1};
  return {ExtremumClass::Interior, -1};
}

}  // namespace detail

// Locates the extrema of one eigenfunction and counts tangential-derivative
// sign changes along each polygon side.  The caller is responsible for
// checking that the mode is simple; see hot_spots() below.
inline HotSpotReport analyze_hot_spots(const Mesh& mesh,
                                       const Eigen::VectorXd& mode) {
  if (mode.size() != mesh.vertex_count())
    throw std::invalid_argument("mode length does not match the mesh");

  std::vector<char> on_boundary(mesh.vertex_count(), 0);
  for (const auto& [edge, side] : mesh.boundary_side) {
    on_boundary[edge.first] = 1;
    on_boundary[edge.second] = 1;
  }

  HotSpotReport rep;
  int imax = 0, imin = 0;
  mode.maxCoeff(&imax);
  mode.minCoeff(&imin);
  std::tie(rep.max_class, rep.max_corner) =
      detail::classify_node(mesh, imax, on_boundary);
  std::tie(rep.min_class, rep.min_corner) =
      detail::classify_node(mesh, imin, on_boundary);

  // Boundary trace per side, ordered along the side, with sign changes of
  // successive differences (discrete tangential derivative).
  const double scale = mode.cwiseAbs().maxCoeff();
  rep.side_sign_changes.assign(mesh.num_sides, 0);
  for (int side = 0; side < mesh.num_sides; ++side) {
    std::vector<int> nodes;
    for (const auto& [edge, s] : mesh.boundary_side) {
      if (s != side) continue;
      nodes.push_back(edge.first);
      nodes.push_back(edge.second);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (nodes.size() < 3) continue;
    // Order along the dominant direction of the side.
    const Point p0 = mesh.vertices[nodes.front()];
    Point dir{0, 0};
    for (int n : nodes) {
      dir.x = std::max(dir.x, std::abs(mesh.vertices[n].x - p0.x));
      dir.y = std::max(dir.y, std::abs(mesh.vertices[n].y - p0.y));
    }
    const bool by_x = dir.x >= dir.y;
    std::sort(nodes.begin(), nodes.end(), [&](int i, int j) {
      const Point& a = mesh.vertices[i];
      const Point& b = mesh.vertices[j];
      return by_x ? a.x < b.x : a.y < b.y;
    });
    int prev_sign = 0, flips = 0;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      const double d = mode[nodes[i]] - mode[nodes[i - 1]];
      if (std::abs(d) <= 1e-9 * scale) continue;
      const int sign = d > 0 ? 1 : -1;
      if (prev_sign != 0 && sign != prev_sign) ++flips;
      prev_sign = sign;
    }
    rep.side_sign_changes[side] = flips;
  }
  return rep;
}

// Hot-spot analysis of the second Neumann mode with a simplicity guard:
// refuses when mu_2 and mu_3 are numerically degenerate (the eigenfunction
// is not unique there).
inline HotSpotReport hot_spots(const OracleResult& r) {
  if (r.modes.size() < 3)
    throw std::invalid_argument("need at least three modes");
  const double gap = r.modes[2].value - r.modes[1].value;
  const double bars = r.modes[1].error + r.modes[2].error;
  if (gap <= std::max(10.0 * bars, 1e-6 * std::abs(r.modes[1].value)))
    throw std::runtime_error("second eigenvalue numerically degenerate");
  return analyze_hot_spots(r.mesh_hi, r.sol_hi.vectors.col(1));
}

// ---------------------------------------------------------------------------
// Simplicity gap.

struct GapResult {
  double mu2 = 0, mu3 = 0, gap = 0, error = 0;
};

// Extrapolated mu_3 - mu_2 of the triangle with per-level consistency as the
// error bar.
inline GapResult simplicity_gap(const DomainSpec& tri, int level_lo = 5,
                                int level_hi = 6) {
  const OracleResult r = solve_domain(tri, 4, {}, level_lo, level_hi);
  const double g_lo = r.sol_lo.values[2] - r.sol_lo.values[1];
  const double g_hi = r.sol_hi.values[2] - r.sol_hi.values[1];
  GapResult out;
  out.mu2 = r.modes[1].value;
  out.mu3 = r.modes[2].value;
  out.gap = (4.0 * g_hi - g_lo) / 3.0;
  out.error = std::abs(g_hi - g_lo) / 3.0;
  return out;
}

}  // namespace kitecert::fem
