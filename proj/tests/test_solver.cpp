#include <cmath>
#include <numbers>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "butkit/butkit.hpp"
#include "cli_runner.hpp"
#include "generators.hpp"

using namespace butkit;

namespace {

/// g(x) = (x1, x2) on R^3.
PolyFunc first_two() {
  PolyFunc g;
  g.input_dim = 3;
  g.coordinates = {{{1.0, {1, 0, 0}}}, {{1.0, {0, 1, 0}}}};
  return g;
}

ManifoldSpec sphere2() {
  ManifoldSpec spec;
  spec.kind = ManifoldSpec::Kind::Sphere;
  spec.dim = 2;
  spec.reproject = true;
  return spec;
}

void require_report_invariants(const SolveReport& report, double tol) {
  REQUIRE(report.weights.minCoeff() >= 0.0);
  REQUIRE(std::abs(report.weights.sum() - 1.0) <= 1e-9);
  REQUIRE(report.combination_residual <= 1e-8);
  REQUIRE((report.witnesses * report.weights).norm() == report.combination_residual);
  for (Eigen::Index k = 0; k < report.membership_residuals.size(); ++k)
    REQUIRE(report.membership_residuals[k] <= tol);
  REQUIRE((report.simplex_vertices * report.weights - report.x0).norm() <= 1e-9 * (1.0 + report.x0.norm()));
  for (Eigen::Index k = 0; k < report.simplex_vertices.cols(); ++k)
    REQUIRE((report.simplex_vertices.col(k) - report.x0).norm() <= report.locality_radius + 1e-12);
  REQUIRE(static_cast<int>(report.trace.size()) == report.rounds);
}

}  // namespace

TEST_CASE("zero covering for the coordinate projection on the sphere") {
  SolveOptions opts;
  opts.mesh_target = 0.3;
  const SolveReport report = solve_theorem(sphere2(), SingletonOf{first_two()}, opts);

  REQUIRE(report.complete);
  REQUIRE(report.locality_radius <= 0.3);
  REQUIRE(report.x0.head(2).norm() <= 1e-12);
  REQUIRE(report.x0[2] == -1.0);  // lex-smallest zero in round 0, tracked thereafter
  require_report_invariants(report, opts.tol);

  SECTION("antipode vertices are the negated simplex vertices") {
    REQUIRE(report.antipode_vertices == (-report.simplex_vertices).eval());
  }
  SECTION("the trace subdivides once per round and contracts") {
    for (std::size_t i = 0; i < report.trace.size(); ++i) {
      REQUIRE(report.trace[i].round == static_cast<int>(i));
      REQUIRE(report.trace[i].subdivisions == static_cast<int>(i));
      REQUIRE(report.trace[i].zero_count >= 2);
      if (i > 0) REQUIRE(report.trace[i].mesh_norm < report.trace[i - 1].mesh_norm);
    }
  }
}

TEST_CASE("zero covering with ball values") {
  SolveOptions opts;
  opts.mesh_target = 0.3;
  const SolveReport report = solve_theorem(sphere2(), BallOf{first_two(), 0.3}, opts);
  REQUIRE(report.complete);
  REQUIRE(std::abs(std::abs(report.x0[2]) - 1.0) <= 1e-12);
  require_report_invariants(report, opts.tol);
}

TEST_CASE("zero covering on the circle") {
  ManifoldSpec spec;
  spec.kind = ManifoldSpec::Kind::Circle;
  spec.segments = 8;
  spec.dim = 1;

  PolyFunc g;
  g.input_dim = 2;
  g.coordinates = {{{1.0, {1, 0}}}};

  SolveOptions opts;
  opts.mesh_target = 0.05;
  const SolveReport report = solve_theorem(spec, SingletonOf{g}, opts);
  REQUIRE(report.complete);
  REQUIRE(std::abs(report.x0[0]) <= 1e-12);
  REQUIRE(std::abs(std::abs(report.x0[1]) - 1.0) <= 1e-9);
  require_report_invariants(report, opts.tol);
}

TEST_CASE("solves are deterministic") {
  SolveOptions opts;
  opts.mesh_target = 0.4;
  const SolveReport a = solve_theorem(sphere2(), BallOf{first_two(), 0.2}, opts);
  const SolveReport b = solve_theorem(sphere2(), BallOf{first_two(), 0.2}, opts);
  REQUIRE(a.x0 == b.x0);
  REQUIRE(a.weights == b.weights);
  REQUIRE(a.simplex == b.simplex);
  REQUIRE(a.rounds == b.rounds);
}

TEST_CASE("an exhausted round budget returns an incomplete report") {
  SolveOptions opts;
  opts.mesh_target = 1e-6;
  opts.max_rounds = 2;
  const SolveReport report = solve_theorem(sphere2(), SingletonOf{first_two()}, opts);
  REQUIRE_FALSE(report.complete);
  REQUIRE(report.rounds == 2);
  REQUIRE(report.locality_radius > 1e-6);
  require_report_invariants(report, opts.tol);
}

TEST_CASE("solver options are validated") {
  SolveOptions opts;
  opts.mesh_target = 0.0;
  REQUIRE_THROWS_AS(solve_theorem(sphere2(), SingletonOf{first_two()}, opts), Error);
  opts.mesh_target = 0.2;
  opts.max_rounds = 0;
  REQUIRE_THROWS_AS(solve_theorem(sphere2(), SingletonOf{first_two()}, opts), Error);
  opts.max_rounds = 8;
  opts.tol = -1.0;
  REQUIRE_THROWS_AS(solve_theorem(sphere2(), SingletonOf{first_two()}, opts), Error);
}

TEST_CASE("hypothesis violations name the vertex pair") {
  PolyFunc shifted = first_two();
  shifted.coordinates[0].push_back({1.0, {0, 0, 0}});
  SolveOptions opts;
  try {
    solve_theorem(sphere2(), SingletonOf{shifted}, opts);
    FAIL("expected HypothesisViolation");
  } catch (const HypothesisViolation& e) {
    REQUIRE(e.vertex >= 0);
    REQUIRE(e.antipode >= 0);
    REQUIRE(e.gap > 1.0);
  }
}

TEST_CASE("a selection map without zeros is reported honestly") {
  // Two hexagons swapped by central symmetry: a free simplicial involution on
  // a closed 1-manifold that is not connected, so x1 never changes sign along
  // a simplex and the PL selection map has no zero.
  const int m = 6;
  EquivariantComplex c;
  c.ambient_dim = 2;
  c.manifold_dim = 1;
  c.vertices.resize(2, 2 * m);
  c.simplices.resize(2, 2 * m);
  for (int j = 0; j < m; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / m;
    c.vertices(0, j) = 10.0 + std::cos(angle);
    c.vertices(1, j) = std::sin(angle);
    c.vertices.col(m + j) = -c.vertices.col(j);
  }
  c.involution.resize(2 * m);
  for (int j = 0; j < m; ++j) {
    c.involution[static_cast<std::size_t>(j)] = m + j;
    c.involution[static_cast<std::size_t>(m + j)] = j;
  }
  for (int j = 0; j < m; ++j) {
    const int a = j, b = (j + 1) % m;
    c.simplices(0, j) = std::min(a, b);
    c.simplices(1, j) = std::max(a, b);
    c.simplices(0, m + j) = m + std::min(a, b);
    c.simplices(1, m + j) = m + std::max(a, b);
  }
  REQUIRE(validate_complex(c).valid());

  const std::string path = clirun::temp_path("two_hexagons.json");
  save_json(path, complex_to_json(c));
  ManifoldSpec spec;
  spec.kind = ManifoldSpec::Kind::File;
  spec.path = path;

  PolyFunc g;
  g.input_dim = 2;
  g.coordinates = {{{1.0, {1, 0}}}};
  SolveOptions opts;
  try {
    solve_theorem(spec, SingletonOf{g}, opts);
    FAIL("expected NoZeroError");
  } catch (const NoZeroError& e) {
    REQUIRE(e.round == 0);
  }
}

TEST_CASE("coincidence solve for a non-antipodal singleton map") {
  PolyFunc c;
  c.input_dim = 3;
  c.coordinates = {{{1.0, {1, 0, 0}}, {1.0, {0, 0, 2}}}, {{1.0, {0, 1, 0}}}};  // (x1 + x3^2, x2)

  SolveOptions opts;
  opts.mesh_target = 0.3;
  const CoincidenceReport report = solve_coincidence(sphere2(), SingletonOf{c}, opts);

  REQUIRE(report.inner.complete);
  REQUIRE(report.x0.head(2).norm() <= 1e-12);
  REQUIRE(std::abs(std::abs(report.x0[2]) - 1.0) <= 1e-12);
  REQUIRE((report.ax0 + report.x0).norm() <= 1e-12);
  REQUIRE(report.gap <= 1e-6);
  REQUIRE((report.a - report.b).norm() <= report.gap + 1e-12);
  REQUIRE(report.a_residual <= 1e-8);
  REQUIRE(report.b_residual <= 1e-8);

  // F(x0) = {(x1 + x3^2, x2)} at the pole is the common point (1, 0).
  REQUIRE((report.a - eval_poly(c, report.x0)).norm() <= 1e-9);
}

TEST_CASE("coincidence and theorem solves agree for antipodal maps") {
  SolveOptions opts;
  opts.mesh_target = 0.3;
  const SolveReport direct = solve_theorem(sphere2(), SingletonOf{first_two()}, opts);
  const CoincidenceReport reduced = solve_coincidence(sphere2(), SingletonOf{first_two()}, opts);
  REQUIRE((direct.x0 - reduced.x0).norm() <= direct.locality_radius);
}

TEST_CASE("common point extraction at a fixed pair") {
  Vec x0(3), ax0(3);
  x0 << 0, 0, -1;
  ax0 << 0, 0, 1;

  SECTION("coinciding values") {
    PolyFunc c;
    c.input_dim = 3;
    c.coordinates = {{{1.0, {1, 0, 0}}, {1.0, {0, 0, 2}}}, {{1.0, {0, 1, 0}}}};
    const CommonPoint cp = extract_common_point(SingletonOf{c}, x0, ax0, 1e-8);
    REQUIRE(cp.feasible);
    REQUIRE(cp.gap <= 1e-12);
    REQUIRE(cp.a == cp.b);
    Vec expect(2);
    expect << 1, 0;
    REQUIRE((cp.a - expect).norm() <= 1e-12);
  }
  SECTION("separated values report the honest gap") {
    PolyFunc c;
    c.input_dim = 3;
    c.coordinates = {{{1.0, {0, 0, 1}}}, {{1.0, {0, 1, 0}}}};  // (x3, x2)
    const CommonPoint cp = extract_common_point(SingletonOf{c}, x0, ax0, 1e-8);
    REQUIRE_FALSE(cp.feasible);
    REQUIRE(cp.gap == Catch::Approx(2.0).margin(1e-9));
    REQUIRE(cp.a[0] == Catch::Approx(-1.0).margin(1e-12));
    REQUIRE(cp.b[0] == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("difference maps stay antipodal under random spot directions", "[property]") {
  // The coincidence reduction relies on Fd(A(x)) = -Fd(x) exactly; verify via
  // support functions in random unit directions on random vertex pairs.
  std::mt19937 rng(20260812);
  std::uniform_int_distribution<int> kinds(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const EquivariantComplex c = testgen::random_base_complex(rng, false);
    const int n = c.ambient_dim;
    const int d = c.manifold_dim;
    SetValuedMap map = SingletonOf{testgen::random_odd_poly(rng, n, d)};
    if (kinds(rng) == 1) {
      std::uniform_real_distribution<double> radius(0.1, 0.6);
      map = BallOf{testgen::random_odd_poly(rng, n, d), radius(rng)};
    }
    const VertexPairing pairing = vertex_pairing(c);
    const VertexPair& p = pairing.pairs[static_cast<std::size_t>(trial) % pairing.pairs.size()];
    const Vec x = c.vertex(p.representative);
    const Vec ax = c.vertex(p.antipode);
    const ConvexSet at_x = minkowski_difference(eval_map(map, x), eval_map(map, ax));
    const ConvexSet at_ax = minkowski_difference(eval_map(map, ax), eval_map(map, x));
    const Vec u = testgen::random_unit(rng, d);
    CAPTURE(trial, n, d);
    REQUIRE(support(at_ax, u) == support(reflect(at_x), u));
  }
}
