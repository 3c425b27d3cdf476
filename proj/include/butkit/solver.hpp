#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "butkit/convex.hpp"
#include "butkit/errors.hpp"
#include "butkit/manifolds.hpp"
#include "butkit/plmap.hpp"
#include "butkit/setmap.hpp"
#include "butkit/vec.hpp"

namespace butkit {

struct SolveOptions {
  double mesh_target = 0.2;  // stop once the mesh norm is at or below this
  int max_rounds = 8;
  double tol = 1e-8;         // selection and witness-membership tolerance
  bool reproject = false;    // combined with the manifold spec's own flag
  double eps_bary = 1e-9;
  unsigned seed = 2026;      // directions for randomized antipodality checks
};

struct TraceRow {
  int round = 0;
  int subdivisions = 0;
  double mesh_norm = 0.0;
  int zero_count = 0;
  int simplex = -1;
  Vec point;
};

/// Finite-resolution certificate of 0 in F(x0): 0 is exactly the convex
/// combination sum t_k y_k of witnesses y_k in F(v_k), with every v_k within
/// locality_radius of x0.
struct SolveReport {
  Vec x0;
  int simplex = -1;
  Mat simplex_vertices;   // ambient x (d+1), embedded v_0..v_d
  Mat antipode_vertices;  // ambient x (d+1), embedded A(v_0)..A(v_d)
  Mat witnesses;          // d x (d+1), y_k in F(v_k)
  Vec weights;
  Vec membership_residuals;
  double combination_residual = 0.0;
  double locality_radius = 0.0;
  bool complete = false;
  int rounds = 0;
  std::vector<TraceRow> trace;
};

struct CommonPoint {
  Vec a;
  Vec b;
  double gap = 0.0;
  bool feasible = false;
};

struct CoincidenceReport {
  Vec x0;
  Vec ax0;  // involution image of x0 under the PL extension of A
  Vec a;    // in F(x0)
  Vec b;    // in F(A(x0))
  double gap = 0.0;
  double a_residual = 0.0;
  double b_residual = 0.0;
  SolveReport inner;  // solve_theorem report for the difference map
};

namespace detail {

/// One refinement round beyond `spec.subdivisions` per round
/// index, with a deterministic zero choice: round 0 takes the zero with
/// lexicographically smallest location, later rounds the zero nearest the
/// previous choice (lexicographic tie-break).
inline SolveReport solve_core(const ManifoldSpec& spec, const VertexSetFunction& vertex_set, const SolveOptions& opts,
                              const std::function<void(const EquivariantComplex&)>& round_hook = {}) {
  if (opts.mesh_target <= 0.0) throw Error("mesh target must be positive");
  if (opts.max_rounds < 1) throw Error("max rounds must be at least 1");
  if (opts.tol <= 0.0) throw Error("tolerance must be positive");

  SolveReport report;
  Vec previous;
  bool have_previous = false;

  for (int round = 0; round < opts.max_rounds; ++round) {
    const int subdivisions = spec.subdivisions + round;
    if (subdivisions > kMaxSubdivisions) break;  // resolution cap reached
    ManifoldSpec round_spec = spec;
    round_spec.subdivisions = subdivisions;
    round_spec.reproject = spec.reproject || opts.reproject;
    const EquivariantComplex c = realize(round_spec);
    if (round_hook) round_hook(c);

    const double mesh = mesh_norm(c);
    const PLMap f = build_antipodal_plmap(c, vertex_set, opts.tol);
    const std::vector<ZeroPoint> zeros = locate_zeros(f, opts.eps_bary);
    if (zeros.empty())
      throw NoZeroError(round, "no zero of the PL selection map at round " + std::to_string(round) +
                                   " (subdivisions " + std::to_string(subdivisions) +
                                   "): the manifold is not verified BUT at this resolution");

    const ZeroPoint* chosen = &zeros.front();
    for (const ZeroPoint& z : zeros) {
      if (!have_previous) {
        if (lex_less(z.point, chosen->point)) chosen = &z;
      } else {
        const double dz = (z.point - previous).norm();
        const double dc = (chosen->point - previous).norm();
        if (dz < dc || (dz == dc && lex_less(z.point, chosen->point))) chosen = &z;
      }
    }

    TraceRow row;
    row.round = round;
    row.subdivisions = subdivisions;
    row.mesh_norm = mesh;
    row.zero_count = static_cast<int>(zeros.size());
    row.simplex = chosen->simplex;
    row.point = chosen->point;
    report.trace.push_back(row);

    const int corners = c.manifold_dim + 1;
    report.x0 = chosen->point;
    report.simplex = chosen->simplex;
    report.weights = chosen->weights;
    report.simplex_vertices.resize(c.ambient_dim, corners);
    report.antipode_vertices.resize(c.ambient_dim, corners);
    report.witnesses.resize(c.manifold_dim, corners);
    report.membership_residuals.resize(corners);
    for (int r = 0; r < corners; ++r) {
      const int v = c.simplices(r, chosen->simplex);
      report.simplex_vertices.col(r) = c.vertices.col(v);
      report.antipode_vertices.col(r) = c.vertices.col(c.involution[static_cast<std::size_t>(v)]);
      report.witnesses.col(r) = f.values.col(v);
      report.membership_residuals[r] = distance(vertex_set(c, v), f.values.col(v));
    }
    report.combination_residual = (report.witnesses * report.weights).norm();
    report.locality_radius = mesh;

    previous = chosen->point;
    have_previous = true;
    if (mesh <= opts.mesh_target) {
      report.complete = true;
      break;
    }
  }

  if (report.trace.empty()) throw Error("no refinement round executed (subdivision budget exhausted)");
  report.rounds = static_cast<int>(report.trace.size());
  return report;
}

}  // namespace detail

/// Refinement loop for the zero-covering theorem: antipodal selection over
/// vertex pairs, PL zero location, and a deterministic zero trajectory until
/// the mesh norm reaches the target.  Throws HypothesisViolation when some
/// vertex pair admits no antipodal selection and NoZeroError when a round
/// finds no PL zero; an exhausted round budget returns the last round's
/// report with complete = false.
inline SolveReport solve_theorem(const ManifoldSpec& spec, const SetValuedMap& map, const SolveOptions& opts) {
  return detail::solve_core(
      spec,
      [&map](const EquivariantComplex& c, int v) {
        if (input_dim(map) != c.ambient_dim)
          throw DimensionError("solve_theorem: map expects input dimension " + std::to_string(input_dim(map)) +
                               ", complex is embedded in R^" + std::to_string(c.ambient_dim));
        return eval_map(map, c.vertices.col(v));
      },
      opts);
}

/// Common point of F(x0) and F(A(x0)) at fixed resolution: the feasible case
/// returns a = b with the iterate gap; the infeasible case returns the
/// closest pair found by the alternating projections with its honest gap.
inline CommonPoint extract_common_point(const SetValuedMap& map, const Vec& x0, const Vec& ax0, double tol) {
  const ConvexSet at_x0 = eval_map(map, x0);
  const ConvexSet at_ax0 = eval_map(map, ax0);
  const IntersectResult hit = intersect_point(at_x0, at_ax0, tol);
  CommonPoint out;
  out.feasible = hit.feasible;
  if (hit.feasible) {
    out.a = hit.point;
    out.b = hit.point;
    out.gap = hit.gap;
  } else {
    out.a = hit.point_a;
    out.b = hit.point_b;
    out.gap = (hit.point_a - hit.point_b).norm();
  }
  return out;
}

/// Coincidence solver: runs the theorem machinery on the difference map
/// Fd(x) = F(x) - F(A(x)), whose zero yields a near-common point of F(x0)
/// and F(A(x0)).  Antipodality Fd(A(x)) = -Fd(x) is spot-checked at every
/// vertex with seeded random support directions.
inline CoincidenceReport solve_coincidence(const ManifoldSpec& spec, const SetValuedMap& map,
                                           const SolveOptions& opts) {
  const VertexSetFunction difference = [&map](const EquivariantComplex& c, int v) {
    if (input_dim(map) != c.ambient_dim)
      throw DimensionError("solve_coincidence: map expects input dimension " + std::to_string(input_dim(map)) +
                           ", complex is embedded in R^" + std::to_string(c.ambient_dim));
    const int a = c.involution[static_cast<std::size_t>(v)];
    return minkowski_difference(eval_map(map, c.vertices.col(v)), eval_map(map, c.vertices.col(a)));
  };

  const auto spot_check = [&difference, &opts](const EquivariantComplex& c) {
    std::mt19937 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int d = c.manifold_dim;
    for (int v = 0; v < c.vertex_count(); ++v) {
      const int a = c.involution[static_cast<std::size_t>(v)];
      if (a < v) continue;
      const ConvexSet at_v = difference(c, v);
      const ConvexSet at_a = difference(c, a);
      const ConvexSet reflected = reflect(at_v);
      for (int t = 0; t < 4; ++t) {
        Vec u(d);
        double norm = 0.0;
        do {
          for (int i = 0; i < d; ++i) u[i] = gauss(rng);
          norm = u.norm();
        } while (norm < 1e-6);
        u /= norm;
        const double lhs = support(at_a, u);
        const double rhs = support(reflected, u);
        if (std::abs(lhs - rhs) > 1e-9 * (1.0 + std::max(std::abs(lhs), std::abs(rhs))))
          throw NotAntipodalError("difference map fails antipodality at vertex pair (" + std::to_string(v) + ", " +
                                  std::to_string(a) + "): support mismatch " + std::to_string(std::abs(lhs - rhs)));
      }
    }
  };

  CoincidenceReport report;
  report.inner = detail::solve_core(spec, difference, opts, spot_check);
  report.x0 = report.inner.x0;
  report.ax0 = report.inner.antipode_vertices * report.inner.weights;
  const CommonPoint common = extract_common_point(map, report.x0, report.ax0, opts.tol);
  report.a = common.a;
  report.b = common.b;
  report.gap = common.gap;
  report.a_residual = distance(eval_map(map, report.x0), report.a);
  report.b_residual = distance(eval_map(map, report.ax0), report.b);
  return report;
}

}  // namespace butkit
