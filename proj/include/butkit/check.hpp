#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "butkit/convex.hpp"
#include "butkit/report_io.hpp"
#include "butkit/setmap.hpp"

namespace butkit {

struct CheckResult {
  bool pass = true;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    failures.push_back(what);
  }
};

namespace detail {

/// Re-verifies a solve block from its raw data, trusting nothing the solver
/// computed: weights, convex combination, witness membership (sets re-built
/// from the embedded map at the embedded vertex coordinates), location, and
/// locality.  `witness_set(k)` is the convex value the k-th witness must lie
/// in within tol.
inline void check_solve_block(const SolveReport& report, const std::function<ConvexSet(int)>& witness_set,
                              double tol, double mesh_target, CheckResult& result) {
  const Eigen::Index corners = report.weights.size();
  if (report.witnesses.cols() != corners || report.simplex_vertices.cols() != corners ||
      report.antipode_vertices.cols() != corners || report.membership_residuals.size() != corners) {
    result.fail("report arrays disagree on the number of simplex corners");
    return;
  }

  if (report.weights.minCoeff() < 0.0)
    result.fail("weights: minimum " + std::to_string(report.weights.minCoeff()) + " is negative");
  if (std::abs(report.weights.sum() - 1.0) > 1e-9)
    result.fail("weights: sum " + std::to_string(report.weights.sum()) + " differs from 1 by more than 1e-9");

  const double combination = (report.witnesses * report.weights).norm();
  if (combination > 1e-8)
    result.fail("combination: ||sum t_k y_k|| = " + std::to_string(combination) + " exceeds 1e-8");

  for (Eigen::Index k = 0; k < corners; ++k) {
    const double membership = distance(witness_set(static_cast<int>(k)), report.witnesses.col(k));
    if (membership > tol)
      result.fail("membership: witness " + std::to_string(k) + " is " + std::to_string(membership) +
                  " from its set, beyond tol " + std::to_string(tol));
  }

  const double location = (report.simplex_vertices * report.weights - report.x0).norm();
  if (location > 1e-9 * (1.0 + report.x0.norm()))
    result.fail("location: x0 differs from sum t_k v_k by " + std::to_string(location));

  for (Eigen::Index k = 0; k < corners; ++k) {
    const double spread = (report.simplex_vertices.col(k) - report.x0).norm();
    if (spread > report.locality_radius + 1e-12)
      result.fail("locality: vertex " + std::to_string(k) + " is " + std::to_string(spread) +
                  " from x0, beyond the locality radius " + std::to_string(report.locality_radius));
  }

  if (report.complete && report.locality_radius > mesh_target)
    result.fail("locality: radius " + std::to_string(report.locality_radius) +
                " exceeds the mesh target " + std::to_string(mesh_target) + " on a complete report");
}

}  // namespace detail

/// Independent re-verification of a solver report parsed from JSON.
/// Recomputes every invariant from the embedded raw data; never re-runs the
/// solver and never realizes the manifold.
inline CheckResult check_report_json(const json& j) {
  CheckResult result;
  const std::string kind = detail::expect_field(j, "kind", "report").get<std::string>();
  const SolveOptions opts = solve_options_from_json(detail::expect_field(j, "options", "report"));
  const SetValuedMap map = setmap_from_json(detail::expect_field(j, "setmap", "report"));

  if (kind == "solve-theorem") {
    const SolveReport report = detail::solve_block_from_json(j);
    detail::check_solve_block(
        report, [&](int k) { return eval_map(map, report.simplex_vertices.col(k)); }, opts.tol, opts.mesh_target,
        result);
    return result;
  }

  if (kind == "solve-coincidence") {
    const SolveReport inner = detail::solve_block_from_json(detail::expect_field(j, "theorem", "report"));
    detail::check_solve_block(
        inner,
        [&](int k) {
          return minkowski_difference(eval_map(map, inner.simplex_vertices.col(k)),
                                      eval_map(map, inner.antipode_vertices.col(k)));
        },
        opts.tol, opts.mesh_target, result);

    const Vec x0 = detail::vec_from_json(detail::expect_field(j, "x0", "report"), "report.x0");
    const Vec ax0 = detail::vec_from_json(detail::expect_field(j, "ax0", "report"), "report.ax0");
    const Vec a = detail::vec_from_json(detail::expect_field(j, "a", "report"), "report.a");
    const Vec b = detail::vec_from_json(detail::expect_field(j, "b", "report"), "report.b");
    const double gap = detail::expect_field(j, "gap", "report").get<double>();

    if ((x0 - inner.x0).norm() > 1e-12) result.fail("coincidence: x0 differs from the inner report's x0");
    const double ax0_err = (inner.antipode_vertices * inner.weights - ax0).norm();
    if (ax0_err > 1e-9 * (1.0 + ax0.norm()))
      result.fail("coincidence: ax0 differs from sum t_k A(v_k) by " + std::to_string(ax0_err));
    const double pair_gap = (a - b).norm();
    if (pair_gap > gap + 1e-12)
      result.fail("coincidence: ||a - b|| = " + std::to_string(pair_gap) + " exceeds the reported gap " +
                  std::to_string(gap));
    const double a_membership = distance(eval_map(map, x0), a);
    if (a_membership > opts.tol)
      result.fail("coincidence: a is " + std::to_string(a_membership) + " from F(x0), beyond tol");
    const double b_membership = distance(eval_map(map, ax0), b);
    if (b_membership > opts.tol)
      result.fail("coincidence: b is " + std::to_string(b_membership) + " from F(A(x0)), beyond tol");
    return result;
  }

  throw Error("report: unknown kind \"" + kind + "\"");
}

}  // namespace butkit
