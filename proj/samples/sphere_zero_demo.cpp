// Library walkthrough: find a point of the sphere whose ball value covers the
// origin, then re-verify the emitted certificate data by hand.

#include <cstdio>

#include "butkit/butkit.hpp"

int main() {
  using namespace butkit;

  // F(x) = Ball((x1, x2), 0.3) over the unit 2-sphere.
  PolyFunc center;
  center.input_dim = 3;
  center.coordinates = {{{1.0, {1, 0, 0}}}, {{1.0, {0, 1, 0}}}};
  const SetValuedMap map = BallOf{center, 0.3};

  ManifoldSpec spec;
  spec.kind = ManifoldSpec::Kind::Sphere;
  spec.dim = 2;
  spec.reproject = true;

  SolveOptions opts;
  opts.mesh_target = 0.3;

  const SolveReport report = solve_theorem(spec, map, opts);
  std::printf("x0 = (%.6f, %.6f, %.6f) after %d rounds, locality %.4f\n", report.x0[0], report.x0[1], report.x0[2],
              report.rounds, report.locality_radius);
  std::printf("0 = sum t_k y_k with residual %.3g; witness memberships:", report.combination_residual);
  for (Eigen::Index k = 0; k < report.membership_residuals.size(); ++k)
    std::printf(" %.3g", report.membership_residuals[k]);
  std::printf("\n");

  // The certificate is self-contained: recompute the combination directly.
  const double recombined = (report.witnesses * report.weights).norm();
  std::printf("recomputed combination residual %.3g, complete = %s\n", recombined,
              report.complete ? "true" : "false");
  return report.complete ? 0 : 1;
}
