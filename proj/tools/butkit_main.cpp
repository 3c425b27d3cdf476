// Command-line front end: meshes, validation, BUT certificates, the two
// solvers, and independent report re-verification, all through JSON files.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "butkit/butkit.hpp"

namespace {

struct ManifoldFlags {
  std::string manifold;
  int dim = 2;
  int segments = 8;
  std::string path;
  int subdivisions = 0;
  bool reproject = false;
};

void add_manifold_flags(CLI::App* cmd, ManifoldFlags& flags) {
  cmd->add_option("--manifold", flags.manifold, "Manifold kind: sphere, circle, genus2, or file")->required();
  cmd->add_option("--dim", flags.dim, "Sphere dimension d (sphere only)");
  cmd->add_option("--segments", flags.segments, "Half vertex count n of the 2n-gon (circle only)");
  cmd->add_option("--path", flags.path, "Complex JSON path (file only)");
  cmd->add_option("--subdivisions", flags.subdivisions, "Barycentric subdivision rounds applied to the base complex");
  cmd->add_flag("--reproject", flags.reproject, "Rescale vertices to the unit sphere after each subdivision");
}

butkit::ManifoldSpec to_spec(const ManifoldFlags& flags) {
  butkit::ManifoldSpec spec;
  if (flags.manifold == "sphere") {
    spec.kind = butkit::ManifoldSpec::Kind::Sphere;
    spec.dim = flags.dim;
  } else if (flags.manifold == "circle") {
    spec.kind = butkit::ManifoldSpec::Kind::Circle;
    spec.segments = flags.segments;
  } else if (flags.manifold == "genus2") {
    spec.kind = butkit::ManifoldSpec::Kind::Genus2;
  } else if (flags.manifold == "file") {
    if (flags.path.empty()) throw butkit::Error("--path is required with --manifold file");
    spec.kind = butkit::ManifoldSpec::Kind::File;
    spec.path = flags.path;
  } else {
    throw butkit::Error("unknown manifold kind \"" + flags.manifold + "\" (expected sphere, circle, genus2, file)");
  }
  spec.subdivisions = flags.subdivisions;
  spec.reproject = flags.reproject;
  return spec;
}

int run_mesh(const ManifoldFlags& flags, const std::string& out) {
  const butkit::EquivariantComplex c = butkit::realize(to_spec(flags));
  butkit::save_json(out, butkit::complex_to_json(c));
  std::printf("mesh norm %.17g\n", butkit::mesh_norm(c));
  std::printf("wrote %s: %d vertices, %d top simplices\n", out.c_str(), c.vertex_count(), c.simplex_count());
  return 0;
}

int run_validate(const std::string& complex_path, const std::string& out) {
  const butkit::EquivariantComplex c = butkit::load_complex(complex_path);
  const butkit::ValidationReport report = butkit::validate_complex(c);
  if (!out.empty()) {
    butkit::json j;
    j["valid"] = report.valid();
    butkit::json violations = butkit::json::array();
    for (const butkit::Violation& v : report.violations) {
      butkit::json vj;
      vj["kind"] = butkit::to_string(v.kind);
      vj["indices"] = v.indices;
      vj["detail"] = v.detail;
      violations.push_back(std::move(vj));
    }
    j["violations"] = std::move(violations);
    butkit::save_json(out, j);
  }
  if (report.valid()) {
    std::printf("valid: %d vertices, %d top simplices\n", c.vertex_count(), c.simplex_count());
    return 0;
  }
  std::printf("invalid: %zu violations\n", report.violations.size());
  for (const butkit::Violation& v : report.violations)
    std::fprintf(stderr, "  [%s] %s\n", butkit::to_string(v.kind), v.detail.c_str());
  return 1;
}

int run_certify(const std::string& complex_path, const std::string& map_path, const std::string& out,
                double eps_bary) {
  const butkit::EquivariantComplex c = butkit::load_complex(complex_path);
  butkit::require_valid(c, ("complex " + complex_path).c_str());
  const butkit::PolyFunc g = butkit::poly_from_json(butkit::load_json(map_path));
  const butkit::PLMap f = butkit::sample_plmap(c, g);
  const butkit::Mod4Certificate cert = butkit::certify_but(f, eps_bary);
  if (!out.empty()) butkit::save_json(out, butkit::certificate_to_json(cert));
  std::printf("zeros %d, transversal %s, verdict %s\n", cert.count, cert.transversal ? "true" : "false",
              butkit::to_string(cert.verdict));
  return cert.verdict == butkit::Verdict::ConsistentWithBut ? 0 : 1;
}

void print_solve_summary(const butkit::SolveReport& report) {
  std::printf("x0 [");
  for (Eigen::Index i = 0; i < report.x0.size(); ++i) std::printf("%s%.12g", i ? ", " : "", report.x0[i]);
  std::printf("]\n");
  std::printf("rounds %d, locality radius %.6g, combination residual %.3g, %s\n", report.rounds,
              report.locality_radius, report.combination_residual,
              report.complete ? "complete" : "INCOMPLETE (round budget exhausted)");
}

int run_solve_theorem(const ManifoldFlags& flags, const std::string& setmap_path, const butkit::SolveOptions& opts,
                      const std::string& out) {
  const butkit::ManifoldSpec spec = to_spec(flags);
  const butkit::SetValuedMap map = butkit::setmap_from_json(butkit::load_json(setmap_path));
  const butkit::SolveReport report = butkit::solve_theorem(spec, map, opts);
  butkit::save_json(out, butkit::solve_report_to_json(report, spec, map, opts));
  print_solve_summary(report);
  return report.complete ? 0 : 1;
}

int run_solve_coincidence(const ManifoldFlags& flags, const std::string& setmap_path,
                          const butkit::SolveOptions& opts, const std::string& out) {
  const butkit::ManifoldSpec spec = to_spec(flags);
  const butkit::SetValuedMap map = butkit::setmap_from_json(butkit::load_json(setmap_path));
  const butkit::CoincidenceReport report = butkit::solve_coincidence(spec, map, opts);
  butkit::save_json(out, butkit::coincidence_report_to_json(report, spec, map, opts));
  print_solve_summary(report.inner);
  std::printf("common-point gap %.6g (a residual %.3g, b residual %.3g)\n", report.gap, report.a_residual,
              report.b_residual);
  return report.inner.complete ? 0 : 1;
}

int run_check_report(const std::string& report_path) {
  const butkit::CheckResult result = butkit::check_report_json(butkit::load_json(report_path));
  if (result.pass) {
    std::printf("PASS %s\n", report_path.c_str());
    return 0;
  }
  std::printf("FAIL %s\n", report_path.c_str());
  for (const std::string& failure : result.failures) std::fprintf(stderr, "  %s\n", failure.c_str());
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PL manifolds with free involutions: meshes, BUT certificates, and set-valued zero solvers"};
  app.require_subcommand(1);

  ManifoldFlags mesh_flags;
  std::string mesh_out;
  CLI::App* mesh = app.add_subcommand("mesh", "Build an equivariant complex and write it as JSON");
  add_manifold_flags(mesh, mesh_flags);
  mesh->add_option("--out", mesh_out, "Output complex JSON path")->required();

  std::string validate_complex_path, validate_out;
  CLI::App* validate = app.add_subcommand("validate", "Check every complex invariant and report violations");
  validate->add_option("--complex", validate_complex_path, "Complex JSON path")->required();
  validate->add_option("--out", validate_out, "Optional validation report JSON path");

  std::string certify_complex_path, certify_map_path, certify_out;
  double certify_eps_bary = 1e-9;
  CLI::App* certify = app.add_subcommand("certify", "Mod-4 zero-count certificate for an antipodal coordinate map");
  certify->add_option("--complex", certify_complex_path, "Complex JSON path")->required();
  certify->add_option("--map", certify_map_path, "Polynomial map JSON path (one monomial list per coordinate)")
      ->required();
  certify->add_option("--out", certify_out, "Output certificate JSON path");
  certify->add_option("--eps-bary", certify_eps_bary, "Barycentric acceptance and interiority threshold");

  const auto add_solve_flags = [](CLI::App* cmd, ManifoldFlags& flags, std::string& setmap_path,
                                  butkit::SolveOptions& opts, std::string& out) {
    add_manifold_flags(cmd, flags);
    cmd->add_option("--setmap", setmap_path, "Set-valued map JSON path")->required();
    cmd->add_option("--mesh-target", opts.mesh_target, "Stop once the mesh norm is at or below this");
    cmd->add_option("--tol", opts.tol, "Selection and membership tolerance");
    cmd->add_option("--max-rounds", opts.max_rounds, "Refinement round budget");
    cmd->add_option("--eps-bary", opts.eps_bary, "Barycentric acceptance threshold");
    cmd->add_option("--seed", opts.seed, "Seed for randomized antipodality check directions");
    cmd->add_option("--out", out, "Output report JSON path")->required();
  };

  ManifoldFlags theorem_flags;
  std::string theorem_setmap, theorem_out;
  butkit::SolveOptions theorem_opts;
  CLI::App* theorem = app.add_subcommand("solve-theorem", "Find x0 with 0 in F(x0) by equivariant refinement");
  add_solve_flags(theorem, theorem_flags, theorem_setmap, theorem_opts, theorem_out);

  ManifoldFlags coincidence_flags;
  std::string coincidence_setmap, coincidence_out;
  butkit::SolveOptions coincidence_opts;
  CLI::App* coincidence =
      app.add_subcommand("solve-coincidence", "Find x0 where F(x0) and F(A(x0)) nearly intersect");
  add_solve_flags(coincidence, coincidence_flags, coincidence_setmap, coincidence_opts, coincidence_out);

  std::string check_path;
  CLI::App* check = app.add_subcommand("check-report", "Re-verify a solver report from its raw data");
  check->add_option("--report", check_path, "Report JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mesh) return run_mesh(mesh_flags, mesh_out);
    if (*validate) return run_validate(validate_complex_path, validate_out);
    if (*certify) return run_certify(certify_complex_path, certify_map_path, certify_out, certify_eps_bary);
    if (*theorem) return run_solve_theorem(theorem_flags, theorem_setmap, theorem_opts, theorem_out);
    if (*coincidence) return run_solve_coincidence(coincidence_flags, coincidence_setmap, coincidence_opts,
                                                   coincidence_out);
    if (*check) return run_check_report(check_path);
  } catch (const butkit::HypothesisViolation& e) {
    std::fprintf(stderr, "hypothesis violation: %s\n", e.what());
    return 1;
  } catch (const butkit::NotAntipodalError& e) {
    std::fprintf(stderr, "antipodality violation: %s\n", e.what());
    return 1;
  } catch (const butkit::NoZeroError& e) {
    std::fprintf(stderr, "no zero found: %s\n", e.what());
    return 1;
  } catch (const butkit::InvalidComplexError& e) {
    std::fprintf(stderr, "invalid complex: %s\n", e.what());
    return 1;
  } catch (const butkit::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
