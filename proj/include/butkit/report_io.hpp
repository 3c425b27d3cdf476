#pragma once

#include <string>

#include "butkit/json_io.hpp"
#include "butkit/manifolds.hpp"
#include "butkit/plmap.hpp"
#include "butkit/solver.hpp"

namespace butkit {

inline json certificate_to_json(const Mod4Certificate& cert) {
  json j;
  json zeros = json::array();
  for (const ZeroPoint& z : cert.zeros) {
    json zj;
    zj["simplex"] = z.simplex;
    zj["weights"] = detail::vec_to_json(z.weights);
    zj["point"] = detail::vec_to_json(z.point);
    zj["interior"] = z.interior;
    zj["nondegenerate"] = z.nondegenerate;
    zeros.push_back(std::move(zj));
  }
  j["zeros"] = std::move(zeros);
  j["count"] = cert.count;
  j["transversal"] = cert.transversal;
  j["verdict"] = to_string(cert.verdict);
  return j;
}

inline json solve_options_to_json(const SolveOptions& opts) {
  json j;
  j["mesh_target"] = opts.mesh_target;
  j["max_rounds"] = opts.max_rounds;
  j["tol"] = opts.tol;
  j["reproject"] = opts.reproject;
  j["eps_bary"] = opts.eps_bary;
  j["seed"] = opts.seed;
  return j;
}

inline SolveOptions solve_options_from_json(const json& j) {
  SolveOptions opts;
  opts.mesh_target = detail::expect_field(j, "mesh_target", "options").get<double>();
  opts.max_rounds = detail::expect_field(j, "max_rounds", "options").get<int>();
  opts.tol = detail::expect_field(j, "tol", "options").get<double>();
  opts.reproject = detail::expect_field(j, "reproject", "options").get<bool>();
  opts.eps_bary = detail::expect_field(j, "eps_bary", "options").get<double>();
  opts.seed = detail::expect_field(j, "seed", "options").get<unsigned>();
  return opts;
}

namespace detail {

inline json solve_block_to_json(const SolveReport& report) {
  json j;
  j["x0"] = vec_to_json(report.x0);
  j["simplex"] = report.simplex;
  j["simplex_vertices"] = mat_to_json(report.simplex_vertices);
  j["antipode_vertices"] = mat_to_json(report.antipode_vertices);
  j["witnesses"] = mat_to_json(report.witnesses);
  j["weights"] = vec_to_json(report.weights);
  j["membership_residuals"] = vec_to_json(report.membership_residuals);
  j["combination_residual"] = report.combination_residual;
  j["locality_radius"] = report.locality_radius;
  j["complete"] = report.complete;
  j["rounds"] = report.rounds;
  json trace = json::array();
  for (const TraceRow& row : report.trace) {
    json rj;
    rj["round"] = row.round;
    rj["subdivisions"] = row.subdivisions;
    rj["mesh_norm"] = row.mesh_norm;
    rj["zero_count"] = row.zero_count;
    rj["simplex"] = row.simplex;
    rj["point"] = vec_to_json(row.point);
    trace.push_back(std::move(rj));
  }
  j["trace"] = std::move(trace);
  return j;
}

inline SolveReport solve_block_from_json(const json& j) {
  SolveReport report;
  report.x0 = vec_from_json(expect_field(j, "x0", "report"), "report.x0");
  report.simplex = expect_field(j, "simplex", "report").get<int>();
  report.simplex_vertices = mat_from_json(expect_field(j, "simplex_vertices", "report"), "report.simplex_vertices");
  report.antipode_vertices =
      mat_from_json(expect_field(j, "antipode_vertices", "report"), "report.antipode_vertices");
  report.witnesses = mat_from_json(expect_field(j, "witnesses", "report"), "report.witnesses");
  report.weights = vec_from_json(expect_field(j, "weights", "report"), "report.weights");
  report.membership_residuals =
      vec_from_json(expect_field(j, "membership_residuals", "report"), "report.membership_residuals");
  report.combination_residual = expect_field(j, "combination_residual", "report").get<double>();
  report.locality_radius = expect_field(j, "locality_radius", "report").get<double>();
  report.complete = expect_field(j, "complete", "report").get<bool>();
  report.rounds = expect_field(j, "rounds", "report").get<int>();
  const json& trace = expect_field(j, "trace", "report");
  if (!trace.is_array()) throw Error("report.trace: expected an array");
  for (const json& rj : trace) {
    TraceRow row;
    row.round = expect_field(rj, "round", "trace").get<int>();
    row.subdivisions = expect_field(rj, "subdivisions", "trace").get<int>();
    row.mesh_norm = expect_field(rj, "mesh_norm", "trace").get<double>();
    row.zero_count = expect_field(rj, "zero_count", "trace").get<int>();
    row.simplex = expect_field(rj, "simplex", "trace").get<int>();
    row.point = vec_from_json(expect_field(rj, "point", "trace"), "trace.point");
    report.trace.push_back(std::move(row));
  }
  return report;
}

}  // namespace detail

inline json solve_report_to_json(const SolveReport& report, const ManifoldSpec& spec, const SetValuedMap& map,
                                 const SolveOptions& opts) {
  json j = detail::solve_block_to_json(report);
  j["kind"] = "solve-theorem";
  j["manifold"] = manifold_spec_to_json(spec);
  j["setmap"] = setmap_to_json(map);
  j["options"] = solve_options_to_json(opts);
  return j;
}

inline json coincidence_report_to_json(const CoincidenceReport& report, const ManifoldSpec& spec,
                                       const SetValuedMap& map, const SolveOptions& opts) {
  json j;
  j["kind"] = "solve-coincidence";
  j["x0"] = detail::vec_to_json(report.x0);
  j["ax0"] = detail::vec_to_json(report.ax0);
  j["a"] = detail::vec_to_json(report.a);
  j["b"] = detail::vec_to_json(report.b);
  j["gap"] = report.gap;
  j["a_residual"] = report.a_residual;
  j["b_residual"] = report.b_residual;
  j["theorem"] = detail::solve_block_to_json(report.inner);
  j["manifold"] = manifold_spec_to_json(spec);
  j["setmap"] = setmap_to_json(map);
  j["options"] = solve_options_to_json(opts);
  return j;
}

}  // namespace butkit
