#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "butkit/errors.hpp"
#include "butkit/genus2_data.hpp"
#include "butkit/json_io.hpp"
#include "butkit/simplicial.hpp"
#include "butkit/vec.hpp"

namespace butkit {

inline constexpr int kMaxSubdivisions = 8;
inline constexpr int kMaxSphereDim = 4;

struct ManifoldSpec {
  enum class Kind { Sphere, Circle, Genus2, File };
  Kind kind = Kind::Sphere;
  int dim = 2;        // sphere only
  int segments = 8;   // circle only: 2n-gon
  std::string path;   // file only
  int subdivisions = 0;
  bool reproject = false;  // sphere/circle only
};

/// Boundary of the (d+1)-dimensional cross-polytope: vertices +-e_1..e_{d+1},
/// one top simplex per sign pattern, involution v -> -v.  The antipodal map
/// is exactly simplicial on this model in every dimension, and antipodal
/// vertex coordinates are exact negations.
inline EquivariantComplex build_sphere(int d) {
  if (d < 1 || d > kMaxSphereDim)
    throw Error("sphere dimension must be in [1, " + std::to_string(kMaxSphereDim) + "], got " + std::to_string(d));
  EquivariantComplex c;
  c.ambient_dim = d + 1;
  c.manifold_dim = d;
  const int nv = 2 * (d + 1);
  c.vertices = Mat::Zero(d + 1, nv);
  c.involution.resize(static_cast<std::size_t>(nv));
  for (int i = 0; i <= d; ++i) {
    c.vertices(i, 2 * i) = 1.0;       // +e_i
    c.vertices(i, 2 * i + 1) = -1.0;  // -e_i
    c.involution[static_cast<std::size_t>(2 * i)] = 2 * i + 1;
    c.involution[static_cast<std::size_t>(2 * i + 1)] = 2 * i;
  }
  const int ns = 1 << (d + 1);
  c.simplices.resize(d + 1, ns);
  for (int signs = 0; signs < ns; ++signs)
    for (int i = 0; i <= d; ++i) c.simplices(i, signs) = 2 * i + ((signs >> i) & 1);
  return c;
}

/// Regular 2n-gon on the unit circle, vertex j at angle pi*j/n, involution
/// j -> j+n mod 2n.  The second half of the vertices is stored as the exact
/// negation of the first half so antipodal coordinates negate exactly.
inline EquivariantComplex build_circle(int n) {
  if (n < 2) throw Error("circle segments must be >= 2, got " + std::to_string(n));
  EquivariantComplex c;
  c.ambient_dim = 2;
  c.manifold_dim = 1;
  const int nv = 2 * n;
  c.vertices.resize(2, nv);
  c.involution.resize(static_cast<std::size_t>(nv));
  for (int j = 0; j < n; ++j) {
    const double angle = std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    c.vertices(0, j) = std::cos(angle);
    c.vertices(1, j) = std::sin(angle);
    c.vertices.col(j + n) = -c.vertices.col(j);
    c.involution[static_cast<std::size_t>(j)] = j + n;
    c.involution[static_cast<std::size_t>(j + n)] = j;
  }
  c.simplices.resize(2, nv);
  for (int j = 0; j < nv; ++j) {
    const int a = j;
    const int b = (j + 1) % nv;
    c.simplices(0, j) = std::min(a, b);
    c.simplices(1, j) = std::max(a, b);
  }
  return c;
}

/// Bundled centrally symmetric triangulated genus-2 surface (chi = -2) with
/// involution v -> -v, frozen as a JSON asset and validated at load.
inline EquivariantComplex build_genus2() {
  const EquivariantComplex c = complex_from_json(json::parse(detail::kGenus2Json));
  require_valid(c, "genus-2 asset");
  return c;
}

inline EquivariantComplex load_complex(const std::string& path) {
  return complex_from_json(load_json(path));
}

namespace detail {

/// Rescale every vertex to unit norm.  Negation commutes with normalization,
/// so exact antipodal coordinates stay exact.
inline void reproject_to_unit_sphere(EquivariantComplex& c) {
  for (int v = 0; v < c.vertex_count(); ++v) {
    const double n = c.vertices.col(v).norm();
    if (n == 0.0) throw Error("reproject: vertex " + std::to_string(v) + " at the origin");
    c.vertices.col(v) /= n;
  }
}

}  // namespace detail

/// Builds the base complex described by `spec` and applies `subdivisions` rounds of
/// barycentric subdivision, reprojecting to the unit sphere after each round
/// when requested (sphere/circle only).  The base complex is validated;
/// subdivision preserves validity, so refinement levels are not re-validated.
inline EquivariantComplex realize(const ManifoldSpec& spec) {
  if (spec.subdivisions < 0 || spec.subdivisions > kMaxSubdivisions)
    throw Error("subdivisions must be in [0, " + std::to_string(kMaxSubdivisions) + "], got " +
                std::to_string(spec.subdivisions));
  EquivariantComplex c;
  bool curved = false;
  switch (spec.kind) {
    case ManifoldSpec::Kind::Sphere:
      c = build_sphere(spec.dim);
      curved = true;
      break;
    case ManifoldSpec::Kind::Circle:
      c = build_circle(spec.segments);
      curved = true;
      break;
    case ManifoldSpec::Kind::Genus2:
      c = build_genus2();
      break;
    case ManifoldSpec::Kind::File:
      c = load_complex(spec.path);
      require_valid(c, ("complex " + spec.path).c_str());
      break;
  }
  for (int k = 0; k < spec.subdivisions; ++k) {
    c = detail::subdivide_unchecked(c);
    if (spec.reproject && curved) detail::reproject_to_unit_sphere(c);
  }
  return c;
}

inline json manifold_spec_to_json(const ManifoldSpec& spec) {
  json j;
  switch (spec.kind) {
    case ManifoldSpec::Kind::Sphere:
      j["kind"] = "sphere";
      j["dim"] = spec.dim;
      break;
    case ManifoldSpec::Kind::Circle:
      j["kind"] = "circle";
      j["segments"] = spec.segments;
      break;
    case ManifoldSpec::Kind::Genus2:
      j["kind"] = "genus2";
      break;
    case ManifoldSpec::Kind::File:
      j["kind"] = "file";
      j["path"] = spec.path;
      break;
  }
  j["subdivisions"] = spec.subdivisions;
  j["reproject"] = spec.reproject;
  return j;
}

inline ManifoldSpec manifold_spec_from_json(const json& j) {
  ManifoldSpec spec;
  const std::string kind = detail::expect_field(j, "kind", "manifold spec").get<std::string>();
  if (kind == "sphere") {
    spec.kind = ManifoldSpec::Kind::Sphere;
    spec.dim = detail::expect_field(j, "dim", "manifold spec").get<int>();
  } else if (kind == "circle") {
    spec.kind = ManifoldSpec::Kind::Circle;
    spec.segments = detail::expect_field(j, "segments", "manifold spec").get<int>();
  } else if (kind == "genus2") {
    spec.kind = ManifoldSpec::Kind::Genus2;
  } else if (kind == "file") {
    spec.kind = ManifoldSpec::Kind::File;
    spec.path = detail::expect_field(j, "path", "manifold spec").get<std::string>();
  } else {
    throw Error("manifold spec: unknown kind \"" + kind + "\"");
  }
  spec.subdivisions = detail::expect_field(j, "subdivisions", "manifold spec").get<int>();
  spec.reproject = detail::expect_field(j, "reproject", "manifold spec").get<bool>();
  return spec;
}

}  // namespace butkit
