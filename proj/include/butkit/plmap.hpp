#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "butkit/convex.hpp"
#include "butkit/errors.hpp"
#include "butkit/setmap.hpp"
#include "butkit/simplicial.hpp"
#include "butkit/vec.hpp"

namespace butkit {

/// Piecewise-linear map M -> R^d determined by one value per vertex
/// (d = manifold dimension).  The referenced complex must outlive the map.
struct PLMap {
  const EquivariantComplex* complex = nullptr;
  Mat values;  // manifold_dim x vertex_count
};

/// Exact vertex antipodality: value(A(v)) == -value(v) bitwise for every v.
inline bool is_antipodal(const PLMap& f) {
  const EquivariantComplex& c = *f.complex;
  for (int v = 0; v < c.vertex_count(); ++v) {
    const int a = c.involution[static_cast<std::size_t>(v)];
    if (!(f.values.col(a).array() == (-f.values.col(v)).array()).all()) return false;
  }
  return true;
}

/// Largest norm of value(A(v)) + value(v) over all vertices; 0 iff antipodal
/// up to rounding.  Used for diagnostics when the exact check fails.
inline double antipodality_defect(const PLMap& f) {
  const EquivariantComplex& c = *f.complex;
  double defect = 0.0;
  for (int v = 0; v < c.vertex_count(); ++v) {
    const int a = c.involution[static_cast<std::size_t>(v)];
    defect = std::max(defect, (f.values.col(a) + f.values.col(v)).norm());
  }
  return defect;
}

/// Samples a coordinate map at the vertices.  Antipodality is not enforced;
/// the certifier checks it separately.
inline PLMap sample_plmap(const EquivariantComplex& c, const PolyFunc& g) {
  if (g.input_dim != c.ambient_dim)
    throw DimensionError("sample_plmap: map expects input dimension " + std::to_string(g.input_dim) +
                         ", complex is embedded in R^" + std::to_string(c.ambient_dim));
  if (g.output_dim() != c.manifold_dim)
    throw DimensionError("sample_plmap: map output dimension " + std::to_string(g.output_dim()) +
                         " must equal the manifold dimension " + std::to_string(c.manifold_dim));
  PLMap f;
  f.complex = &c;
  f.values.resize(c.manifold_dim, c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) f.values.col(v) = eval_poly(g, c.vertices.col(v));
  return f;
}

/// Convex value attached to a vertex of a specific complex.  Generalizes a
/// SetValuedMap evaluated at vertex coordinates, so derived maps (like the
/// Minkowski difference F(x) - F(A(x))) can reuse the same machinery.
using VertexSetFunction = std::function<ConvexSet(const EquivariantComplex&, int)>;

/// Builds an exactly antipodal PLMap by running the antipodal selection once
/// per canonical vertex pair: value(rep) = y, value(antipode) = -y.  An
/// infeasible selection means the map violates the selection hypothesis and
/// aborts with the offending pair.
inline PLMap build_antipodal_plmap(const EquivariantComplex& c, const VertexSetFunction& vertex_set, double tol) {
  PLMap f;
  f.complex = &c;
  f.values.resize(c.manifold_dim, c.vertex_count());
  const VertexPairing pairing = vertex_pairing(c);
  for (const VertexPair& pair : pairing.pairs) {
    const ConvexSet at_rep = vertex_set(c, pair.representative);
    const ConvexSet at_anti = vertex_set(c, pair.antipode);
    if (dim(at_rep) != c.manifold_dim)
      throw DimensionError("build_antipodal_plmap: set dimension " + std::to_string(dim(at_rep)) +
                           " must equal the manifold dimension " + std::to_string(c.manifold_dim));
    const IntersectResult hit = intersect_point(at_rep, reflect(at_anti), tol);
    if (!hit.feasible)
      throw HypothesisViolation(
          pair.representative, pair.antipode, hit.gap,
          "no antipodal selection at vertex pair (" + std::to_string(pair.representative) + ", " +
              std::to_string(pair.antipode) + "): F(x) and -F(A(x)) are " + std::to_string(hit.gap) + " apart");
    f.values.col(pair.representative) = hit.point;
    f.values.col(pair.antipode) = -hit.point;
  }
  return f;
}

inline PLMap build_antipodal_plmap(const EquivariantComplex& c, const SetValuedMap& map, double tol) {
  if (input_dim(map) != c.ambient_dim)
    throw DimensionError("build_antipodal_plmap: map expects input dimension " + std::to_string(input_dim(map)) +
                         ", complex is embedded in R^" + std::to_string(c.ambient_dim));
  if (output_dim(map) != c.manifold_dim)
    throw DimensionError("build_antipodal_plmap: map output dimension " + std::to_string(output_dim(map)) +
                         " must equal the manifold dimension " + std::to_string(c.manifold_dim));
  return build_antipodal_plmap(
      c, [&map](const EquivariantComplex& cx, int v) { return eval_map(map, cx.vertices.col(v)); }, tol);
}

/// A zero of the PL map: 0 = sum t_k * value(v_k) over one top simplex.
struct ZeroPoint {
  int simplex = -1;
  Vec weights;  // clamped to >= 0 and renormalized to sum 1
  Vec point;    // embedded location sum t_k * coords(v_k)
  bool interior = false;      // all unclamped weights > eps_bary
  bool nondegenerate = false; // barycentric solve was well-conditioned
};

/// Scans every top simplex for barycentric coordinates of 0 relative to the
/// image simplex (value(v_0), ..., value(v_d)).  A simplex contributes a zero
/// when all raw weights are >= -eps_bary and the clamped combination
/// reproduces 0 within 1e-9 of the local value scale.  Zeros on shared faces
/// appear in several simplices; they are deduplicated by embedded location
/// within 10 * eps_bary * mesh_norm, keeping the lowest simplex index and
/// merging flags (nondegenerate: and, interior: or).
inline std::vector<ZeroPoint> locate_zeros(const PLMap& f, double eps_bary = 1e-9) {
  const EquivariantComplex& c = *f.complex;
  const int d = c.manifold_dim;
  const int corners = d + 1;
  const double dedup_radius = 10.0 * eps_bary * mesh_norm(c);
  const Vec target = Vec::Zero(d);

  std::vector<ZeroPoint> zeros;
  Mat image(d, corners);
  for (int s = 0; s < c.simplex_count(); ++s) {
    double value_scale = 0.0;
    for (int r = 0; r < corners; ++r) {
      image.col(r) = f.values.col(c.simplices(r, s));
      value_scale = std::max(value_scale, image.col(r).norm());
    }
    const BarycentricSolution sol = barycentric_coordinates(image, target);
    if (sol.weights.minCoeff() < -eps_bary) continue;

    Vec weights = sol.weights.cwiseMax(0.0);
    const double sum = weights.sum();
    if (sum <= 0.0) continue;
    weights /= sum;
    if ((image * weights).norm() > 1e-9 * value_scale) continue;

    ZeroPoint zero;
    zero.simplex = s;
    zero.weights = weights;
    zero.point = Vec::Zero(c.ambient_dim);
    for (int r = 0; r < corners; ++r) zero.point += weights[r] * c.vertices.col(c.simplices(r, s));
    zero.interior = sol.weights.minCoeff() > eps_bary;
    zero.nondegenerate = !sol.degenerate;

    bool merged = false;
    for (ZeroPoint& kept : zeros) {
      if ((kept.point - zero.point).norm() <= dedup_radius) {
        kept.interior = kept.interior || zero.interior;
        kept.nondegenerate = kept.nondegenerate && zero.nondegenerate;
        merged = true;
        break;
      }
    }
    if (!merged) zeros.push_back(std::move(zero));
  }
  return zeros;
}

enum class Verdict { ConsistentWithBut, Inconsistent, NotTransversal };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ConsistentWithBut: return "consistent-with-BUT";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::NotTransversal: return "not-transversal";
  }
  return "unknown";
}

struct Mod4Certificate {
  std::vector<ZeroPoint> zeros;
  int count = 0;
  bool transversal = false;
  Verdict verdict = Verdict::Inconsistent;
};

/// Mod-4 zero-count certificate for an exactly antipodal PL map: counts the
/// deduplicated zeros and reports consistent-with-BUT iff the map is
/// transversal and the count is congruent to 2 mod 4.  Transversality here
/// means every located zero has a nondegenerate linear part; zeros that land
/// on vertices or faces of the triangulation keep their honest interior=false
/// flag in the zero list.
inline Mod4Certificate certify_but(const PLMap& f, double eps_bary = 1e-9) {
  if (!is_antipodal(f))
    throw NotAntipodalError("map not antipodal: max vertex defect " + std::to_string(antipodality_defect(f)));
  Mod4Certificate cert;
  cert.zeros = locate_zeros(f, eps_bary);
  cert.count = static_cast<int>(cert.zeros.size());
  cert.transversal =
      std::all_of(cert.zeros.begin(), cert.zeros.end(), [](const ZeroPoint& z) { return z.nondegenerate; });
  if (!cert.transversal)
    cert.verdict = Verdict::NotTransversal;
  else
    cert.verdict = cert.count % 4 == 2 ? Verdict::ConsistentWithBut : Verdict::Inconsistent;
  return cert;
}

}  // namespace butkit
