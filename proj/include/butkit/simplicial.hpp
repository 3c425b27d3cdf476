#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "butkit/errors.hpp"
#include "butkit/vec.hpp"

namespace butkit {

/// Compact PL d-manifold without boundary, triangulated, carrying a free
/// simplicial involution given on vertex indices.  Vertices are columns of
/// `vertices`; top simplices are columns of `simplices` with ascending
/// vertex indices.
struct EquivariantComplex {
  int ambient_dim = 0;
  int manifold_dim = 0;
  Mat vertices;               // ambient_dim x n_vertices
  Eigen::MatrixXi simplices;  // (manifold_dim+1) x n_simplices, columns sorted
  std::vector<int> involution;

  int vertex_count() const { return static_cast<int>(vertices.cols()); }
  int simplex_count() const { return static_cast<int>(simplices.cols()); }
  Vec vertex(int v) const { return vertices.col(v); }
};

enum class ViolationKind {
  InvolutionNotInvolutive,
  FixedPoint,
  NonSimplicial,
  BoundaryFace,
  OverusedFace,
  DegenerateSimplex,
  AntipodalPairInSimplex,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::InvolutionNotInvolutive: return "involution-not-involutive";
    case ViolationKind::FixedPoint: return "fixed-point";
    case ViolationKind::NonSimplicial: return "non-simplicial";
    case ViolationKind::BoundaryFace: return "boundary-face";
    case ViolationKind::OverusedFace: return "overused-face";
    case ViolationKind::DegenerateSimplex: return "degenerate-simplex";
    case ViolationKind::AntipodalPairInSimplex: return "antipodal-pair-in-simplex";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::vector<int> indices;  // offending vertex/simplex/face indices
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

struct VertexPair {
  int representative;  // lexicographically smaller embedded coordinates
  int antipode;
};

struct VertexPairing {
  std::vector<VertexPair> pairs;
};

namespace detail {

struct IntVecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      for (int b = 0; b < 4; ++b) {
        h ^= static_cast<std::uint64_t>((x >> (8 * b)) & 0xff);
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

using FaceIndexMap = std::unordered_map<std::vector<int>, int, IntVecHash>;

inline std::vector<int> simplex_column(const Eigen::MatrixXi& simplices, int s) {
  std::vector<int> out(static_cast<std::size_t>(simplices.rows()));
  for (int r = 0; r < simplices.rows(); ++r) out[static_cast<std::size_t>(r)] = simplices(r, s);
  return out;
}

/// Map from sorted top-simplex vertex tuple to its column index.
inline FaceIndexMap simplex_index_map(const EquivariantComplex& c) {
  FaceIndexMap m;
  m.reserve(static_cast<std::size_t>(c.simplex_count()) * 2);
  for (int s = 0; s < c.simplex_count(); ++s) m.emplace(simplex_column(c.simplices, s), s);
  return m;
}

inline double simplex_diameter(const EquivariantComplex& c, int s) {
  double diam = 0.0;
  const int m = static_cast<int>(c.simplices.rows());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      diam = std::max(diam, (c.vertices.col(c.simplices(i, s)) - c.vertices.col(c.simplices(j, s))).norm());
  return diam;
}

/// Smallest singular value of the edge matrix [v_1-v_0, ..., v_d-v_0].
inline double simplex_min_singular_value(const EquivariantComplex& c, int s) {
  const int d = c.manifold_dim;
  Mat edges(c.ambient_dim, d);
  const Vec v0 = c.vertices.col(c.simplices(0, s));
  for (int i = 0; i < d; ++i) edges.col(i) = c.vertices.col(c.simplices(i + 1, s)) - v0;
  const Mat gram = edges.transpose() * edges;
  Eigen::SelfAdjointEigenSolver<Mat> eig;
  if (d <= 3) {
    eig.computeDirect(gram, Eigen::EigenvaluesOnly);
  } else {
    eig.compute(gram, Eigen::EigenvaluesOnly);
  }
  return std::sqrt(std::max(0.0, eig.eigenvalues().minCoeff()));
}

}  // namespace detail

/// Checks every complex invariant and reports all violations found.
/// Violations are data, not failures: the function never throws on bad
/// geometry, only on structurally malformed input (out-of-range indices).
inline ValidationReport validate_complex(const EquivariantComplex& c) {
  const int nv = c.vertex_count();
  const int ns = c.simplex_count();
  const int d = c.manifold_dim;
  if (static_cast<int>(c.involution.size()) != nv)
    throw Error("involution length " + std::to_string(c.involution.size()) +
                " does not match vertex count " + std::to_string(nv));
  if (ns > 0 && c.simplices.rows() != d + 1)
    throw Error("top simplices must have " + std::to_string(d + 1) + " vertices");
  for (int v = 0; v < nv; ++v)
    if (c.involution[static_cast<std::size_t>(v)] < 0 || c.involution[static_cast<std::size_t>(v)] >= nv)
      throw Error("involution index out of range at vertex " + std::to_string(v));
  for (int s = 0; s < ns; ++s)
    for (int r = 0; r <= d; ++r)
      if (c.simplices(r, s) < 0 || c.simplices(r, s) >= nv)
        throw Error("simplex " + std::to_string(s) + " has vertex index out of range");

  ValidationReport report;

  for (int v = 0; v < nv; ++v) {
    const int a = c.involution[static_cast<std::size_t>(v)];
    if (c.involution[static_cast<std::size_t>(a)] != v)
      report.violations.push_back({ViolationKind::InvolutionNotInvolutive,
                                   {v},
                                   "A(A(" + std::to_string(v) + ")) = " +
                                       std::to_string(c.involution[static_cast<std::size_t>(a)])});
    if (a == v)
      report.violations.push_back({ViolationKind::FixedPoint, {v}, "A(" + std::to_string(v) + ") = " + std::to_string(v)});
  }

  // Simpliciality of the involution: the image of every top simplex is a top simplex.
  const auto index_map = detail::simplex_index_map(c);
  for (int s = 0; s < ns; ++s) {
    std::vector<int> image(static_cast<std::size_t>(d + 1));
    for (int r = 0; r <= d; ++r) image[static_cast<std::size_t>(r)] = c.involution[static_cast<std::size_t>(c.simplices(r, s))];
    std::sort(image.begin(), image.end());
    if (index_map.find(image) == index_map.end())
      report.violations.push_back({ViolationKind::NonSimplicial, {s}, "image of simplex " + std::to_string(s) + " is not a top simplex"});
  }

  // Closed pseudomanifold: every (d-1)-face lies in exactly two top simplices.
  std::unordered_map<std::vector<int>, int, detail::IntVecHash> face_count;
  face_count.reserve(static_cast<std::size_t>(ns) * static_cast<std::size_t>(d + 1));
  for (int s = 0; s < ns; ++s) {
    const auto col = detail::simplex_column(c.simplices, s);
    for (int drop = 0; drop <= d; ++drop) {
      std::vector<int> face;
      face.reserve(static_cast<std::size_t>(d));
      for (int r = 0; r <= d; ++r)
        if (r != drop) face.push_back(col[static_cast<std::size_t>(r)]);
      ++face_count[face];
    }
  }
  for (const auto& [face, count] : face_count) {
    if (count == 2) continue;
    report.violations.push_back({count == 1 ? ViolationKind::BoundaryFace : ViolationKind::OverusedFace,
                                 face,
                                 "face lies in " + std::to_string(count) + " top simplices"});
  }

  // Geometric nondegeneracy, relative to each simplex's diameter.
  for (int s = 0; s < ns; ++s) {
    const double diam = detail::simplex_diameter(c, s);
    if (detail::simplex_min_singular_value(c, s) <= 1e-12 * diam)
      report.violations.push_back({ViolationKind::DegenerateSimplex, {s}, "vertices of simplex " + std::to_string(s) + " are affinely dependent"});
  }

  // Freeness on the polyhedron, not just on vertices: a simplex containing an
  // antipodal vertex pair is setwise invariant along that edge and its
  // midpoint is a fixed point of A.
  for (int s = 0; s < ns; ++s) {
    for (int r = 0; r <= d; ++r) {
      const int v = c.simplices(r, s);
      const int a = c.involution[static_cast<std::size_t>(v)];
      if (a <= v) continue;  // report each pair once
      for (int q = 0; q <= d; ++q) {
        if (c.simplices(q, s) == a) {
          report.violations.push_back({ViolationKind::AntipodalPairInSimplex,
                                       {s, v, a},
                                       "simplex " + std::to_string(s) + " contains the antipodal pair (" +
                                           std::to_string(v) + ", " + std::to_string(a) + ")"});
        }
      }
    }
  }

  return report;
}

/// Throws InvalidComplexError describing the first few violations.
inline void require_valid(const EquivariantComplex& c, const char* context) {
  const ValidationReport report = validate_complex(c);
  if (report.valid()) return;
  std::string msg = std::string(context) + ": invalid complex:";
  const std::size_t shown = std::min<std::size_t>(report.violations.size(), 3);
  for (std::size_t i = 0; i < shown; ++i)
    msg += std::string(" [") + to_string(report.violations[i].kind) + "] " + report.violations[i].detail + ";";
  if (report.violations.size() > shown)
    msg += " ... " + std::to_string(report.violations.size() - shown) + " more";
  throw InvalidComplexError(msg);
}

/// Maximum diameter over top simplices (the triangulation norm |T|).
inline double mesh_norm(const EquivariantComplex& c) {
  if (c.simplex_count() == 0) throw Error("empty complex");
  double norm = 0.0;
  for (int s = 0; s < c.simplex_count(); ++s) norm = std::max(norm, detail::simplex_diameter(c, s));
  return norm;
}

namespace detail {

/// Barycentric subdivision without the validity pre-check.  Validity of the
/// output follows from validity of the input (the closure property), which
/// lets refinement loops validate once instead of at every level.
inline EquivariantComplex subdivide_unchecked(const EquivariantComplex& c) {
  const int d = c.manifold_dim;
  const int nv = c.vertex_count();
  const int ns = c.simplex_count();
  const int corners = d + 1;
  const int n_masks = 1 << corners;

  // Register one new vertex per face of any top simplex.  Original vertices
  // keep their indices (a 0-face's barycenter is the vertex itself); faces of
  // two or more vertices get fresh indices in discovery order.
  FaceIndexMap face_index;
  face_index.reserve(static_cast<std::size_t>(ns) * static_cast<std::size_t>(n_masks));
  std::vector<std::vector<int>> face_vertices;  // registered faces, by new index - nv
  for (int s = 0; s < ns; ++s) {
    const auto col = simplex_column(c.simplices, s);
    for (int mask = 1; mask < n_masks; ++mask) {
      if ((mask & (mask - 1)) == 0) continue;  // singleton: existing vertex
      std::vector<int> face;
      for (int r = 0; r < corners; ++r)
        if (mask & (1 << r)) face.push_back(col[static_cast<std::size_t>(r)]);
      const int next = nv + static_cast<int>(face_vertices.size());
      if (face_index.emplace(face, next).second) face_vertices.push_back(std::move(face));
    }
  }

  EquivariantComplex out;
  out.ambient_dim = c.ambient_dim;
  out.manifold_dim = d;
  const int new_nv = nv + static_cast<int>(face_vertices.size());
  out.vertices.resize(c.ambient_dim, new_nv);
  out.vertices.leftCols(nv) = c.vertices;
  for (std::size_t f = 0; f < face_vertices.size(); ++f) {
    Vec bary = Vec::Zero(c.ambient_dim);
    for (int v : face_vertices[f]) bary += c.vertices.col(v);
    out.vertices.col(nv + static_cast<Eigen::Index>(f)) = bary / static_cast<double>(face_vertices[f].size());
  }

  // The involution sends the barycenter of a face to the barycenter of the
  // image face, which is registered because A is simplicial on the input.
  out.involution.resize(static_cast<std::size_t>(new_nv));
  for (int v = 0; v < nv; ++v) out.involution[static_cast<std::size_t>(v)] = c.involution[static_cast<std::size_t>(v)];
  for (std::size_t f = 0; f < face_vertices.size(); ++f) {
    std::vector<int> image;
    image.reserve(face_vertices[f].size());
    for (int v : face_vertices[f]) image.push_back(c.involution[static_cast<std::size_t>(v)]);
    std::sort(image.begin(), image.end());
    out.involution[static_cast<std::size_t>(nv) + f] = face_index.at(image);
  }

  // One output simplex per flag (chain of faces) per input simplex: for each
  // vertex ordering, take barycenters of the increasing prefix faces.
  std::vector<int> factorial_table{1, 1, 2, 6, 24, 120, 720};
  const int chains = corners < static_cast<int>(factorial_table.size())
                         ? factorial_table[static_cast<std::size_t>(corners)]
                         : 0;
  if (chains == 0) throw Error("manifold dimension too large for subdivision");
  out.simplices.resize(corners, ns * chains);

  std::vector<int> mask_vertex(static_cast<std::size_t>(n_masks));
  int written = 0;
  for (int s = 0; s < ns; ++s) {
    const auto col = simplex_column(c.simplices, s);
    for (int mask = 1; mask < n_masks; ++mask) {
      if ((mask & (mask - 1)) == 0) {
        int r = 0;
        while (!(mask & (1 << r))) ++r;
        mask_vertex[static_cast<std::size_t>(mask)] = col[static_cast<std::size_t>(r)];
        continue;
      }
      std::vector<int> face;
      for (int r = 0; r < corners; ++r)
        if (mask & (1 << r)) face.push_back(col[static_cast<std::size_t>(r)]);
      mask_vertex[static_cast<std::size_t>(mask)] = face_index.at(face);
    }
    std::vector<int> order(static_cast<std::size_t>(corners));
    for (int r = 0; r < corners; ++r) order[static_cast<std::size_t>(r)] = r;
    std::vector<int> cell(static_cast<std::size_t>(corners));
    do {
      int mask = 0;
      for (int i = 0; i < corners; ++i) {
        mask |= 1 << order[static_cast<std::size_t>(i)];
        cell[static_cast<std::size_t>(i)] = mask_vertex[static_cast<std::size_t>(mask)];
      }
      std::sort(cell.begin(), cell.end());
      for (int i = 0; i < corners; ++i) out.simplices(i, written) = cell[static_cast<std::size_t>(i)];
      ++written;
    } while (std::next_permutation(order.begin(), order.end()));
  }

  return out;
}

}  // namespace detail

/// Equivariant barycentric subdivision: new vertices at face barycenters, one
/// top simplex per flag of faces.  Multiplies the simplex count by (d+1)!.
inline EquivariantComplex barycentric_subdivide(const EquivariantComplex& c) {
  require_valid(c, "barycentric_subdivide");
  return detail::subdivide_unchecked(c);
}

/// Deterministic partition of the vertices into antipodal pairs.  The
/// representative is the vertex with lexicographically smaller embedded
/// coordinates; coincident embeddings fall back to the smaller index.
inline VertexPairing vertex_pairing(const EquivariantComplex& c) {
  const int nv = c.vertex_count();
  if (static_cast<int>(c.involution.size()) != nv) throw Error("involution length does not match vertex count");
  for (int v = 0; v < nv; ++v) {
    const int a = c.involution[static_cast<std::size_t>(v)];
    if (a < 0 || a >= nv || c.involution[static_cast<std::size_t>(a)] != v || a == v)
      throw InvalidComplexError("vertex_pairing: involution is not a free involution at vertex " + std::to_string(v));
  }
  VertexPairing pairing;
  pairing.pairs.reserve(static_cast<std::size_t>(nv) / 2);
  for (int v = 0; v < nv; ++v) {
    const int a = c.involution[static_cast<std::size_t>(v)];
    if (a < v) continue;  // handle each pair at its smaller index
    VertexPair pair{v, a};
    if (lex_less(c.vertices.col(a), c.vertices.col(v))) pair = {a, v};
    pairing.pairs.push_back(pair);
  }
  return pairing;
}

}  // namespace butkit
