#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "butkit/convex.hpp"
#include "butkit/errors.hpp"
#include "butkit/setmap.hpp"
#include "butkit/simplicial.hpp"
#include "butkit/vec.hpp"

namespace butkit {

using nlohmann::json;

namespace detail {

inline const json& expect_field(const json& j, const char* name, const char* context) {
  if (!j.is_object()) throw Error(std::string(context) + ": expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw Error(std::string(context) + ": missing field \"" + name + "\"");
  return *it;
}

inline json vec_to_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

inline Vec vec_from_json(const json& j, const char* context) {
  if (!j.is_array()) throw Error(std::string(context) + ": expected an array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw Error(std::string(context) + ": entry " + std::to_string(i) + " is not a number");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

/// Columns of a matrix as a JSON array of arrays.
inline json mat_to_json(const Mat& m) {
  json out = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(vec_to_json(m.col(c)));
  return out;
}

inline Mat mat_from_json(const json& j, const char* context) {
  if (!j.is_array() || j.empty()) throw Error(std::string(context) + ": expected a nonempty array of point arrays");
  const Vec first = vec_from_json(j[0], context);
  Mat m(first.size(), static_cast<Eigen::Index>(j.size()));
  m.col(0) = first;
  for (std::size_t c = 1; c < j.size(); ++c) {
    const Vec col = vec_from_json(j[c], context);
    if (col.size() != m.rows())
      throw Error(std::string(context) + ": entry " + std::to_string(c) + " has dimension " +
                  std::to_string(col.size()) + ", expected " + std::to_string(m.rows()));
    m.col(static_cast<Eigen::Index>(c)) = col;
  }
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// EquivariantComplex

inline json complex_to_json(const EquivariantComplex& c) {
  json j;
  j["ambient_dim"] = c.ambient_dim;
  j["manifold_dim"] = c.manifold_dim;
  j["vertices"] = detail::mat_to_json(c.vertices);
  json simplices = json::array();
  for (int s = 0; s < c.simplex_count(); ++s) {
    json cell = json::array();
    for (int r = 0; r < c.simplices.rows(); ++r) cell.push_back(c.simplices(r, s));
    simplices.push_back(std::move(cell));
  }
  j["simplices"] = std::move(simplices);
  j["involution"] = c.involution;
  return j;
}

inline EquivariantComplex complex_from_json(const json& j) {
  EquivariantComplex c;
  c.ambient_dim = detail::expect_field(j, "ambient_dim", "complex").get<int>();
  c.manifold_dim = detail::expect_field(j, "manifold_dim", "complex").get<int>();
  if (c.ambient_dim < 1) throw Error("complex: ambient_dim must be >= 1");
  if (c.manifold_dim < 1) throw Error("complex: manifold_dim must be >= 1");
  c.vertices = detail::mat_from_json(detail::expect_field(j, "vertices", "complex"), "complex.vertices");
  if (c.vertices.rows() != c.ambient_dim)
    throw Error("complex.vertices: points have dimension " + std::to_string(c.vertices.rows()) +
                ", ambient_dim says " + std::to_string(c.ambient_dim));
  const int nv = static_cast<int>(c.vertices.cols());

  const json& simplices = detail::expect_field(j, "simplices", "complex");
  if (!simplices.is_array() || simplices.empty()) throw Error("complex.simplices: expected a nonempty array");
  const int corners = c.manifold_dim + 1;
  c.simplices.resize(corners, static_cast<Eigen::Index>(simplices.size()));
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    const json& cell = simplices[s];
    if (!cell.is_array() || static_cast<int>(cell.size()) != corners)
      throw Error("complex.simplices: entry " + std::to_string(s) + " must list " + std::to_string(corners) +
                  " vertex indices");
    std::vector<int> idx(static_cast<std::size_t>(corners));
    for (int r = 0; r < corners; ++r) {
      if (!cell[static_cast<std::size_t>(r)].is_number_integer())
        throw Error("complex.simplices: entry " + std::to_string(s) + " has a non-integer vertex index");
      idx[static_cast<std::size_t>(r)] = cell[static_cast<std::size_t>(r)].get<int>();
      if (idx[static_cast<std::size_t>(r)] < 0 || idx[static_cast<std::size_t>(r)] >= nv)
        throw Error("complex.simplices: entry " + std::to_string(s) + " has vertex index out of range [0, " +
                    std::to_string(nv) + ")");
    }
    std::sort(idx.begin(), idx.end());
    for (int r = 0; r < corners; ++r) c.simplices(r, static_cast<Eigen::Index>(s)) = idx[static_cast<std::size_t>(r)];
  }

  const json& involution = detail::expect_field(j, "involution", "complex");
  if (!involution.is_array() || static_cast<int>(involution.size()) != nv)
    throw Error("complex.involution: expected an array of " + std::to_string(nv) + " vertex indices");
  c.involution.resize(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    if (!involution[static_cast<std::size_t>(v)].is_number_integer())
      throw Error("complex.involution: entry " + std::to_string(v) + " is not an integer");
    const int a = involution[static_cast<std::size_t>(v)].get<int>();
    if (a < 0 || a >= nv)
      throw Error("complex.involution: entry " + std::to_string(v) + " out of range [0, " + std::to_string(nv) + ")");
    c.involution[static_cast<std::size_t>(v)] = a;
  }
  return c;
}

// ---------------------------------------------------------------------------
// ConvexSet

inline json convexset_to_json(const ConvexSet& s) {
  json j;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Singleton>) {
          j["kind"] = "singleton";
          j["point"] = detail::vec_to_json(v.point);
        } else if constexpr (std::is_same_v<T, Ball>) {
          j["kind"] = "ball";
          j["center"] = detail::vec_to_json(v.center);
          j["radius"] = v.radius;
        } else {
          j["kind"] = "vpolytope";
          j["generators"] = detail::mat_to_json(v.generators);
        }
      },
      s);
  return j;
}

inline ConvexSet convexset_from_json(const json& j) {
  const std::string kind = detail::expect_field(j, "kind", "convex set").get<std::string>();
  if (kind == "singleton") return Singleton{detail::vec_from_json(detail::expect_field(j, "point", "singleton"), "singleton.point")};
  if (kind == "ball") {
    Ball b;
    b.center = detail::vec_from_json(detail::expect_field(j, "center", "ball"), "ball.center");
    b.radius = detail::expect_field(j, "radius", "ball").get<double>();
    if (b.radius < 0) throw Error("ball: radius must be >= 0");
    return b;
  }
  if (kind == "vpolytope")
    return VPolytope{detail::mat_from_json(detail::expect_field(j, "generators", "vpolytope"), "vpolytope.generators")};
  throw Error("convex set: unknown kind \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// PolyFunc / SetValuedMap

inline json poly_to_json(const PolyFunc& g) {
  json coords = json::array();
  for (const auto& coordinate : g.coordinates) {
    json monos = json::array();
    for (const Monomial& m : coordinate) {
      json mono;
      mono["c"] = m.coeff;
      mono["e"] = m.exponents;
      monos.push_back(std::move(mono));
    }
    coords.push_back(std::move(monos));
  }
  return coords;
}

/// POLY schema: one array per output coordinate, each listing monomials
/// {"c": coefficient, "e": exponent vector over the ambient coordinates}.
/// The input dimension is the (common) exponent-vector length.
inline PolyFunc poly_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error("polynomial: expected a nonempty array of coordinate monomial lists");
  PolyFunc g;
  g.input_dim = -1;
  for (std::size_t c = 0; c < j.size(); ++c) {
    if (!j[c].is_array()) throw Error("polynomial: coordinate " + std::to_string(c) + " is not an array of monomials");
    std::vector<Monomial> monos;
    for (std::size_t m = 0; m < j[c].size(); ++m) {
      const json& mono = j[c][m];
      Monomial out;
      out.coeff = detail::expect_field(mono, "c", "monomial").get<double>();
      const json& exps = detail::expect_field(mono, "e", "monomial");
      if (!exps.is_array()) throw Error("monomial: \"e\" must be an array of nonnegative integers");
      for (const json& e : exps) {
        if (!e.is_number_integer() || e.get<int>() < 0)
          throw Error("monomial: exponents must be nonnegative integers");
        out.exponents.push_back(e.get<int>());
      }
      if (g.input_dim < 0) g.input_dim = static_cast<int>(out.exponents.size());
      if (static_cast<int>(out.exponents.size()) != g.input_dim)
        throw Error("polynomial: inconsistent exponent vector lengths (" + std::to_string(out.exponents.size()) +
                    " vs " + std::to_string(g.input_dim) + ")");
      monos.push_back(std::move(out));
    }
    g.coordinates.push_back(std::move(monos));
  }
  if (g.input_dim < 0)
    throw Error("polynomial: cannot infer input dimension from a map with no monomials");
  return g;
}

inline json setmap_to_json(const SetValuedMap& f) {
  json j;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SingletonOf>) {
          j["kind"] = "singleton";
          j["point"] = poly_to_json(v.point);
        } else if constexpr (std::is_same_v<T, BallOf>) {
          j["kind"] = "ball";
          j["center"] = poly_to_json(v.center);
          j["radius"] = v.radius;
        } else {
          j["kind"] = "vpolytope";
          json gens = json::array();
          for (const PolyFunc& g : v.generators) gens.push_back(poly_to_json(g));
          j["generators"] = std::move(gens);
        }
      },
      f);
  return j;
}

inline SetValuedMap setmap_from_json(const json& j) {
  const std::string kind = detail::expect_field(j, "kind", "set-valued map").get<std::string>();
  if (kind == "singleton") return SingletonOf{poly_from_json(detail::expect_field(j, "point", "singleton map"))};
  if (kind == "ball") {
    BallOf b;
    b.center = poly_from_json(detail::expect_field(j, "center", "ball map"));
    b.radius = detail::expect_field(j, "radius", "ball map").get<double>();
    if (b.radius < 0) throw Error("ball map: radius must be >= 0");
    return b;
  }
  if (kind == "vpolytope") {
    const json& gens = detail::expect_field(j, "generators", "vpolytope map");
    if (!gens.is_array() || gens.empty()) throw Error("vpolytope map: expected a nonempty generator array");
    VPolytopeOf v;
    for (const json& g : gens) v.generators.push_back(poly_from_json(g));
    for (const PolyFunc& g : v.generators) {
      if (g.input_dim != v.generators.front().input_dim ||
          g.output_dim() != v.generators.front().output_dim())
        throw Error("vpolytope map: generators must share input and output dimensions");
    }
    return v;
  }
  throw Error("set-valued map: unknown kind \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// Files

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("failed to parse " + path + ": " + e.what());
  }
}

inline void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error("failed while writing " + path);
}

}  // namespace butkit
