#pragma once

#include <string>
#include <variant>
#include <vector>

#include "butkit/convex.hpp"
#include "butkit/errors.hpp"
#include "butkit/vec.hpp"

namespace butkit {

/// c * x_0^{e_0} * ... * x_{n-1}^{e_{n-1}} over the ambient coordinates.
struct Monomial {
  double coeff = 0.0;
  std::vector<int> exponents;
};

/// Polynomial map R^n -> R^d, one monomial list per output coordinate.
/// Powers are evaluated by repeated multiplication and coordinates summed in
/// monomial order, so negating an odd map's argument negates the result
/// exactly in floating point.
struct PolyFunc {
  int input_dim = 0;
  std::vector<std::vector<Monomial>> coordinates;

  int output_dim() const { return static_cast<int>(coordinates.size()); }
};

inline Vec eval_poly(const PolyFunc& g, const Vec& x) {
  if (x.size() != g.input_dim)
    throw DimensionError("eval_poly: point has dimension " + std::to_string(x.size()) + ", map expects " +
                         std::to_string(g.input_dim));
  Vec out = Vec::Zero(g.output_dim());
  for (std::size_t c = 0; c < g.coordinates.size(); ++c) {
    double sum = 0.0;
    for (const Monomial& mono : g.coordinates[c]) {
      if (static_cast<int>(mono.exponents.size()) != g.input_dim)
        throw DimensionError("eval_poly: monomial exponent vector does not match input dimension");
      double term = mono.coeff;
      for (int i = 0; i < g.input_dim; ++i)
        for (int e = 0; e < mono.exponents[static_cast<std::size_t>(i)]; ++e) term *= x[i];
      sum += term;
    }
    out[static_cast<Eigen::Index>(c)] = sum;
  }
  return out;
}

struct SingletonOf {
  PolyFunc point;
};

struct BallOf {
  PolyFunc center;
  double radius = 0.0;
};

struct VPolytopeOf {
  std::vector<PolyFunc> generators;
};

/// Set-valued map F: M -> 2^{R^d} with polynomial coordinate data.
using SetValuedMap = std::variant<SingletonOf, BallOf, VPolytopeOf>;

inline int input_dim(const SetValuedMap& f) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SingletonOf>) return v.point.input_dim;
        if constexpr (std::is_same_v<T, BallOf>) return v.center.input_dim;
        if constexpr (std::is_same_v<T, VPolytopeOf>) return v.generators.front().input_dim;
      },
      f);
}

inline int output_dim(const SetValuedMap& f) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SingletonOf>) return v.point.output_dim();
        if constexpr (std::is_same_v<T, BallOf>) return v.center.output_dim();
        if constexpr (std::is_same_v<T, VPolytopeOf>) return v.generators.front().output_dim();
      },
      f);
}

/// Instantiates the convex value F(x).
inline ConvexSet eval_map(const SetValuedMap& f, const Vec& x) {
  return std::visit(
      [&](const auto& v) -> ConvexSet {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SingletonOf>) {
          return Singleton{eval_poly(v.point, x)};
        } else if constexpr (std::is_same_v<T, BallOf>) {
          return Ball{eval_poly(v.center, x), v.radius};
        } else {
          Mat g(v.generators.front().output_dim(), static_cast<Eigen::Index>(v.generators.size()));
          for (std::size_t i = 0; i < v.generators.size(); ++i)
            g.col(static_cast<Eigen::Index>(i)) = eval_poly(v.generators[i], x);
          return VPolytope{g};
        }
      },
      f);
}

/// Antipodal selection at one vertex pair: y with y in F(x) and -y in F(ax).
struct Selection {
  int vertex = -1;
  int antipode = -1;
  Vec y;
  double residual = 0.0;  // max membership distance of y in F(x) and -y in F(ax)
};

struct SelectResult {
  bool feasible = false;
  Selection selection;
  double gap = 0.0;  // distance estimate between F(x) and -F(ax) when infeasible
};

/// Chooses y in F(x) with -y in F(ax) by intersecting F(x) with -F(ax).
/// Infeasibility is data: it means F violates the antipodal-selection
/// hypothesis at this vertex pair, and the caller reports the pair.
inline SelectResult antipodal_select(const SetValuedMap& f, const Vec& x, const Vec& ax, double tol,
                                     int vertex = -1, int antipode = -1) {
  const ConvexSet at_x = eval_map(f, x);
  const ConvexSet at_ax = eval_map(f, ax);
  const IntersectResult hit = intersect_point(at_x, reflect(at_ax), tol);
  SelectResult out;
  out.gap = hit.gap;
  if (!hit.feasible) return out;
  out.feasible = true;
  out.selection.vertex = vertex;
  out.selection.antipode = antipode;
  out.selection.y = hit.point;
  out.selection.residual = std::max(distance(at_x, hit.point), distance(at_ax, -hit.point));
  return out;
}

}  // namespace butkit
