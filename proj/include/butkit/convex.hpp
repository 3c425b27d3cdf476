#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "butkit/errors.hpp"
#include "butkit/vec.hpp"

namespace butkit {

struct Singleton {
  Vec point;
};

struct Ball {
  Vec center;
  double radius = 0.0;
};

/// Convex hull of finitely many generator points (columns).
struct VPolytope {
  Mat generators;  // dim x generator count, at least one column
};

using ConvexSet = std::variant<Singleton, Ball, VPolytope>;

inline int dim(const ConvexSet& s) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Singleton>) return static_cast<int>(v.point.size());
        if constexpr (std::is_same_v<T, Ball>) return static_cast<int>(v.center.size());
        if constexpr (std::is_same_v<T, VPolytope>) return static_cast<int>(v.generators.rows());
      },
      s);
}

/// A canonical interior point, used to seed iterative schemes deterministically.
inline Vec representative(const ConvexSet& s) {
  return std::visit(
      [](const auto& v) -> Vec {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Singleton>) return v.point;
        if constexpr (std::is_same_v<T, Ball>) return v.center;
        if constexpr (std::is_same_v<T, VPolytope>) return v.generators.rowwise().mean();
      },
      s);
}

struct BarycentricSolution {
  Vec weights;
  double residual_norm = 0.0;
  double condition = 0.0;
  bool degenerate = false;
};

/// Weights t with sum 1 and sum t_k y_k = target, where the d+1 points y_k are
/// the columns of `points`.  Solved through the (d+1)x(d+1) system whose rows
/// are the point coordinates augmented by a row of ones.  Weights may be
/// negative; the caller interprets signs.  The degenerate flag reports a
/// 1-norm condition estimate beyond 1e12 (affinely dependent points), in which
/// case weights come from a least-squares fallback.
inline BarycentricSolution barycentric_coordinates(const Mat& points, const Vec& target) {
  const int d = static_cast<int>(points.rows());
  if (target.size() != d)
    throw DimensionError("barycentric_coordinates: target has dimension " + std::to_string(target.size()) +
                         ", points have dimension " + std::to_string(d));
  if (points.cols() != d + 1)
    throw DimensionError("barycentric_coordinates: need " + std::to_string(d + 1) + " points in R^" +
                         std::to_string(d) + ", got " + std::to_string(points.cols()));

  Mat system(d + 1, d + 1);
  system.topRows(d) = points;
  system.row(d).setOnes();
  Vec rhs(d + 1);
  rhs.head(d) = target;
  rhs[d] = 1.0;

  BarycentricSolution sol;
  Eigen::PartialPivLU<Mat> lu(system);
  const Mat inverse = lu.inverse();
  const double cond = system.cwiseAbs().colwise().sum().maxCoeff() * inverse.cwiseAbs().colwise().sum().maxCoeff();
  sol.condition = cond;
  if (!std::isfinite(cond) || cond > 1e12) {
    sol.degenerate = true;
    sol.weights = system.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  } else {
    sol.weights = lu.solve(rhs);
  }
  sol.residual_norm = (points * sol.weights - target).norm();
  return sol;
}

namespace detail {

/// Minimum-norm point of the convex hull of the columns of `q` (Wolfe's
/// method).  Maintains a corral of affinely independent generators; the
/// affine minimizer over the corral comes from the KKT system of
/// minimize |q_S a|^2 subject to sum a = 1.
inline Vec min_norm_point(const Mat& q, double tol) {
  const int m = static_cast<int>(q.cols());
  if (m == 1) return q.col(0);
  const double scale = std::max(1.0, q.colwise().squaredNorm().maxCoeff());

  int start = 0;
  for (int j = 1; j < m; ++j)
    if (q.col(j).squaredNorm() < q.col(start).squaredNorm()) start = j;

  std::vector<int> corral{start};
  Vec weights = Vec::Ones(1);
  Vec x = q.col(start);

  const auto affine_minimizer = [&](const std::vector<int>& idx) -> Vec {
    const int k = static_cast<int>(idx.size());
    Mat sub(q.rows(), k);
    for (int i = 0; i < k; ++i) sub.col(i) = q.col(idx[static_cast<std::size_t>(i)]);
    Mat kkt = Mat::Zero(k + 1, k + 1);
    kkt.topLeftCorner(k, k) = sub.transpose() * sub;
    kkt.topRightCorner(k, 1).setOnes();
    kkt.bottomLeftCorner(1, k).setOnes();
    Vec rhs = Vec::Zero(k + 1);
    rhs[k] = 1.0;
    const Vec sol = Eigen::CompleteOrthogonalDecomposition<Mat>(kkt).solve(rhs);
    return sol.head(k);
  };

  for (int major = 0; major < 1000; ++major) {
    // Most violating generator under the optimality test <x, q_j> >= |x|^2.
    int best = -1;
    double best_val = x.squaredNorm() - tol * scale;
    for (int j = 0; j < m; ++j) {
      const double val = x.dot(q.col(j));
      if (val < best_val - 1e-18) {
        best_val = val;
        best = j;
      }
    }
    if (best < 0) return x;
    if (std::find(corral.begin(), corral.end(), best) != corral.end()) return x;
    corral.push_back(best);
    Vec extended = Vec::Zero(static_cast<Eigen::Index>(corral.size()));
    extended.head(weights.size()) = weights;
    weights = extended;

    for (int minor = 0; minor < 1000; ++minor) {
      const Vec alpha = affine_minimizer(corral);
      if (alpha.minCoeff() > 1e-12) {
        weights = alpha;
        break;
      }
      // Step toward alpha until the first weight hits zero, then drop it.
      double theta = 1.0;
      for (int i = 0; i < alpha.size(); ++i)
        if (alpha[i] <= 1e-12 && weights[i] > alpha[i])
          theta = std::min(theta, weights[i] / (weights[i] - alpha[i]));
      weights = (1.0 - theta) * weights + theta * alpha;
      std::vector<int> kept;
      std::vector<double> kept_w;
      for (int i = 0; i < weights.size(); ++i) {
        if (weights[i] > 1e-12) {
          kept.push_back(corral[static_cast<std::size_t>(i)]);
          kept_w.push_back(weights[i]);
        }
      }
      if (kept.empty()) {
        kept.push_back(corral[0]);
        kept_w.push_back(1.0);
      }
      corral = kept;
      weights = Eigen::Map<Vec>(kept_w.data(), static_cast<Eigen::Index>(kept_w.size()));
      weights /= weights.sum();
    }

    x.setZero();
    for (std::size_t i = 0; i < corral.size(); ++i) x += weights[static_cast<Eigen::Index>(i)] * q.col(corral[i]);
  }
  return x;
}

}  // namespace detail

/// Euclidean nearest point of S to p (unique by convexity).
inline Vec project(const ConvexSet& s, const Vec& p) {
  if (dim(s) != p.size())
    throw DimensionError("project: point dimension " + std::to_string(p.size()) + " does not match set dimension " +
                         std::to_string(dim(s)));
  return std::visit(
      [&](const auto& v) -> Vec {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Singleton>) {
          return v.point;
        } else if constexpr (std::is_same_v<T, Ball>) {
          const Vec offset = p - v.center;
          const double n = offset.norm();
          if (n <= v.radius) return p;
          return v.center + (v.radius / n) * offset;
        } else {
          const Mat translated = v.generators.colwise() - p;
          return p + detail::min_norm_point(translated, 1e-10);
        }
      },
      s);
}

inline bool contains(const ConvexSet& s, const Vec& p, double tol) {
  if (dim(s) != p.size())
    throw DimensionError("contains: point dimension " + std::to_string(p.size()) + " does not match set dimension " +
                         std::to_string(dim(s)));
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Singleton>) {
          return (p - v.point).norm() <= tol;
        } else if constexpr (std::is_same_v<T, Ball>) {
          return (p - v.center).norm() <= v.radius + tol;
        } else {
          return (project(ConvexSet(v), p) - p).norm() <= tol;
        }
      },
      s);
}

/// Distance from p to S.
inline double distance(const ConvexSet& s, const Vec& p) { return (project(s, p) - p).norm(); }

/// Max over S of <x, u> for a unit direction u.
inline double support(const ConvexSet& s, const Vec& u) {
  if (dim(s) != u.size())
    throw DimensionError("support: direction dimension does not match set dimension");
  const double n = u.norm();
  if (n == 0.0) throw Error("support: zero direction");
  if (std::abs(n - 1.0) > 1e-9) throw Error("support: direction must be a unit vector");
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Singleton>) return v.point.dot(u);
        if constexpr (std::is_same_v<T, Ball>) return v.center.dot(u) + v.radius;
        if constexpr (std::is_same_v<T, VPolytope>) return (v.generators.transpose() * u).maxCoeff();
      },
      s);
}

/// Pointwise negation -S.
inline ConvexSet reflect(const ConvexSet& s) {
  return std::visit(
      [](const auto& v) -> ConvexSet {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Singleton>) return Singleton{-v.point};
        if constexpr (std::is_same_v<T, Ball>) return Ball{-v.center, v.radius};
        if constexpr (std::is_same_v<T, VPolytope>) return VPolytope{-v.generators};
      },
      s);
}

/// Minkowski difference Sa - Sb = { a - b : a in Sa, b in Sb }.  Exact for
/// singleton/ball/V-polytope pairs of like kind; a singleton promotes to the
/// other operand's kind.  Ball with V-polytope has no representation here.
inline ConvexSet minkowski_difference(const ConvexSet& sa, const ConvexSet& sb) {
  if (dim(sa) != dim(sb)) throw DimensionError("minkowski_difference: operand dimensions differ");
  const auto as_ball = [](const ConvexSet& s) -> Ball {
    if (std::holds_alternative<Singleton>(s)) return Ball{std::get<Singleton>(s).point, 0.0};
    return std::get<Ball>(s);
  };
  const auto as_polytope = [](const ConvexSet& s) -> VPolytope {
    if (std::holds_alternative<Singleton>(s)) {
      Mat g(std::get<Singleton>(s).point.size(), 1);
      g.col(0) = std::get<Singleton>(s).point;
      return VPolytope{g};
    }
    return std::get<VPolytope>(s);
  };

  const bool ball_a = std::holds_alternative<Ball>(sa);
  const bool ball_b = std::holds_alternative<Ball>(sb);
  const bool poly_a = std::holds_alternative<VPolytope>(sa);
  const bool poly_b = std::holds_alternative<VPolytope>(sb);
  if ((ball_a && poly_b) || (poly_a && ball_b)) throw MinkowskiPairError("unsupported Minkowski pair");

  if (!ball_a && !ball_b && !poly_a && !poly_b) {
    return Singleton{std::get<Singleton>(sa).point - std::get<Singleton>(sb).point};
  }
  if (ball_a || ball_b) {
    const Ball a = as_ball(sa);
    const Ball b = as_ball(sb);
    return Ball{a.center - b.center, a.radius + b.radius};
  }
  const VPolytope a = as_polytope(sa);
  const VPolytope b = as_polytope(sb);
  Mat diff(a.generators.rows(), a.generators.cols() * b.generators.cols());
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < a.generators.cols(); ++i)
    for (Eigen::Index j = 0; j < b.generators.cols(); ++j) diff.col(col++) = a.generators.col(i) - b.generators.col(j);
  return VPolytope{diff};
}

struct IntersectResult {
  bool feasible = false;
  Vec point;       // midpoint of the final iterate pair
  Vec point_a;     // final iterate on Sa
  Vec point_b;     // final iterate on Sb
  double gap = 0.0;
  int iterations = 0;
};

/// Common point of Sa and Sb by Dykstra's alternating projections, started
/// from the midpoint of the two representative points.  Converges to the
/// projection of the start onto the intersection, hence deterministic.  When
/// the sets are disjoint the iterate pair approaches the closest pair and the
/// gap stalls above tol; that is reported as infeasible, never thrown.
inline IntersectResult intersect_point(const ConvexSet& sa, const ConvexSet& sb, double tol = 1e-10,
                                       int max_iter = 10000) {
  if (dim(sa) != dim(sb)) throw DimensionError("intersect_point: operand dimensions differ");
  const Vec start = 0.5 * (representative(sa) + representative(sb));
  Vec x = start;
  Vec correction_a = Vec::Zero(x.size());
  Vec correction_b = Vec::Zero(x.size());
  Vec ya = x, yb = x;
  double gap = 0.0;
  double checkpoint_gap = std::numeric_limits<double>::infinity();

  int it = 0;
  while (it < max_iter) {
    ++it;
    const Vec za = x + correction_a;
    ya = project(sa, za);
    correction_a = za - ya;
    const Vec zb = ya + correction_b;
    yb = project(sb, zb);
    correction_b = zb - yb;
    x = yb;
    gap = (ya - yb).norm();
    if (gap <= tol)
      return IntersectResult{true, 0.5 * (ya + yb), ya, yb, gap, it};
    if (it % 64 == 0) {
      // No meaningful progress over a whole window: the gap has converged to
      // the (positive) distance between the sets.
      if (gap >= checkpoint_gap - 1e-12 * std::max(1.0, checkpoint_gap)) break;
      checkpoint_gap = gap;
    }
  }
  IntersectResult out;
  out.feasible = false;
  out.point = 0.5 * (ya + yb);
  out.point_a = ya;
  out.point_b = yb;
  out.gap = gap;
  out.iterations = it;
  return out;
}

}  // namespace butkit
