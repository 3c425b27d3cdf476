#pragma once

#include <Eigen/Dense>

namespace butkit {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Strict lexicographic order on coordinate vectors of equal length.
inline bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace butkit
