#pragma once

#include <stdexcept>
#include <string>

namespace butkit {

/// Base class for all butkit failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different spaces (point vs. set, map vs. complex, ...).
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A complex failed validation where a valid complex is required.
class InvalidComplexError : public Error {
 public:
  explicit InvalidComplexError(const std::string& what) : Error(what) {}
};

/// Minkowski difference requested for a variant pair it cannot represent.
class MinkowskiPairError : public Error {
 public:
  explicit MinkowskiPairError(const std::string& what) : Error(what) {}
};

/// The set-valued map admits no antipodal selection at some vertex pair,
/// i.e. F(x) and -F(A(x)) do not intersect there.  Names the pair so the
/// caller can report exactly where the hypothesis breaks.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(int vertex, int antipode, double gap, const std::string& what)
      : Error(what), vertex(vertex), antipode(antipode), gap(gap) {}
  int vertex;
  int antipode;
  double gap;
};

/// The piecewise-linear map had no zero at some refinement round.
class NoZeroError : public Error {
 public:
  NoZeroError(int round, const std::string& what) : Error(what), round(round) {}
  int round;
};

/// A map handed to the certifier is not exactly antipodal at the vertices.
class NotAntipodalError : public Error {
 public:
  explicit NotAntipodalError(const std::string& what) : Error(what) {}
};

}  // namespace butkit
