#pragma once

#include <stdexcept>
#include <string>

namespace finpart {

/// Argument sits on (or too close to) a pole of the underlying function.
class PoleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Evaluation point outside the disk on which a series is trusted.
class RadiusError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Adaptive series extension hit its length cap before reaching tolerance.
class TruncationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Jacobi leading coefficient vanishes at this degree; no monic normalization.
class DegenerateDegreeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Evaluation point too close to the branch cut.
class CutProximityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Too few usable samples for a regression/extrapolation fit.
class FitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (complex numbers, polynomials, ...).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A run configuration violates a documented precondition.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace finpart
