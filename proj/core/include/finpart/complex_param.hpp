#pragma once

#include <complex>

#include "finpart/errors.hpp"

namespace finpart {

using Cplx = std::complex<double>;

/// Minimum distance a parameter must keep from its excluded integer set.
inline constexpr double pole_guard = 1e-8;

/// Excluded integer sets: {0,-1,-2,...} and {-1,-2,-3,...}.
enum class PoleSet { non_pos_ints, neg_ints };

/// Exact Euclidean distance from z to the nearest element of the set.
double pole_distance(Cplx z, PoleSet set) noexcept;

/// Distance from z to the nearest integer <= ceiling (e.g. -2 for the
/// Jacobi sum constraint alpha+beta not in {-2,-3,...}).
double distance_to_ints_below(Cplx z, int ceiling) noexcept;

/// A complex parameter bundled with its distance to the excluded set.
/// Construction enforces the pole guard, so a ComplexParam in hand is
/// always usable.
class ComplexParam {
public:
  ComplexParam(Cplx value, PoleSet set);

  Cplx value() const noexcept { return value_; }
  double dist() const noexcept { return dist_; }
  PoleSet set() const noexcept { return set_; }

  /// Parameter shifted by an integer, revalidated against the same set.
  ComplexParam shifted(int k) const { return ComplexParam(value_ + double(k), set_); }

private:
  Cplx value_;
  double dist_;
  PoleSet set_;
};

} // namespace finpart
