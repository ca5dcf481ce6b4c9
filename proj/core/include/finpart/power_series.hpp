#pragma once

#include <optional>
#include <vector>

#include "finpart/complex_param.hpp"
#include "finpart/polynomial.hpp"

namespace finpart {

/// Adaptive expansions are capped at this many terms.
inline constexpr int series_cap = 512;

/// Truncated Taylor series
///   f(t) = sum_n coeffs[n] * ((t - center)/scale)^n
/// with bookkeeping:
///   radius      guaranteed radius of analyticity around center (t units)
///   eval_radius the tail_bound is valid for |t - center| <= eval_radius
///   tail_bound  upper bound on the discarded tail there
/// The scale keeps coefficient magnitudes tame when the natural Taylor
/// coefficients would over- or underflow (Cauchy kernels near a cut).
class PowerSeries {
public:
  PowerSeries(Cplx center, std::vector<Cplx> coeffs, double radius,
              double eval_radius, double tail_bound, double scale = 1.0);

  Cplx center() const noexcept { return center_; }
  const std::vector<Cplx>& coeffs() const noexcept { return coeffs_; }
  double radius() const noexcept { return radius_; }
  double eval_radius() const noexcept { return eval_radius_; }
  double tail_bound() const noexcept { return tail_bound_; }
  double scale() const noexcept { return scale_; }
  int terms() const noexcept { return int(coeffs_.size()); }

  /// Taylor coefficient of (t - center)^n (descaled).
  Cplx taylor_coeff(int n) const;

  /// Horner evaluation; RadiusError outside the radius of analyticity.
  /// The additive error estimate is tail_bound, valid inside eval_radius.
  Cplx eval(Cplx t) const;

private:
  Cplx center_;
  std::vector<Cplx> coeffs_;
  double radius_;
  double eval_radius_;
  double tail_bound_;
  double scale_;
};

/// e^{-t} about `center`, extended until the tail bound on
/// |t - center| <= r_eval drops below tol.
PowerSeries expand_exp_neg(Cplx center, double r_eval, double tol,
                           double scale = 1.0);

/// (1-t)^exponent about `center`, principal branch (real-positive on (0,1)).
/// Requires |center| + r_eval < 1.
PowerSeries expand_one_minus_t_pow(Cplx exponent, Cplx center, double r_eval,
                                   double tol, double scale = 1.0);

/// Cauchy kernel 1/(t - z) about 0; requires r_eval < |z|.
PowerSeries expand_cauchy_kernel(Cplx z, double r_eval, double tol,
                                 double scale = 1.0);

/// A polynomial viewed as an (exact) series about 0.
PowerSeries series_from_polynomial(const Polynomial& p, double r_eval,
                                   double scale = 1.0);

/// Product of two series with the same center and scale; keeps all
/// coefficients of the product of the truncations and combines tails.
PowerSeries multiply(const PowerSeries& f, const PowerSeries& g);

/// Negation (used for mirrored kernels).
PowerSeries negate(const PowerSeries& f);

enum class WeightFactorKind { exp_neg, one_minus_t_pow };

/// Fixed-length expansion of a weight factor: exactly N+1 coefficients of
/// e^{-t} or (1-t)^beta about `center`, tail bound on |t-center| <= r_eval
/// from the ratio test. `beta` is ignored for exp_neg.
PowerSeries expand_weight_factor(WeightFactorKind kind, Cplx beta, Cplx center,
                                 int N, double r_eval);

} // namespace finpart
