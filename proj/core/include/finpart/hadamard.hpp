#pragma once

#include <optional>
#include <vector>

#include "finpart/complex_param.hpp"
#include "finpart/polynomial.hpp"
#include "finpart/power_series.hpp"

namespace finpart {

/// Series evaluations stay inside this fraction of the guaranteed radius.
inline constexpr double safe_radius_fraction = 0.75;

/// Default absolute quadrature tolerance.
inline constexpr double default_tol = 1e-10;

/// Result of a finite-part evaluation: value, a conservative error
/// estimate (series tails plus quadrature estimates, added), and the
/// split points that were used.
struct FinitePart {
  Cplx value;
  double err_estimate = 0.0;
  std::vector<double> splits;
};

/// Optional Cauchy-kernel factor 1/(t - z) in the integrand.
struct CauchyKernel {
  Cplx z;
};

/// The diagonal operator on Taylor coefficients: f_n -> f_n/(n + alpha).
/// Requires a series centered at 0 and alpha off {0,-1,-2,...}; the tail
/// bound is scaled by 1/dist(alpha, -N).
PowerSeries j_alpha(const PowerSeries& f, const ComplexParam& alpha);

/// Finite part of int_0^x t^{alpha-1} f(t) dt  =  x^alpha (J_alpha f)(x),
/// principal branch of x^alpha. Requires |x| inside the safe fraction of
/// the series radius (and inside its eval radius, where the tail bound
/// holds). Coincides with the convergent integral for Re alpha > 0.
FinitePart finite_part_0x(const PowerSeries& f, const ComplexParam& alpha,
                          Cplx x);

/// Finite part of int_0^inf t^alpha p(t) e^{-t} [1/(t-z)] dt.
/// alpha must be off {-1,-2,...} (the exponent set of t^alpha); with a
/// kernel, z must be off [0, inf). Split at xi (1, or |z|/2 with kernel):
/// series finite part on [0, xi] plus adaptive quadrature on [xi, inf).
FinitePart finite_part_halfline(const Polynomial& p, const ComplexParam& alpha,
                                std::optional<CauchyKernel> kernel = {},
                                double tol = default_tol);

/// Finite part of int_0^1 t^alpha (1-t)^beta p(t) [1/(t-z)] dt, three-piece:
/// series finite part on [0, xi0], regular quadrature on [xi0, xi1], and a
/// mirrored series finite part on [xi1, 1] via t -> 1-t.
FinitePart finite_part_unit(const Polynomial& p, const ComplexParam& alpha,
                            const ComplexParam& beta,
                            std::optional<CauchyKernel> kernel = {},
                            double tol = default_tol);

/// Residual |FP int_0^x (t^alpha f)' dt - x^alpha f(x)| of the generalized
/// fundamental theorem of calculus; a test utility exposed as API.
double fp_fundamental_theorem_check(const PowerSeries& f,
                                    const ComplexParam& alpha, Cplx x);

/// Distance from z to [a, inf) and to [0, 1] (cut-proximity checks).
double dist_to_halfline(Cplx z, double a = 0.0) noexcept;
double dist_to_unit_interval(Cplx z) noexcept;

} // namespace finpart
