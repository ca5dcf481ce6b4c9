#pragma once

#include <span>
#include <vector>

#include "finpart/ortho.hpp"

namespace finpart {

/// Evaluation points must keep this distance from the cut.
inline constexpr double cut_guard = 1e-6;

/// A finite-part Cauchy transform (1/2pi i) FP int w(t) p(t)/(t-z) dt over
/// [0,inf) (Laguerre weight) or [0,1] (Jacobi weight).
struct CauchyTransform {
  OrthoFamily family;
  Polynomial p;
};

struct CauchyValue {
  Cplx value;
  double err = 0.0;
};

/// Evaluate the transform at z off the cut (distance >= cut_guard).
CauchyValue cauchy_eval(const CauchyTransform& ct, Cplx z,
                        double tol = default_tol);

/// Max over the samples of the residual of
///   phi' = (beta/z - 1) phi - a/z,   a = Gamma(beta+1)/(2 pi i),
/// for phi = C_beta[1] on the half-line; phi' by central differences with
/// one Richardson level, h = 1e-5 max(1,|z|).
double ode_residual_halfline(const ComplexParam& beta,
                             std::span<const Cplx> z_samples);

/// Same for the unit-interval transform phi = C_{alpha,beta}[1]:
///   phi' = (alpha/z + beta/(z-1)) phi - a0/z + a1/(z-1)
/// with a0 = (alpha/2pi i) B(alpha, beta+1), a1 = (beta/2pi i) B(alpha+1, beta).
double ode_residual_unit(const ComplexParam& alpha, const ComplexParam& beta,
                         std::span<const Cplx> z_samples);

/// Data of the 2x2 Riemann-Hilbert solution
///   Y = [[pi_n, C[pi_n]], [c_n pi_{n-1}, c_n C[pi_{n-1}]]]
/// with monic pi_k and
///   Laguerre: c_n = -2 pi i / ((n-1)! Gamma(alpha+n))
///   Jacobi:   c_n = (-1)^n 2 pi i C_{n-1} / ((n-1)! B(alpha+n, beta+n)).
struct RHSolution {
  OrthoFamily family;
  int n;
  Polynomial pi_n;
  Polynomial pi_nm1;
  Cplx c_n;
};

RHSolution assemble_rh(const OrthoFamily& family, int n);

struct RHMatrix {
  Cplx y[2][2];
  double err[2][2];
};

/// Y(z) for z off the cut.
RHMatrix rh_eval(const RHSolution& sol, Cplx z, double tol = default_tol);

/// Jump-condition residual at an interior cut point x: evaluates
/// Y(x + i eps) - Y(x - i eps) J(x) along the eps ladder, extrapolates
/// eps -> 0 (Neville) and returns the max matrix-entry magnitude.
double jump_residual(const RHSolution& sol, double x,
                     std::span<const double> eps_ladder = {});

/// Decay ratio test of condition (III_inf): samples Y on circles |z| in
/// radii (8 angles, 0.2 rad margin off the cut), forms the deviations
///   |Y11 z^-n - 1|, |Y22 z^n - 1| (must decay like 1/|z|),
///   |Y12 z^{n+1}|, |Y21 z^{-n+1}| (must stay bounded),
/// and returns the worst normalized violation between consecutive radii;
/// <= 0 means the test passes (deviation halves, within factor 1.5, when
/// the radius doubles).
double asymptotic_residual(const RHSolution& sol,
                           std::span<const double> radii = {});

struct EndpointProbe {
  bool slope_fitted = false; ///< singular-exponent branch was taken
  double slope = 0.0;        ///< fitted log-log slope (slope_fitted only)
  double slope_stderr = 0.0; ///< least-squares standard error of the slope
  bool bounded_within = false; ///< values stayed within 10x of the median
  int usable_points = 0;
};

/// Approaches the endpoint along the ray arg = pi/2 from it and probes the
/// boundary behavior of Y12: fits the singular exponent when Re alpha
/// (resp. Re beta) < 0, otherwise checks boundedness.
EndpointProbe endpoint_exponent_probe(const RHSolution& sol, int endpoint,
                                      std::span<const double> t_ladder = {});

/// Residual |(-1/2pi i) B(t^{n-1}, c_n pi_{n-1}) - 1| by the moment route.
double second_row_normalization_check(const RHSolution& sol);

} // namespace finpart
