#pragma once

#include <functional>

#include "finpart/complex_param.hpp"

namespace finpart {

struct QuadResult {
  Cplx value;
  double err;
};

/// Adaptive Gauss-Kronrod (G7,K15) quadrature of a complex-valued integrand
/// on the finite interval [a, b], absolute tolerance tol. Deterministic for
/// fixed inputs. Throws QuadratureError when the tolerance is unreachable
/// within the subdivision budget.
QuadResult quad_regular(const std::function<Cplx(double)>& f, double a,
                        double b, double tol);

/// Semi-infinite variant for exponentially decaying integrands: the range
/// is truncated at a point T where probing |f| indicates the remainder is
/// below tol/10, then handled by the finite-range rule.
QuadResult quad_halfline(const std::function<Cplx(double)>& f, double a,
                         double tol);

/// Single (G7,K15) panel: value, embedded error estimate and the L1-ish
/// scale sum used for roundoff floors. Building block for the adaptive
/// drivers; exposed for tests.
void gk15_panel(const std::function<Cplx(double)>& f, double a, double b,
                Cplx& value, double& err, double& resabs);

} // namespace finpart
