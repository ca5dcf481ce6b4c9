#include "finpart/hadamard.hpp"

#include <cmath>
#include <stdexcept>

#include "finpart/errors.hpp"
#include "finpart/quadrature.hpp"

namespace finpart {

namespace {

// t^a for real t > 0 on the principal branch.
Cplx rpow(double t, Cplx a) { return std::exp(a * std::log(t)); }

double poly_abs_bound(const Polynomial& p, double r) {
  double m = 0.0, rp = 1.0;
  for (const Cplx& c : p.coeffs()) {
    m += std::abs(c) * rp;
    rp *= r;
  }
  return m;
}

// Series expansion tolerance for a finite-part piece: the factor series
// are O(1), the polynomial's size enters through the product bound.
double series_tol(const Polynomial& p, double xi, double tol) {
  return 0.01 * tol / std::max(1.0, poly_abs_bound(p, xi));
}

// Upper bound on |int_T^inf t^Re(alpha) |p(t)| e^{-t} dt| for T past the
// hump: 2 e^{-T} sum_j |p_j| T^{sigma+j}, valid for T >= 2(sigma+deg)+4.
double halfline_tail_bound(const Polynomial& p, double sigma, double T) {
  double s = 0.0;
  for (int j = 0; j <= p.degree(); ++j)
    s += std::abs(p.coeff(j)) * std::pow(T, sigma + j);
  return 2.0 * std::exp(-T) * s;
}

} // namespace

double dist_to_halfline(Cplx z, double a) noexcept {
  if (z.real() >= a) return std::abs(z.imag());
  return std::abs(z - Cplx(a));
}

double dist_to_unit_interval(Cplx z) noexcept {
  if (z.real() < 0.0) return std::abs(z);
  if (z.real() > 1.0) return std::abs(z - Cplx(1.0));
  return std::abs(z.imag());
}

PowerSeries j_alpha(const PowerSeries& f, const ComplexParam& alpha) {
  if (f.center() != Cplx(0.0))
    throw std::logic_error("j_alpha: series must be centered at 0");
  if (alpha.set() != PoleSet::non_pos_ints)
    throw std::logic_error("j_alpha: alpha must be validated against -N");
  std::vector<Cplx> c = f.coeffs();
  for (size_t n = 0; n < c.size(); ++n) c[n] /= (double(n) + alpha.value());
  return PowerSeries(Cplx(0.0), std::move(c), f.radius(), f.eval_radius(),
                     f.tail_bound() / alpha.dist(), f.scale());
}

FinitePart finite_part_0x(const PowerSeries& f, const ComplexParam& alpha,
                          Cplx x) {
  if (x == Cplx(0.0)) return {Cplx(0.0), 0.0, {}};
  const double ax = std::abs(x);
  if (ax > safe_radius_fraction * f.radius() || ax > f.eval_radius())
    throw RadiusError("finite_part_0x: evaluation point outside the safe disk");
  const PowerSeries jf = j_alpha(f, alpha);
  const Cplx xa = std::pow(x, alpha.value());
  return {xa * jf.eval(x), std::abs(xa) * jf.tail_bound(), {}};
}

FinitePart finite_part_halfline(const Polynomial& p, const ComplexParam& alpha,
                                std::optional<CauchyKernel> kernel,
                                double tol) {
  if (alpha.set() != PoleSet::neg_ints)
    throw std::logic_error("finite_part_halfline: alpha must be validated against Z_-");
  if (kernel && dist_to_halfline(kernel->z) < 1e-12)
    throw CutProximityError("finite_part_halfline: kernel point on [0, inf)");
  if (p.is_zero()) return {Cplx(0.0), 0.0, {}};

  const double xi = kernel ? std::min(1.0, 0.5 * std::abs(kernel->z)) : 1.0;
  const double stol = series_tol(p, xi, tol);

  // series piece on [0, xi]: density g(t) = p(t) e^{-t} [1/(t-z)]
  PowerSeries g = multiply(series_from_polynomial(p, xi, xi),
                           expand_exp_neg(Cplx(0.0), xi, stol, xi));
  if (kernel) g = multiply(g, expand_cauchy_kernel(kernel->z, xi, stol, xi));
  // dist(alpha+1, -N) equals dist(alpha, Z_-), so this cannot throw
  const ComplexParam shifted(alpha.value() + 1.0, PoleSet::non_pos_ints);
  const FinitePart fp0 = finite_part_0x(g, shifted, Cplx(xi));

  // truncation point for the regular piece
  const double sigma = alpha.value().real();
  double T = std::max(2.0 * (sigma + p.degree()) + 20.0, xi + 10.0);
  const double kdist = kernel ? dist_to_halfline(kernel->z, xi) : 1.0;
  auto tail = [&](double t) { return halfline_tail_bound(p, sigma, t) / kdist; };
  while (tail(T) > 0.1 * tol) T += 5.0;

  const Cplx z = kernel ? kernel->z : Cplx(0.0);
  const bool with_kernel = kernel.has_value();
  auto integrand = [&p, alpha, z, with_kernel](double t) {
    Cplx v = rpow(t, alpha.value()) * std::exp(-t) * p(Cplx(t));
    if (with_kernel) v /= (Cplx(t) - z);
    return v;
  };
  const QuadResult mid = quad_regular(integrand, xi, T, tol);

  return {fp0.value + mid.value, fp0.err_estimate + mid.err + tail(T), {xi}};
}

FinitePart finite_part_unit(const Polynomial& p, const ComplexParam& alpha,
                            const ComplexParam& beta,
                            std::optional<CauchyKernel> kernel, double tol) {
  if (alpha.set() != PoleSet::neg_ints || beta.set() != PoleSet::neg_ints)
    throw std::logic_error("finite_part_unit: exponents must be validated against Z_-");
  if (kernel && dist_to_unit_interval(kernel->z) < 1e-12)
    throw CutProximityError("finite_part_unit: kernel point on [0, 1]");
  if (p.is_zero()) return {Cplx(0.0), 0.0, {}};

  const Cplx z = kernel ? kernel->z : Cplx(0.0);
  const double xi0 = kernel ? std::min(0.25, 0.5 * std::abs(z)) : 0.25;
  const double xi1 = kernel ? std::max(0.75, 1.0 - 0.5 * std::abs(1.0 - z)) : 0.75;
  if (!(xi0 < xi1))
    throw CutProximityError("finite_part_unit: split points collapsed");
  const double stol = series_tol(p, 1.0, tol);

  // [0, xi0]: g0(t) = (1-t)^beta p(t) [1/(t-z)]
  PowerSeries g0 =
      multiply(series_from_polynomial(p, xi0, xi0),
               expand_one_minus_t_pow(beta.value(), Cplx(0.0), xi0, stol, xi0));
  if (kernel) g0 = multiply(g0, expand_cauchy_kernel(z, xi0, stol, xi0));
  const ComplexParam alpha1(alpha.value() + 1.0, PoleSet::non_pos_ints);
  const FinitePart fpA = finite_part_0x(g0, alpha1, Cplx(xi0));

  // [xi0, xi1]: regular
  const bool with_kernel = kernel.has_value();
  auto integrand = [&p, alpha, beta, z, with_kernel](double t) {
    Cplx v = rpow(t, alpha.value()) * rpow(1.0 - t, beta.value()) * p(Cplx(t));
    if (with_kernel) v /= (Cplx(t) - z);
    return v;
  };
  const QuadResult mid = quad_regular(integrand, xi0, xi1, tol);

  // [xi1, 1] mirrored through s = 1-t:
  //   int FP_0^{1-xi1} s^beta (1-s)^alpha p(1-s) [1/((1-z)-s)] ds
  const double s1 = 1.0 - xi1;
  const Polynomial q = p.compose_one_minus_x();
  PowerSeries g1 =
      multiply(series_from_polynomial(q, s1, s1),
               expand_one_minus_t_pow(alpha.value(), Cplx(0.0), s1, stol, s1));
  if (kernel)
    g1 = multiply(g1, negate(expand_cauchy_kernel(1.0 - z, s1, stol, s1)));
  const ComplexParam beta1(beta.value() + 1.0, PoleSet::non_pos_ints);
  const FinitePart fpC = finite_part_0x(g1, beta1, Cplx(s1));

  return {fpA.value + mid.value + fpC.value,
          fpA.err_estimate + mid.err + fpC.err_estimate,
          {xi0, xi1}};
}

double fp_fundamental_theorem_check(const PowerSeries& f,
                                    const ComplexParam& alpha, Cplx x) {
  // d/dt [t^a f] = t^{a-1} (a f + t f'), whose scaled coefficients are
  // (n + a) c_n; run that density through the finite-part route and
  // compare against x^a f(x) directly.
  std::vector<Cplx> c = f.coeffs();
  for (size_t n = 0; n < c.size(); ++n) c[n] *= (double(n) + alpha.value());
  const PowerSeries g(f.center(), std::move(c), f.radius(), f.eval_radius(),
                      f.tail_bound() * (std::abs(alpha.value()) + double(f.terms())),
                      f.scale());
  const FinitePart lhs = finite_part_0x(g, alpha, x);
  const Cplx rhs = std::pow(x, alpha.value()) * f.eval(x);
  return std::abs(lhs.value - rhs);
}

} // namespace finpart
