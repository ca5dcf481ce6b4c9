#pragma once

// Test-only oracles. Everything here is deliberately independent of the
// series/finite-part machinery it is used to check: integration is plain
// adaptive Simpson after a power substitution that removes the endpoint
// singularity, and the Rodrigues forms come from repeated product-rule
// differentiation, not from the operator product.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <stdexcept>

#include "finpart/complex_param.hpp"
#include "finpart/polynomial.hpp"

namespace oracles {

using finpart::Cplx;
using finpart::Polynomial;

// ---- frozen reference values (25-digit evaluations, rounded) ----
inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kGamma15 = 0.88622692545275801365;   // Gamma(3/2)
inline constexpr double kGammaM05 = -3.5449077018110320546;  // Gamma(-1/2)
inline constexpr double kGammaM15 = 2.3632718012073547031;   // Gamma(-3/2)
inline constexpr double kPiOver8 = 0.39269908169872415481;
inline const Cplx kGamma2p3i{-0.082395272665611883674, 0.091774287435259314596};
inline const Cplx kGamma3p3i{-0.44011340763700171113, -0.06363724312631702183};
inline const Cplx kGammaM03p07i{-0.84835962739534072294, -0.53024136947899728874};
inline const Cplx kGammaHalfPlusHalfI{0.81816399954174739408, -0.76331382871398261667};
inline constexpr double kLowerInc05 = 1.4936482656248540508;  // int_0^1 t^-1/2 e^-t
inline constexpr double kLowerInc15 = 0.3789446916409847038;  // int_0^1 t^1/2 e^-t
inline constexpr double kUpperInc15 = 0.50728223381177330985; // int_1^inf t^1/2 e^-t
inline constexpr double kHalfCauchyAtM1 = 0.42916042925878085686; // int_0^inf t^1/2 e^-t/(t+1)
inline constexpr double kBeta40x605 = 2.3459499504860866284e-30;  // B(40, 60.5)
inline const Cplx kBetaCplxBig{3.6311711647692624938e-9, -5.4762342078517245524e-9};
// B(12.5+3i, 14-2i)

// ---- adaptive Simpson on a finite interval ----
namespace detail {
inline Cplx simpson_rec(const std::function<Cplx(double)>& f, double a,
                        Cplx fa, double m, Cplx fm, double b, Cplx fb,
                        Cplx whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const Cplx flm = f(lm), frm = f(rm);
  const Cplx left = (fa + 4.0 * flm + fm) * ((m - a) / 6.0);
  const Cplx right = (fm + 4.0 * frm + fb) * ((b - m) / 6.0);
  const Cplx both = left + right;
  if (depth <= 0 || std::abs(both - whole) <= 15.0 * tol)
    return both + (both - whole) / 15.0;
  return simpson_rec(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}
} // namespace detail

inline Cplx simpson(const std::function<Cplx(double)>& f, double a, double b,
                    double tol = 1e-12, int depth = 48) {
  const double m = 0.5 * (a + b);
  const Cplx fa = f(a), fm = f(m), fb = f(b);
  const Cplx whole = (fa + 4.0 * fm + fb) * ((b - a) / 6.0);
  return detail::simpson_rec(f, a, fa, m, fm, b, fb, whole, tol, depth);
}

// int_0^X t^alpha g(t) dt for Re alpha > -1, via t = u^k with k chosen so
// the transformed integrand vanishes at 0 like u^3 at least.
inline Cplx endpoint_integral(Cplx alpha, const std::function<Cplx(double)>& g,
                              double X, double tol = 1e-12) {
  const double sig = alpha.real();
  if (sig <= -1.0) throw std::invalid_argument("endpoint_integral: Re alpha <= -1");
  const int k = std::max(1, int(std::ceil(4.0 / (sig + 1.0))));
  auto h = [&](double u) -> Cplx {
    if (u <= 0.0) return Cplx(0.0);
    const double t = std::pow(u, double(k));
    return double(k) * std::exp((double(k) * alpha + double(k - 1)) * std::log(u)) *
           g(t);
  };
  return simpson(h, 0.0, std::pow(X, 1.0 / double(k)), tol);
}

// Convergent int_0^inf t^alpha p(t) e^-t dt, Re alpha > -1.
inline Cplx classical_halfline(const Polynomial& p, Cplx alpha,
                               double tol = 1e-12) {
  auto weighted = [&](double t) { return p(Cplx(t)) * std::exp(-t); };
  Cplx total = endpoint_integral(alpha, weighted, 1.0, tol);
  auto far = [&](double t) {
    return std::exp(alpha * std::log(t) - t) * p(Cplx(t));
  };
  double T = 50.0 + 3.0 * std::max(0, p.degree());
  total += simpson(far, 1.0, T, tol);
  return total;
}

// Convergent int_0^1 t^alpha (1-t)^beta p(t) dt, Re alpha, Re beta > -1.
inline Cplx classical_unit(const Polynomial& p, Cplx alpha, Cplx beta,
                           double tol = 1e-12) {
  auto left = [&](double t) {
    return std::exp(beta * std::log(1.0 - t)) * p(Cplx(t));
  };
  auto right = [&](double s) { // s = 1-t
    return std::exp(alpha * std::log(1.0 - s)) * p(Cplx(1.0 - s));
  };
  return endpoint_integral(alpha, left, 0.5, tol) +
         endpoint_integral(beta, right, 0.5, tol);
}

// ---- Rodrigues forms by repeated product-rule differentiation ----
//
// Laguerre: track d^k/dx^k [x^{n+a} e^-x] = q_k(x) x^{n+a-k} e^-x,
//   q_{k+1} = x q' + (a_k - x) q  with a_k the current exponent.
inline Polynomial rodrigues_laguerre(int n, Cplx alpha) {
  Polynomial q = Polynomial::constant(Cplx(1.0));
  Cplx a = alpha + double(n);
  for (int k = 0; k < n; ++k) {
    q = q.derivative().shifted_up(1) + a * q - q.shifted_up(1);
    a -= 1.0;
  }
  return q;
}

// Jacobi: d^k/dx^k [x^{n+a}(1-x)^{n+b}] = q_k x^{n+a-k} (1-x)^{n+b-k},
//   q_{k+1} = (x - x^2) q' + (a_k - (a_k + b_k) x) q.
inline Polynomial rodrigues_jacobi(int n, Cplx alpha, Cplx beta) {
  Polynomial q = Polynomial::constant(Cplx(1.0));
  Cplx a = alpha + double(n), b = beta + double(n);
  for (int k = 0; k < n; ++k) {
    const Polynomial dq = q.derivative();
    q = dq.shifted_up(1) - dq.shifted_up(2) + a * q - (a + b) * q.shifted_up(1);
    a -= 1.0;
    b -= 1.0;
  }
  return q;
}

// ---- random draws ----
inline Cplx random_param(std::mt19937_64& rng, double re_lo, double re_hi,
                         double im_max, finpart::PoleSet set,
                         double min_dist = 0.1) {
  std::uniform_real_distribution<double> ure(re_lo, re_hi);
  std::uniform_real_distribution<double> uim(-im_max, im_max);
  for (;;) {
    const Cplx z(ure(rng), uim(rng));
    if (finpart::pole_distance(z, set) >= min_dist) return z;
  }
}

inline Polynomial random_poly(std::mt19937_64& rng, int max_degree,
                              double box = 2.0) {
  std::uniform_int_distribution<int> ud(0, max_degree);
  std::uniform_real_distribution<double> uc(-box, box);
  const int d = ud(rng);
  std::vector<Cplx> c(size_t(d) + 1);
  for (auto& x : c) x = Cplx(uc(rng), uc(rng));
  if (c.back() == Cplx(0.0)) c.back() = Cplx(1.0);
  return Polynomial(std::move(c));
}

} // namespace oracles
