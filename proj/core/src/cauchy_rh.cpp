#include "finpart/cauchy_rh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "finpart/errors.hpp"
#include "finpart/special.hpp"

namespace finpart {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const Cplx kTwoPiI(0.0, 2.0 * kPi);

double cut_distance(const OrthoFamily& family, Cplx z) {
  return family.kind() == FamilyKind::laguerre ? dist_to_halfline(z)
                                               : dist_to_unit_interval(z);
}

// Polynomial-in-eps extrapolation to 0 through (xs[i], ys[i]).
Cplx neville_to_zero(std::span<const double> xs, std::span<const Cplx> ys) {
  std::vector<Cplx> w(ys.begin(), ys.end());
  const size_t n = w.size();
  for (size_t lvl = 1; lvl < n; ++lvl)
    for (size_t i = 0; i + lvl < n; ++i)
      w[i] = (xs[i + lvl] * w[i] - xs[i] * w[i + 1]) / (xs[i + lvl] - xs[i]);
  return w[0];
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= double(k);
  return f;
}

Cplx weight_on_cut(const OrthoFamily& family, double x) {
  const Cplx a = family.alpha().value();
  if (family.kind() == FamilyKind::laguerre)
    return std::exp(a * std::log(x) - x);
  const Cplx b = family.beta().value();
  return std::exp(a * std::log(x) + b * std::log(1.0 - x));
}

struct DerivativeSamples {
  Cplx at_z, deriv;
};

// Central differences with one Richardson level; phi must be analytic at z.
template <typename F>
DerivativeSamples differentiate(F&& phi, Cplx z) {
  const double h = 1e-5 * std::max(1.0, std::abs(z));
  const auto d = [&](double hh) {
    return (phi(z + Cplx(hh)) - phi(z - Cplx(hh))) / (2.0 * hh);
  };
  const Cplx d1 = d(h);
  const Cplx d2 = d(0.5 * h);
  return {phi(z), (4.0 * d2 - d1) / 3.0};
}

} // namespace

CauchyValue cauchy_eval(const CauchyTransform& ct, Cplx z, double tol) {
  if (cut_distance(ct.family, z) < cut_guard)
    throw CutProximityError("cauchy_eval: z within cut guard");
  FinitePart fp =
      ct.family.kind() == FamilyKind::laguerre
          ? finite_part_halfline(ct.p, ct.family.alpha(), CauchyKernel{z}, tol)
          : finite_part_unit(ct.p, ct.family.alpha(), ct.family.beta(),
                             CauchyKernel{z}, tol);
  return {fp.value / kTwoPiI, fp.err_estimate / (2.0 * kPi)};
}

double ode_residual_halfline(const ComplexParam& beta,
                             std::span<const Cplx> z_samples) {
  const OrthoFamily fam = OrthoFamily::laguerre(beta.value());
  const CauchyTransform ct{fam, Polynomial::constant(Cplx(1.0))};
  const Cplx a = gamma(beta.value() + 1.0) / kTwoPiI;
  double worst = 0.0;
  for (Cplx z : z_samples) {
    const auto s = differentiate(
        [&](Cplx w) { return cauchy_eval(ct, w, 1e-13).value; }, z);
    const Cplx res = s.deriv - (beta.value() / z - 1.0) * s.at_z + a / z;
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

double ode_residual_unit(const ComplexParam& alpha, const ComplexParam& beta,
                         std::span<const Cplx> z_samples) {
  const Cplx av = alpha.value(), bv = beta.value();
  const OrthoFamily fam = OrthoFamily::jacobi(av, bv);
  const CauchyTransform ct{fam, Polynomial::constant(Cplx(1.0))};
  // a0 = (alpha/2pi i) B(alpha, beta+1), a1 = (beta/2pi i) B(alpha+1, beta),
  // computed in the pole-free form alpha B(alpha, beta+1)
  //  = Gamma(alpha+1)Gamma(beta+1)/Gamma(alpha+beta+1)  (= beta B(alpha+1,beta)).
  const Cplx shared =
      gamma(av + 1.0) * gamma(bv + 1.0) * gamma_reciprocal(av + bv + 1.0);
  const Cplx a0 = shared / kTwoPiI;
  const Cplx a1 = shared / kTwoPiI;
  double worst = 0.0;
  for (Cplx z : z_samples) {
    const auto s = differentiate(
        [&](Cplx w) { return cauchy_eval(ct, w, 1e-13).value; }, z);
    const Cplx res = s.deriv - (av / z + bv / (z - 1.0)) * s.at_z + a0 / z -
                     a1 / (z - 1.0);
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

RHSolution assemble_rh(const OrthoFamily& family, int n) {
  if (n < 1) throw ValidationError("assemble_rh: n must be >= 1");
  Polynomial pn = orthogonal_polynomial(family, n, Normalization::monic);
  Polynomial pm = orthogonal_polynomial(family, n - 1, Normalization::monic);
  Cplx cn;
  if (family.kind() == FamilyKind::laguerre) {
    cn = -kTwoPiI / (factorial(n - 1) * gamma(family.alpha().value() + double(n)));
  } else {
    const Cplx a = family.alpha().value(), b = family.beta().value();
    const Cplx cn1 = leading_coefficient(family, n - 1);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    cn = sign * kTwoPiI * cn1 /
         (factorial(n - 1) * beta(a + double(n), b + double(n)));
  }
  return {family, n, std::move(pn), std::move(pm), cn};
}

RHMatrix rh_eval(const RHSolution& sol, Cplx z, double tol) {
  const CauchyValue c1 = cauchy_eval({sol.family, sol.pi_n}, z, tol);
  const CauchyValue c2 = cauchy_eval({sol.family, sol.pi_nm1}, z, tol);
  RHMatrix m;
  m.y[0][0] = sol.pi_n(z);
  m.y[0][1] = c1.value;
  m.y[1][0] = sol.c_n * sol.pi_nm1(z);
  m.y[1][1] = sol.c_n * c2.value;
  m.err[0][0] = 0.0;
  m.err[0][1] = c1.err;
  m.err[1][0] = 0.0;
  m.err[1][1] = std::abs(sol.c_n) * c2.err;
  return m;
}

double jump_residual(const RHSolution& sol, double x,
                     std::span<const double> eps_ladder) {
  static constexpr double kDefaultLadder[3] = {1e-2, 1e-3, 1e-4};
  if (eps_ladder.empty()) eps_ladder = kDefaultLadder;
  const bool halfline = sol.family.kind() == FamilyKind::laguerre;
  if (x < 0.05 || (!halfline && x > 0.95))
    throw ValidationError("jump_residual: x too close to an endpoint");
  for (double e : eps_ladder)
    if (e < cut_guard)
      throw CutProximityError("jump_residual: eps ladder goes below the cut guard");

  const Cplx w = weight_on_cut(sol.family, x);
  std::vector<Cplx> defect[2][2];
  for (double e : eps_ladder) {
    const RHMatrix yp = rh_eval(sol, Cplx(x, e), 1e-11);
    const RHMatrix ym = rh_eval(sol, Cplx(x, -e), 1e-11);
    // D = Y+ - Y- J with J = [[1, w],[0, 1]]
    defect[0][0].push_back(yp.y[0][0] - ym.y[0][0]);
    defect[0][1].push_back(yp.y[0][1] - (ym.y[0][0] * w + ym.y[0][1]));
    defect[1][0].push_back(yp.y[1][0] - ym.y[1][0]);
    defect[1][1].push_back(yp.y[1][1] - (ym.y[1][0] * w + ym.y[1][1]));
  }
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      worst = std::max(
          worst, std::abs(neville_to_zero(eps_ladder, defect[i][j])));
  return worst;
}

double asymptotic_residual(const RHSolution& sol,
                           std::span<const double> radii) {
  static constexpr double kDefaultRadii[3] = {25.0, 50.0, 100.0};
  if (radii.empty()) radii = kDefaultRadii;
  for (double r : radii)
    if (r < 10.0) throw ValidationError("asymptotic_residual: radii must be >= 10");

  constexpr int kAngles = 8;
  constexpr double kMargin = 0.2; // rad, off the positive real axis
  const int n = sol.n;
  struct Devs {
    double d11 = 0.0, d12 = 0.0, d21 = 0.0, d22 = 0.0;
  };
  std::vector<Devs> per_radius;
  for (double r : radii) {
    Devs d;
    for (int k = 0; k < kAngles; ++k) {
      const double th =
          kMargin + (2.0 * kPi - 2.0 * kMargin) * double(k) / double(kAngles - 1);
      const Cplx z = r * std::exp(Cplx(0.0, th));
      const RHMatrix y = rh_eval(sol, z, 1e-13);
      const Cplx zn = std::pow(z, double(n));
      d.d11 = std::max(d.d11, std::abs(y.y[0][0] / zn - 1.0));
      d.d22 = std::max(d.d22, std::abs(y.y[1][1] * zn - 1.0));
      d.d12 = std::max(d.d12, std::abs(y.y[0][1] * zn * z));
      d.d21 = std::max(d.d21, std::abs(y.y[1][0] / zn * z));
    }
    per_radius.push_back(d);
  }

  // Between consecutive radii r -> R the decaying deviations must shrink
  // by R/r within factor 1.5; the bounded ones must not grow past 1.5x.
  constexpr double kNoiseFloor = 1e-9;
  double worst = -1.0;
  for (size_t i = 0; i + 1 < per_radius.size(); ++i) {
    const double growth = radii[i + 1] / radii[i];
    const auto check = [&](double d_small, double d_big, double required) {
      if (d_small <= kNoiseFloor && d_big <= kNoiseFloor) return;
      const double achieved = d_small / std::max(d_big, kNoiseFloor);
      worst = std::max(worst, (required - achieved) / required);
    };
    check(per_radius[i].d11, per_radius[i + 1].d11, growth / 1.5);
    check(per_radius[i].d22, per_radius[i + 1].d22, growth / 1.5);
    check(per_radius[i].d12, per_radius[i + 1].d12, 1.0 / 1.5);
    check(per_radius[i].d21, per_radius[i + 1].d21, 1.0 / 1.5);
  }
  return worst;
}

EndpointProbe endpoint_exponent_probe(const RHSolution& sol, int endpoint,
                                      std::span<const double> t_ladder) {
  static constexpr double kDefaultLadder[5] = {1e-2, 3.1622776601683794e-3,
                                               1e-3, 3.1622776601683794e-4,
                                               1e-4};
  if (t_ladder.empty()) t_ladder = kDefaultLadder;
  const bool halfline = sol.family.kind() == FamilyKind::laguerre;
  if (endpoint != 0 && endpoint != 1)
    throw ValidationError("endpoint_exponent_probe: endpoint must be 0 or 1");
  if (endpoint == 1 && halfline)
    throw ValidationError("endpoint_exponent_probe: half-line weight has no endpoint 1");
  for (size_t i = 0; i + 1 < t_ladder.size(); ++i)
    if (!(t_ladder[i] > t_ladder[i + 1]))
      throw ValidationError("endpoint_exponent_probe: ladder must decrease");
  if (t_ladder.back() < 1e-4)
    throw ValidationError("endpoint_exponent_probe: ladder must stay >= 1e-4");

  const Cplx exponent = endpoint == 0 ? sol.family.alpha().value()
                                      : sol.family.beta().value();
  const Cplx base(double(endpoint), 0.0);
  const CauchyTransform ct{sol.family, sol.pi_n};
  std::vector<Cplx> values;
  for (double t : t_ladder)
    values.push_back(cauchy_eval(ct, base + Cplx(0.0, t), 1e-12).value);

  EndpointProbe probe;
  if (exponent.real() < 0.0) {
    // difference out the O(1) part, then least-squares slope in log-log
    double vmax = 0.0;
    for (const Cplx& v : values) vmax = std::max(vmax, std::abs(v));
    std::vector<double> lx, ly;
    for (size_t i = 0; i + 1 < values.size(); ++i) {
      const Cplx u = values[i + 1] - values[i];
      if (std::abs(u) < 1e-11 * vmax) continue;
      lx.push_back(std::log(t_ladder[i]));
      ly.push_back(std::log(std::abs(u)));
    }
    probe.usable_points = int(lx.size());
    if (lx.size() < 3)
      throw FitError("endpoint_exponent_probe: fewer than 3 usable ladder points");
    const double n = double(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
      sx += lx[i];
      sy += ly[i];
      sxx += lx[i] * lx[i];
      sxy += lx[i] * ly[i];
    }
    probe.slope_fitted = true;
    probe.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icpt = (sy - probe.slope * sx) / n;
    double ss = 0.0;
    for (size_t i = 0; i < lx.size(); ++i) {
      const double r = ly[i] - (icpt + probe.slope * lx[i]);
      ss += r * r;
    }
    if (lx.size() > 2)
      probe.slope_stderr =
          std::sqrt(ss / (n - 2.0) / (sxx - sx * sx / n));
    return probe;
  }
  probe.usable_points = int(values.size());
  if (values.size() < 3)
    throw FitError("endpoint_exponent_probe: fewer than 3 ladder points");
  std::vector<double> mags;
  for (const Cplx& v : values) mags.push_back(std::abs(v));
  std::vector<double> sorted = mags;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  probe.bounded_within = true;
  for (double m : mags)
    if (m > 10.0 * median || (median > 0.0 && m < 0.1 * median))
      probe.bounded_within = false;
  return probe;
}

double second_row_normalization_check(const RHSolution& sol) {
  const FinitePart b = bilinear(sol.family, Polynomial::monomial(sol.n - 1),
                                sol.pi_nm1, BilinearMethod::moments);
  const Cplx v = -(sol.c_n / kTwoPiI) * b.value;
  return std::abs(v - 1.0);
}

} // namespace finpart
