#include "finpart/power_series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "finpart/errors.hpp"

namespace finpart {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

PowerSeries::PowerSeries(Cplx center, std::vector<Cplx> coeffs, double radius,
                         double eval_radius, double tail_bound, double scale)
    : center_(center), coeffs_(std::move(coeffs)), radius_(radius),
      eval_radius_(eval_radius), tail_bound_(tail_bound), scale_(scale) {
  if (coeffs_.empty()) coeffs_.push_back(Cplx(0.0));
  if (!(scale_ > 0.0)) throw std::invalid_argument("PowerSeries: scale must be positive");
  if (!(radius_ > 0.0)) throw std::invalid_argument("PowerSeries: radius must be positive");
}

Cplx PowerSeries::taylor_coeff(int n) const {
  if (n < 0 || n >= terms()) return Cplx(0.0);
  return coeffs_[size_t(n)] / std::pow(scale_, double(n));
}

Cplx PowerSeries::eval(Cplx t) const {
  const Cplx u = (t - center_) / scale_;
  if (std::abs(t - center_) > radius_)
    throw RadiusError("PowerSeries::eval: point outside radius of analyticity");
  Cplx s(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * u + *it;
  return s;
}

PowerSeries expand_exp_neg(Cplx center, double r_eval, double tol,
                           double scale) {
  const Cplx pre = std::exp(-center);
  std::vector<Cplx> c{pre};
  const double ru = r_eval / scale;
  Cplx a = pre;
  double rpow = 1.0;
  for (int n = 0; n < series_cap; ++n) {
    a *= -scale / double(n + 1);
    c.push_back(a);
    rpow *= ru;
    // first neglected term over the geometric remainder of the ratio test
    const double next = std::abs(a) * r_eval / double(n + 2) * rpow;
    const double rho = r_eval / double(n + 3);
    if (rho < 1.0) {
      const double tail = next / (1.0 - rho);
      if (tail < tol)
        return PowerSeries(center, std::move(c), kInf, r_eval, tail, scale);
    }
  }
  throw TruncationError("expand_exp_neg: series cap reached before tolerance");
}

PowerSeries expand_one_minus_t_pow(Cplx exponent, Cplx center, double r_eval,
                                   double tol, double scale) {
  if (std::abs(center) + r_eval >= 1.0)
    throw RadiusError("expand_one_minus_t_pow: |center| + r_eval must be < 1");
  const Cplx w = 1.0 - center;           // (1-t)^b = w^b (1 - (t-center)/w)^b
  const double q = r_eval / std::abs(w); // term ratio scale, q < 1
  const double ru = r_eval / scale;
  const double ab = std::abs(exponent);
  std::vector<Cplx> c{std::pow(w, exponent)};
  Cplx a = c[0];
  double rpow = 1.0;
  for (int n = 0; n < series_cap; ++n) {
    a *= (exponent - double(n)) / double(n + 1) * (-scale / w);
    c.push_back(a);
    rpow *= ru;
    const double next = std::abs(a) * std::max(1.0, (ab + n + 1) / double(n + 2)) * q * rpow;
    const double rho = q * std::max(1.0, (ab + n + 2) / double(n + 3));
    if (rho < 1.0) {
      const double tail = next / (1.0 - rho);
      if (tail < tol)
        return PowerSeries(center, std::move(c), std::abs(w), r_eval, tail, scale);
    }
  }
  throw TruncationError("expand_one_minus_t_pow: series cap reached before tolerance");
}

PowerSeries expand_cauchy_kernel(Cplx z, double r_eval, double tol,
                                 double scale) {
  const double q = r_eval / std::abs(z);
  if (q >= 0.999)
    throw RadiusError("expand_cauchy_kernel: r_eval too close to |z|");
  const double ru = r_eval / scale;
  std::vector<Cplx> c{-1.0 / z};
  double rpow = 1.0;
  for (int n = 0; n < series_cap; ++n) {
    c.push_back(c.back() * (scale / z));
    rpow *= ru;
    const double tail = std::abs(c.back()) * q * rpow / (1.0 - q);
    if (tail < tol)
      return PowerSeries(Cplx(0.0), std::move(c), std::abs(z), r_eval, tail, scale);
  }
  throw TruncationError("expand_cauchy_kernel: series cap reached before tolerance");
}

PowerSeries series_from_polynomial(const Polynomial& p, double r_eval,
                                   double scale) {
  std::vector<Cplx> c(p.coeffs());
  double spow = 1.0;
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] *= spow;
    spow *= scale;
  }
  return PowerSeries(Cplx(0.0), std::move(c), kInf, r_eval, 0.0, scale);
}

PowerSeries multiply(const PowerSeries& f, const PowerSeries& g) {
  if (f.center() != g.center() || f.scale() != g.scale())
    throw std::logic_error("multiply: series must share center and scale");
  const double eval_r = std::min(f.eval_radius(), g.eval_radius());
  const double ru = eval_r / f.scale();
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<Cplx> c(a.size() + b.size() - 1, Cplx(0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  // sup bounds of the truncations on |u| <= ru
  double mf = 0.0, mg = 0.0, rp = 1.0;
  for (size_t i = 0; i < a.size(); ++i) { mf += std::abs(a[i]) * rp; rp *= ru; }
  rp = 1.0;
  for (size_t j = 0; j < b.size(); ++j) { mg += std::abs(b[j]) * rp; rp *= ru; }
  const double tail =
      mf * g.tail_bound() + mg * f.tail_bound() + f.tail_bound() * g.tail_bound();
  return PowerSeries(f.center(), std::move(c), std::min(f.radius(), g.radius()),
                     eval_r, tail, f.scale());
}

PowerSeries negate(const PowerSeries& f) {
  std::vector<Cplx> c = f.coeffs();
  for (auto& x : c) x = -x;
  return PowerSeries(f.center(), std::move(c), f.radius(), f.eval_radius(),
                     f.tail_bound(), f.scale());
}

PowerSeries expand_weight_factor(WeightFactorKind kind, Cplx beta, Cplx center,
                                 int N, double r_eval) {
  if (N < 0) throw std::invalid_argument("expand_weight_factor: N must be >= 0");
  if (kind == WeightFactorKind::exp_neg) {
    std::vector<Cplx> c{std::exp(-center)};
    Cplx a = c[0];
    double rpow = 1.0; // r_eval^N at loop exit
    for (int n = 0; n < N; ++n) {
      a *= -1.0 / double(n + 1);
      c.push_back(a);
      rpow *= r_eval;
    }
    const double first_neglected = std::abs(a) / double(N + 1) * rpow * r_eval;
    const double rho = r_eval / double(N + 2);
    const double tail = rho < 1.0 ? first_neglected / (1.0 - rho) : kInf;
    return PowerSeries(center, std::move(c), kInf, r_eval, tail);
  }
  if (std::abs(center) + r_eval >= 1.0)
    throw RadiusError("expand_weight_factor: |center| + r_eval must be < 1");
  const Cplx w = 1.0 - center;
  const double q = r_eval / std::abs(w);
  const double ab = std::abs(beta);
  std::vector<Cplx> c{std::pow(w, beta)};
  Cplx a = c[0];
  double rpow = 1.0;
  for (int n = 0; n < N; ++n) {
    a *= (beta - double(n)) / double(n + 1) * (-1.0 / w);
    c.push_back(a);
    rpow *= r_eval;
  }
  const double first_neglected =
      std::abs(a * (beta - double(N)) / double(N + 1) / w) * rpow * r_eval;
  const double rho = q * std::max(1.0, (ab + N + 1) / double(N + 2));
  const double tail = rho < 1.0 ? first_neglected / (1.0 - rho) : kInf;
  return PowerSeries(center, std::move(c), std::abs(w), r_eval, tail);
}

} // namespace finpart
