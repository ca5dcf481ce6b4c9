#include "finpart/special.hpp"

#include <cmath>

namespace finpart {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos rational approximation, g = 607/128, 15 terms
// (Godfrey's tabulation of the Lanczos coefficients).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

Cplx lanczos_sum(Cplx z) {
  Cplx s = kLanczosC[0];
  for (int i = 1; i < 15; ++i) s += kLanczosC[i] / (z + double(i - 1));
  return s;
}

// Right half-plane core, Re z >= 0.5.
Cplx gamma_core(Cplx z) {
  const Cplx t = z + (kLanczosG - 0.5);
  return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) *
         lanczos_sum(z);
}

Cplx log_gamma_core(Cplx z) {
  const Cplx t = z + (kLanczosG - 0.5);
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

// log(sin(pi z)) stable against overflow of sin for large |Im z|.
Cplx log_sin_pi(Cplx z) {
  const Cplx w = kPi * z;
  if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w));
  // sin w = -e^{-iw}(1 - e^{2iw})/(2i) for Im w > 0 (the e^{-iw} term
  // dominates); mirror for Im w < 0.
  const Cplx i(0.0, 1.0);
  if (w.imag() > 0.0)
    return -i * w + std::log((1.0 - std::exp(2.0 * i * w)) / (2.0 * i)) +
           Cplx(0.0, kPi);
  return i * w + std::log((1.0 - std::exp(-2.0 * i * w)) / (2.0 * i));
}

void require_off_poles(Cplx z, const char* what) {
  if (pole_distance(z, PoleSet::non_pos_ints) < pole_guard)
    throw PoleError(std::string(what) + ": argument within pole guard of a non-positive integer");
}

} // namespace

double pole_distance(Cplx z, PoleSet set) noexcept {
  const int cap = set == PoleSet::non_pos_ints ? 0 : -1;
  return distance_to_ints_below(z, cap);
}

double distance_to_ints_below(Cplx z, int ceiling) noexcept {
  double m = std::round(z.real());
  if (m > double(ceiling)) m = double(ceiling);
  return std::hypot(z.real() - m, z.imag());
}

ComplexParam::ComplexParam(Cplx value, PoleSet set)
    : value_(value), dist_(pole_distance(value, set)), set_(set) {
  if (dist_ < pole_guard)
    throw PoleError("parameter within pole guard of its excluded integer set");
}

Cplx gamma(Cplx z) {
  require_off_poles(z, "gamma");
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  return gamma_core(z);
}

Cplx log_gamma(Cplx z) {
  require_off_poles(z, "log_gamma");
  if (z.real() < 0.5)
    return std::log(Cplx(kPi)) - log_sin_pi(z) - log_gamma(1.0 - z);
  return log_gamma_core(z);
}

Cplx gamma_reciprocal(Cplx z) {
  if (z.real() >= 0.5) return 1.0 / gamma_core(z);
  // sin(pi z) Gamma(1-z) / pi, exactly zero at the non-positive integers.
  return std::sin(kPi * z) * gamma_core(1.0 - z) / kPi;
}

Cplx beta(Cplx r, Cplx s) {
  require_off_poles(r, "beta");
  require_off_poles(s, "beta");
  require_off_poles(r + s, "beta");
  if (std::abs(r) + std::abs(s) > 30.0)
    return std::exp(log_gamma(r) + log_gamma(s) - log_gamma(r + s));
  return gamma(r) * gamma(s) * gamma_reciprocal(r + s);
}

Cplx beta_continued(Cplx r, Cplx s) {
  require_off_poles(r, "beta_continued");
  require_off_poles(s, "beta_continued");
  const Cplx rg = gamma_reciprocal(r + s);
  if (rg == Cplx(0.0)) return Cplx(0.0);
  if (std::abs(r) + std::abs(s) > 30.0)
    return std::exp(log_gamma(r) + log_gamma(s) + std::log(rg));
  return gamma(r) * gamma(s) * rg;
}

} // namespace finpart
