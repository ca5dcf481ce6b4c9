#include "finpart/ortho.hpp"

#include <cmath>
#include <stdexcept>

#include "finpart/errors.hpp"
#include "finpart/special.hpp"

namespace finpart {

namespace {

// Relative slack per moment term: Gamma/Beta evaluations plus the
// coefficient convolution.
constexpr double kMomentTermRel = 2e-13;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= double(k);
  return f;
}

Polynomial convolve(const Polynomial& f, const Polynomial& g) { return f * g; }

} // namespace

OrthoFamily::OrthoFamily(FamilyKind kind, ComplexParam a,
                         std::optional<ComplexParam> b, bool sum_ok)
    : kind_(kind), alpha_(a), beta_(std::move(b)), sum_ok_(sum_ok) {}

OrthoFamily OrthoFamily::laguerre(Cplx alpha) {
  return OrthoFamily(FamilyKind::laguerre,
                     ComplexParam(alpha, PoleSet::neg_ints), std::nullopt,
                     true);
}

OrthoFamily OrthoFamily::jacobi(Cplx alpha, Cplx beta) {
  ComplexParam a(alpha, PoleSet::neg_ints);
  ComplexParam b(beta, PoleSet::neg_ints);
  if (distance_to_ints_below(alpha + beta, -2) < pole_guard)
    throw PoleError("jacobi: alpha+beta within pole guard of {-2,-3,...}");
  return OrthoFamily(FamilyKind::jacobi, a, b, true);
}

OrthoFamily OrthoFamily::jacobi_relaxed(Cplx alpha, Cplx beta) {
  ComplexParam a(alpha, PoleSet::neg_ints);
  ComplexParam b(beta, PoleSet::neg_ints);
  const bool ok = distance_to_ints_below(alpha + beta, -2) >= pole_guard;
  return OrthoFamily(FamilyKind::jacobi, a, b, ok);
}

const ComplexParam& OrthoFamily::beta() const {
  if (!beta_) throw std::logic_error("OrthoFamily::beta: Laguerre family");
  return *beta_;
}

Cplx leading_coefficient(const OrthoFamily& family, int n) {
  if (n < 0) throw std::invalid_argument("leading_coefficient: n must be >= 0");
  if (family.kind() == FamilyKind::laguerre)
    return (n % 2 == 0) ? Cplx(1.0) : Cplx(-1.0);
  const Cplx s = family.alpha().value() + family.beta().value();
  Cplx c(1.0);
  for (int k = 1; k <= n; ++k) c *= (double(k + n) + s);
  return (n % 2 == 0) ? c : -c;
}

Polynomial orthogonal_polynomial(const OrthoFamily& family, int n,
                                 Normalization normalization) {
  if (n < 0) throw std::invalid_argument("orthogonal_polynomial: n must be >= 0");
  const Cplx a = family.alpha().value();
  const Cplx b = family.kind() == FamilyKind::jacobi ? family.beta().value()
                                                     : Cplx(0.0);
  Polynomial p = Polynomial::constant(Cplx(1.0));
  for (int k = n; k >= 1; --k)
    p = apply_raising_operator(p, k, family.kind(), a, b);
  if (normalization == Normalization::rodrigues) return p;
  // monic: divide by the closed-form leading coefficient
  if (family.kind() == FamilyKind::jacobi) {
    const Cplx s = a + b;
    for (int k = 1; k <= n; ++k)
      if (std::abs(double(k + n) + s) < pole_guard)
        throw DegenerateDegreeError(
            "orthogonal_polynomial: Jacobi leading coefficient vanishes at this degree");
  }
  return (Cplx(1.0) / leading_coefficient(family, n)) * p;
}

FinitePart bilinear(const OrthoFamily& family, const Polynomial& f,
                    const Polynomial& g, BilinearMethod method, double tol) {
  const Polynomial h = convolve(f, g);
  if (method == BilinearMethod::quadrature) {
    if (family.kind() == FamilyKind::laguerre)
      return finite_part_halfline(h, family.alpha(), std::nullopt, tol);
    return finite_part_unit(h, family.alpha(), family.beta(), std::nullopt, tol);
  }
  // moment route: exact in Gamma/Beta terms
  Cplx sum(0.0);
  double scale = 0.0;
  const Cplx a = family.alpha().value();
  if (family.kind() == FamilyKind::laguerre) {
    for (int k = 0; k <= h.degree(); ++k) {
      const Cplx term = h.coeff(k) * gamma(a + double(k + 1));
      sum += term;
      scale += std::abs(term);
    }
  } else {
    const Cplx b = family.beta().value();
    for (int k = 0; k <= h.degree(); ++k) {
      const Cplx term = h.coeff(k) * beta_continued(a + double(k + 1), b + 1.0);
      sum += term;
      scale += std::abs(term);
    }
  }
  return {sum, kMomentTermRel * scale, {}};
}

GramMatrix gram(const OrthoFamily& family, int n_max, GramBasis basis,
                BilinearMethod method, double tol) {
  if (n_max < 0) throw std::invalid_argument("gram: n_max must be >= 0");
  std::vector<Polynomial> base;
  base.reserve(size_t(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    base.push_back(basis == GramBasis::monomial
                       ? Polynomial::monomial(n)
                       : orthogonal_polynomial(family, n, Normalization::rodrigues));
  GramMatrix m;
  m.entries.assign(size_t(n_max) + 1, std::vector<Cplx>(size_t(n_max) + 1));
  m.err.assign(size_t(n_max) + 1, std::vector<double>(size_t(n_max) + 1, 0.0));
  for (int i = 0; i <= n_max; ++i)
    for (int j = i; j <= n_max; ++j) {
      const FinitePart v = bilinear(family, base[size_t(i)], base[size_t(j)],
                                    method, tol);
      m.entries[size_t(i)][size_t(j)] = v.value;
      m.entries[size_t(j)][size_t(i)] = v.value;
      m.err[size_t(i)][size_t(j)] = v.err_estimate;
      m.err[size_t(j)][size_t(i)] = v.err_estimate;
    }
  return m;
}

Cplx norm_formula(const OrthoFamily& family, int n) {
  if (n < 0) throw std::invalid_argument("norm_formula: n must be >= 0");
  const Cplx a = family.alpha().value();
  if (family.kind() == FamilyKind::laguerre)
    return factorial(n) * gamma(a + double(n + 1));
  const Cplx b = family.beta().value();
  const Cplx cn = leading_coefficient(family, n);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * factorial(n) * cn * gamma(a + double(n + 1)) *
         gamma(b + double(n + 1)) * gamma_reciprocal(a + b + double(2 * n + 2));
}

MultipleCheck multiple_of_check(const OrthoFamily& family, const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("multiple_of_check: zero polynomial");
  const int n = p.degree();
  for (int k = 0; k < n; ++k) {
    const FinitePart v = bilinear(family, p, Polynomial::monomial(k));
    if (std::abs(v.value) > std::max(10.0 * v.err_estimate, 1e-12))
      return {false, Cplx(0.0)};
  }
  const Polynomial pin = orthogonal_polynomial(family, n, Normalization::monic);
  const Cplx s = p.leading(); // pin is monic
  double worst = 0.0, scale = 0.0;
  for (int k = 0; k <= n; ++k) {
    worst = std::max(worst, std::abs(p.coeff(k) - s * pin.coeff(k)));
    scale = std::max(scale, std::abs(p.coeff(k)));
  }
  if (worst > 1e-9 * std::max(scale, 1.0)) return {false, Cplx(0.0)};
  return {true, s};
}

} // namespace finpart
