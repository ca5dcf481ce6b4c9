#include "finpart/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace finpart {

Polynomial::Polynomial(std::vector<Cplx> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(Cplx c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int degree, Cplx coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Cplx> c(size_t(degree) + 1, Cplx(0.0));
  c.back() = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Cplx(0.0)) coeffs_.pop_back();
}

Cplx Polynomial::operator()(Cplx z) const noexcept {
  Cplx s(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * z + *it;
  return s;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Cplx> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = double(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted_up(int k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : Polynomial();
  std::vector<Cplx> c(coeffs_.size() + size_t(k), Cplx(0.0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i + size_t(k)] = coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::compose_one_minus_x() const {
  std::vector<Cplx> out(coeffs_.size(), Cplx(0.0));
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    // (1-x)^k expanded with binomial coefficients built incrementally.
    double b = 1.0;
    for (size_t j = 0; j <= k; ++j) {
      out[j] += coeffs_[k] * b * ((j % 2 == 0) ? 1.0 : -1.0);
      b = b * double(k - j) / double(j + 1);
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Cplx(0.0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Cplx(0.0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, Cplx(0.0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(Cplx s, const Polynomial& p) {
  std::vector<Cplx> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

Polynomial apply_raising_operator(const Polynomial& p, int k, FamilyKind kind,
                                  Cplx alpha, Cplx beta) {
  if (k < 1) throw std::invalid_argument("apply_raising_operator: k must be >= 1");
  if (p.is_zero()) return Polynomial();
  const Polynomial dp = p.derivative();
  if (kind == FamilyKind::laguerre) {
    // (k + alpha) p - x p + x p'
    return (Cplx(double(k)) + alpha) * p - p.shifted_up(1) + dp.shifted_up(1);
  }
  // (k + alpha) p - (2k + alpha + beta) x p + x p' - x^2 p'
  return (Cplx(double(k)) + alpha) * p -
         (Cplx(2.0 * k) + alpha + beta) * p.shifted_up(1) + dp.shifted_up(1) -
         dp.shifted_up(2);
}

} // namespace finpart
