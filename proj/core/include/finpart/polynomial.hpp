#pragma once

#include <vector>

#include "finpart/complex_param.hpp"

namespace finpart {

/// Dense complex polynomial; coefficient index equals the degree.
/// The zero polynomial is the empty coefficient list, otherwise the
/// trailing coefficient is nonzero.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Cplx> coeffs);

  static Polynomial constant(Cplx c);
  static Polynomial monomial(int degree, Cplx coeff = Cplx(1.0));

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return int(coeffs_.size()) - 1; }
  Cplx coeff(int k) const noexcept {
    return (k >= 0 && k < int(coeffs_.size())) ? coeffs_[size_t(k)] : Cplx(0.0);
  }
  Cplx leading() const noexcept { return coeffs_.empty() ? Cplx(0.0) : coeffs_.back(); }
  const std::vector<Cplx>& coeffs() const noexcept { return coeffs_; }

  Cplx operator()(Cplx z) const noexcept;

  Polynomial derivative() const;
  /// Multiplication by x^k.
  Polynomial shifted_up(int k) const;
  /// Composition with 1-x (exact coefficient transform).
  Polynomial compose_one_minus_x() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Cplx s, const Polynomial& p);

private:
  void trim();
  std::vector<Cplx> coeffs_;
};

enum class FamilyKind { laguerre, jacobi };

/// One step of the operator-product (Rodrigues) construction:
///   Laguerre: (k + alpha - x + x d/dx) p
///   Jacobi:   (k + alpha - x(2k + alpha + beta) + (x - x^2) d/dx) p
/// Total on all inputs; in the Jacobi degenerate regime the leading
/// coefficient may cancel and the degree drop, which is reported by the
/// caller (see orthogonal_polynomial), not here.
Polynomial apply_raising_operator(const Polynomial& p, int k, FamilyKind kind,
                                  Cplx alpha, Cplx beta = Cplx(0.0));

} // namespace finpart
