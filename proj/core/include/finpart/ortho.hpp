#pragma once

#include <optional>
#include <vector>

#include "finpart/complex_param.hpp"
#include "finpart/hadamard.hpp"
#include "finpart/polynomial.hpp"

namespace finpart {

/// A validated (kind, alpha[, beta]) parameter set.
///   Laguerre: alpha off {-1,-2,...}
///   Jacobi:   alpha, beta off {-1,-2,...} and alpha+beta off {-2,-3,...}
/// jacobi_relaxed() skips the sum constraint (sum_constraint_ok() reports
/// it); degree collapse then surfaces per-degree via
/// DegenerateDegreeError in orthogonal_polynomial.
class OrthoFamily {
public:
  static OrthoFamily laguerre(Cplx alpha);
  static OrthoFamily jacobi(Cplx alpha, Cplx beta);
  static OrthoFamily jacobi_relaxed(Cplx alpha, Cplx beta);

  FamilyKind kind() const noexcept { return kind_; }
  const ComplexParam& alpha() const noexcept { return alpha_; }
  const ComplexParam& beta() const;
  bool sum_constraint_ok() const noexcept { return sum_ok_; }

private:
  OrthoFamily(FamilyKind kind, ComplexParam a, std::optional<ComplexParam> b,
              bool sum_ok);
  FamilyKind kind_;
  ComplexParam alpha_;
  std::optional<ComplexParam> beta_;
  bool sum_ok_;
};

enum class Normalization { rodrigues, monic };

/// Leading coefficient of the degree-n operator-product polynomial:
/// (-1)^n for Laguerre, C_n = (-1)^n prod_{k=1..n}(k+n+alpha+beta) for
/// Jacobi.
Cplx leading_coefficient(const OrthoFamily& family, int n);

/// The family polynomial of degree n: the operator product A_1...A_n 1
/// (rodrigues) or the same divided by its closed-form leading coefficient
/// (monic). Throws DegenerateDegreeError if that coefficient vanishes.
Polynomial orthogonal_polynomial(const OrthoFamily& family, int n,
                                 Normalization normalization);

enum class BilinearMethod { moments, quadrature };

/// The bilinear functional
///   Laguerre: FP int_0^inf x^alpha e^{-x} f g dx
///   Jacobi:   FP int_0^1 x^alpha (1-x)^beta f g dx
/// `moments` expands f*g in monomials and sums Gamma/Beta moments (exact
/// up to Gamma accuracy); `quadrature` runs the finite-part machinery.
FinitePart bilinear(const OrthoFamily& family, const Polynomial& f,
                    const Polynomial& g,
                    BilinearMethod method = BilinearMethod::moments,
                    double tol = default_tol);

enum class GramBasis { monomial, orthogonal };

struct GramMatrix {
  std::vector<std::vector<Cplx>> entries;
  std::vector<std::vector<double>> err;
};

/// (n_max+1)^2 matrix of bilinear values over the monomial basis or the
/// rodrigues-normalized family polynomials. Symmetric by construction
/// (the functional is bilinear-symmetric), filled from the upper triangle.
GramMatrix gram(const OrthoFamily& family, int n_max, GramBasis basis,
                BilinearMethod method = BilinearMethod::moments,
                double tol = default_tol);

/// Closed-form diagonal of the rodrigues-normalized Gram matrix:
///   Laguerre: n! Gamma(alpha+n+1)
///   Jacobi:   (-1)^n n! C_n Gamma(alpha+n+1) Gamma(beta+n+1)
///                               / Gamma(alpha+beta+2n+2)
/// Both validated against the exact moment oracle.
Cplx norm_formula(const OrthoFamily& family, int n);

struct MultipleCheck {
  bool is_multiple = false;
  Cplx scalar;
};

/// Tests B(p, x^k) = 0 for all k < deg p; on success returns the scalar
/// relating p to the monic family polynomial of the same degree.
MultipleCheck multiple_of_check(const OrthoFamily& family, const Polynomial& p);

} // namespace finpart
