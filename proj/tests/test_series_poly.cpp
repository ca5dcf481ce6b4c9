#include <doctest.h>

#include <cmath>
#include <random>

#include "finpart/polynomial.hpp"
#include "finpart/power_series.hpp"
#include "finpart/special.hpp"
#include "oracles.hpp"

using namespace finpart;

namespace {
const Polynomial x = Polynomial::monomial(1);
const Polynomial one = Polynomial::constant(Cplx(1.0));

double coeff_rel_diff(const Polynomial& a, const Polynomial& b) {
  double worst = 0.0, scale = 0.0;
  const int d = std::max(a.degree(), b.degree());
  for (int k = 0; k <= d; ++k) {
    worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
    scale = std::max({scale, std::abs(a.coeff(k)), std::abs(b.coeff(k))});
  }
  return scale > 0.0 ? worst / scale : worst;
}
} // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial a = x + one;          // x+1
  const Polynomial b = x - one;          // x-1
  const Polynomial prod = a * b;
  CHECK(prod.degree() == 2);
  CHECK(prod.coeff(2) == Cplx(1.0));
  CHECK(prod.coeff(1) == Cplx(0.0));
  CHECK(prod.coeff(0) == Cplx(-1.0));

  const Polynomial x2 = Polynomial::monomial(2);
  CHECK((x2 - x2).is_zero());
  CHECK((x2 + (Cplx(-1.0) * x2)).degree() == -1);

  const Polynomial c = (Cplx(2.0) * x + Cplx(3.0) * one) * x2; // 2x^3+3x^2
  CHECK(c.degree() == 3);
  CHECK(c.coeff(3) == Cplx(2.0));
  CHECK(c.coeff(2) == Cplx(3.0));
  CHECK(c.coeff(1) == Cplx(0.0));
}

TEST_CASE("horner evaluation") {
  const Polynomial p({Cplx(-1.0), Cplx(0.0), Cplx(1.0)}); // x^2-1
  CHECK(p(Cplx(2.0)) == Cplx(3.0));
  CHECK(Polynomial()(Cplx(5.0, 2.0)) == Cplx(0.0));
}

TEST_CASE("raising operator on constants") {
  const Cplx a(0.7, -0.2), b(0.4, 0.1);
  // Laguerre step: (1+a) - x
  const Polynomial pl = apply_raising_operator(one, 1, FamilyKind::laguerre, a);
  CHECK(pl.degree() == 1);
  CHECK(std::abs(pl.coeff(0) - (1.0 + a)) < 1e-15);
  CHECK(std::abs(pl.coeff(1) + 1.0) < 1e-15);
  // Jacobi step: (1+a) - (2+a+b) x
  const Polynomial pj = apply_raising_operator(one, 1, FamilyKind::jacobi, a, b);
  CHECK(std::abs(pj.coeff(0) - (1.0 + a)) < 1e-15);
  CHECK(std::abs(pj.coeff(1) + (2.0 + a + b)) < 1e-15);
  // zero stays zero
  CHECK(apply_raising_operator(Polynomial(), 3, FamilyKind::laguerre, a).is_zero());
}

TEST_CASE("raising operator is linear") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> uc(-2.0, 2.0);
  for (int i = 0; i < 60; ++i) {
    const Polynomial p = oracles::random_poly(rng, 8);
    const Polynomial q = oracles::random_poly(rng, 8);
    const Cplx ca(uc(rng), uc(rng)), cb(uc(rng), uc(rng));
    const Cplx alpha(uc(rng), uc(rng)), beta(uc(rng), uc(rng));
    const int k = 1 + int(i % 5);
    for (FamilyKind kind : {FamilyKind::laguerre, FamilyKind::jacobi}) {
      const Polynomial lhs =
          apply_raising_operator(ca * p + cb * q, k, kind, alpha, beta);
      const Polynomial rhs = ca * apply_raising_operator(p, k, kind, alpha, beta) +
                             cb * apply_raising_operator(q, k, kind, alpha, beta);
      CHECK(coeff_rel_diff(lhs, rhs) < 1e-14);
    }
  }
}

TEST_CASE("leading coefficient of the operator product") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Cplx a = oracles::random_param(rng, -3.0, 2.0, 1.0, PoleSet::neg_ints);
    const Cplx b = oracles::random_param(rng, -3.0, 2.0, 1.0, PoleSet::neg_ints);
    for (int n = 0; n <= 10; ++n) {
      Polynomial pl = one, pj = one;
      for (int k = n; k >= 1; --k) {
        pl = apply_raising_operator(pl, k, FamilyKind::laguerre, a);
        pj = apply_raising_operator(pj, k, FamilyKind::jacobi, a, b);
      }
      const Cplx lag_lead = (n % 2 == 0) ? Cplx(1.0) : Cplx(-1.0);
      CHECK(std::abs(pl.coeff(n) - lag_lead) <= 1e-12 * std::abs(lag_lead));
      Cplx cn(1.0);
      for (int k = 1; k <= n; ++k) cn *= (double(k + n) + a + b);
      if (n % 2 == 1) cn = -cn;
      if (std::abs(cn) > 1e-6)
        CHECK(std::abs(pj.coeff(n) - cn) <= 1e-12 * std::abs(cn));
    }
  }
}

TEST_CASE("weight factor expansions, fixed length") {
  const PowerSeries e = expand_weight_factor(WeightFactorKind::exp_neg,
                                             Cplx(0.0), Cplx(0.0), 3, 0.5);
  REQUIRE(e.terms() == 4);
  CHECK(e.coeffs()[0] == Cplx(1.0));
  CHECK(e.coeffs()[1] == Cplx(-1.0));
  CHECK(e.coeffs()[2] == Cplx(0.5));
  CHECK(std::abs(e.coeffs()[3] - Cplx(-1.0 / 6.0)) < 1e-16);

  const Cplx b(0.3, 0.2);
  const PowerSeries w = expand_weight_factor(WeightFactorKind::one_minus_t_pow,
                                             b, Cplx(0.0), 2, 0.5);
  REQUIRE(w.terms() == 3);
  CHECK(std::abs(w.coeffs()[0] - Cplx(1.0)) < 1e-15);
  CHECK(std::abs(w.coeffs()[1] + b) < 1e-15);
  CHECK(std::abs(w.coeffs()[2] - 0.5 * b * (b - 1.0)) < 1e-15);

  // (1-t)^1 is an exact polynomial; higher coefficients vanish
  const PowerSeries p1 = expand_weight_factor(WeightFactorKind::one_minus_t_pow,
                                              Cplx(1.0), Cplx(0.0), 5, 0.5);
  REQUIRE(p1.terms() == 6);
  CHECK(p1.coeffs()[0] == Cplx(1.0));
  CHECK(p1.coeffs()[1] == Cplx(-1.0));
  for (int k = 2; k <= 5; ++k) CHECK(std::abs(p1.coeffs()[size_t(k)]) == 0.0);
  CHECK(p1.tail_bound() == 0.0);

  CHECK_THROWS_AS(expand_weight_factor(WeightFactorKind::one_minus_t_pow,
                                       Cplx(0.5), Cplx(0.6), 4, 0.5),
                  RadiusError);
}

TEST_CASE("series evaluation against the closed forms") {
  const PowerSeries e = expand_exp_neg(Cplx(0.0), 0.75, 1e-14);
  const Cplx got = e.eval(Cplx(0.5));
  CHECK(std::abs(got - Cplx(0.6065306597126334236)) <= e.tail_bound() + 1e-15);
  CHECK_THROWS_AS(expand_one_minus_t_pow(Cplx(0.3), Cplx(0.0), 0.5, 1e-12)
                      .eval(Cplx(2.0)),
                  RadiusError);
}

TEST_CASE("adaptive tail bounds are conservative") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> uang(0.0, 6.283185307179586);
  for (int trial = 0; trial < 8; ++trial) {
    const Cplx b = oracles::random_param(rng, -3.0, 3.0, 2.0, PoleSet::neg_ints);
    const double r = 0.6;
    const PowerSeries s = expand_one_minus_t_pow(b, Cplx(0.0), r, 1e-9);
    const PowerSeries e = expand_exp_neg(Cplx(0.0), r, 1e-9);
    for (int i = 0; i < 100; ++i) {
      const double rho = r * (0.3 + 0.7 * double(i) / 99.0);
      const Cplx t = rho * std::exp(Cplx(0.0, uang(rng)));
      CHECK(std::abs(s.eval(t) - std::pow(1.0 - t, b)) <= s.tail_bound() + 1e-14);
      CHECK(std::abs(e.eval(t) - std::exp(-t)) <= e.tail_bound() + 1e-14);
    }
  }
}

TEST_CASE("series product bookkeeping") {
  const double r = 0.5;
  const PowerSeries e = expand_exp_neg(Cplx(0.0), r, 1e-12);
  const PowerSeries k = expand_cauchy_kernel(Cplx(2.0, 1.0), r, 1e-12);
  const PowerSeries prod = multiply(e, k);
  const Cplx t(0.3, -0.2);
  const Cplx want = std::exp(-t) / (t - Cplx(2.0, 1.0));
  CHECK(std::abs(prod.eval(t) - want) <= prod.tail_bound() + 1e-14);
  CHECK(prod.eval_radius() == doctest::Approx(r));
}

TEST_CASE("adaptive expansion hits the cap for unreachable tolerances") {
  // ratio r_eval/|1-c| close to 1 makes 1e-30 unreachable within the cap
  CHECK_THROWS_AS(expand_one_minus_t_pow(Cplx(-2.5), Cplx(0.0), 0.97, 1e-30),
                  TruncationError);
}

TEST_CASE("scaled series represent the same function") {
  const double r = 0.25;
  const PowerSeries plain = expand_exp_neg(Cplx(0.0), r, 1e-13, 1.0);
  const PowerSeries scaled = expand_exp_neg(Cplx(0.0), r, 1e-13, r);
  const Cplx t(0.2, 0.05);
  CHECK(std::abs(plain.eval(t) - scaled.eval(t)) < 1e-13);
  CHECK(std::abs(scaled.taylor_coeff(2) - Cplx(0.5)) < 1e-13);
}
