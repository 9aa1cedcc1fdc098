#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "fockdict/hermite_line.hpp"
#include "fockdict/quadrature.hpp"

using namespace fockdict;

TEST(HermitePoly, SmallValues)
{
  EXPECT_EQ(hermite_poly(0, 3.7), 1.0);
  EXPECT_EQ(hermite_poly(2, 1.0), 2.0);
  EXPECT_EQ(hermite_poly(3, 0.0), 0.0);
  // H_4(y) = 16y^4 - 48y^2 + 12
  EXPECT_NEAR(hermite_poly(4, 0.5), 16 * 0.0625 - 48 * 0.25 + 12, 1e-12);
}

TEST(HermitePoly, OverflowSignalsRangeError) { EXPECT_THROW(hermite_poly(300, 50.0), std::range_error); }

TEST(HermiteFunction, ValuesAndParity)
{
  EXPECT_NEAR(hermite_function(0, 0.0), std::pow(2.0 / std::numbers::pi, 0.25), 1e-15);
  EXPECT_EQ(hermite_function(1, 0.0), 0.0);
  for (int n = 0; n <= 30; ++n) {
    for (double x : {0.3, 1.7, 4.2}) {
      EXPECT_NEAR(hermite_function(n, -x), (n % 2 ? -1.0 : 1.0) * hermite_function(n, x), 1e-14);
    }
  }
}

TEST(HermiteFunction, MatchesPolynomialDefinition)
{
  // h_n(x) = c / sqrt(2^n n!) e^{-x^2} H_n(sqrt 2 x), checked where H_n is moderate
  for (int n = 0; n <= 12; ++n) {
    for (double x : {-1.3, 0.2, 0.9}) {
      const double direct = kGaussNorm / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0)) * std::exp(-x * x) * hermite_poly(n, std::sqrt(2.0) * x);
      EXPECT_NEAR(hermite_function(n, x), direct, 1e-13);
    }
  }
}

TEST(HermiteFunction, StableAtHighDegree)
{
  for (int n : {100, 200}) {
    for (double x : {0.0, 5.0, 10.0, 30.0}) EXPECT_TRUE(std::isfinite(hermite_function(n, x)));
  }
  EXPECT_LT(std::abs(hermite_function(200, 30.0)), 1e-100);
}

TEST(GaussHermite, SmallRules)
{
  const auto r1 = gauss_hermite(1);
  EXPECT_EQ(r1.nodes[0], 0.0);
  EXPECT_NEAR(r1.weights[0], std::sqrt(std::numbers::pi), 1e-15);
  const auto r2 = gauss_hermite(2);
  EXPECT_NEAR(r2.nodes[0], -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r2.nodes[1], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r2.weights[0], std::sqrt(std::numbers::pi) / 2.0, 1e-15);
  EXPECT_NEAR(r2.weights[1], std::sqrt(std::numbers::pi) / 2.0, 1e-15);
}

TEST(GaussHermite, WeightsSumToSqrtPi)
{
  for (int n : {1, 2, 3, 7, 16, 33, 64, 100, 128, 200, 256}) {
    const auto r = gauss_hermite(n);
    double s = 0.0;
    for (double w : r.weights) s += w;
    EXPECT_NEAR(s, std::sqrt(std::numbers::pi), 1e-14) << n;
  }
  EXPECT_THROW(gauss_hermite(0), std::invalid_argument);
  EXPECT_THROW(gauss_hermite(257), std::invalid_argument);
}

TEST(GaussHermite, EvenMomentsExact)
{
  // int x^{2k} e^{-x^2} = (2k-1)!! sqrt(pi) / 2^k
  for (int n : {5, 20, 64}) {
    const auto r = gauss_hermite(n);
    double exact = std::sqrt(std::numbers::pi);
    for (int k = 0; 2 * k <= 2 * n - 1 && k <= 30; ++k) {
      if (k > 0) exact *= (2.0 * k - 1.0) / 2.0;
      double q = 0.0;
      for (int i = 0; i < r.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], 2 * k);
      EXPECT_NEAR(q / exact, 1.0, 1e-12) << "n=" << n << " k=" << k;
    }
  }
}

TEST(GaussHermite, ScaledWeightsConsistent)
{
  const auto r = gauss_hermite(40);
  for (int i = 0; i < r.size(); ++i) EXPECT_NEAR(r.scaled_weights[i] * std::exp(-r.nodes[i] * r.nodes[i]), r.weights[i], 1e-15 * r.scaled_weights[i]);
}

TEST(GaussLegendre, IntegratesPolynomials)
{
  const auto r = gauss_legendre(10);
  for (int k = 0; k < 20; ++k) {
    double q = 0.0;
    for (int i = 0; i < r.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], k);
    EXPECT_NEAR(q, k % 2 ? 0.0 : 2.0 / (k + 1.0), 1e-14);
  }
}

TEST(HermiteFunction, OrthonormalUnderQuadrature)
{
  const auto rule = gauss_hermite(128);
  for (int m = 0; m <= 20; ++m) {
    const auto p = project_line([m](double x) { return hermite_function(m, x); }, 20, rule);
    for (int n = 0; n <= 20; ++n) EXPECT_NEAR(std::abs(p.coeffs[n] - (m == n ? 1.0 : 0.0)), 0.0, 1e-10);
  }
}

TEST(ProjectLine, SquareNormOfH2)
{
  const auto rule = gauss_hermite(64);
  const auto p = project_line([](double x) { return hermite_function(2, x); }, 2, rule);
  EXPECT_NEAR(p.coeffs[2].real(), 1.0, 1e-12);
}

TEST(ProjectLine, UnitVectorsAndGaussian)
{
  const auto rule = gauss_hermite(128);
  const auto p3 = project_line([](double x) { return hermite_function(3, x); }, 16, rule);
  for (int n = 0; n <= 16; ++n) EXPECT_NEAR(std::abs(p3.coeffs[n] - (n == 3 ? 1.0 : 0.0)), 0.0, 1e-10);
  const auto pg = project_line([](double x) { return kGaussNorm * std::exp(-x * x); }, 16, rule);
  EXPECT_NEAR(pg.coeffs[0].real(), 1.0, 1e-12);
  for (int n = 1; n <= 16; ++n) EXPECT_LT(std::abs(pg.coeffs[n]), 1e-12);
  EXPECT_FALSE(pg.under_resolved);
}

TEST(ProjectLine, BoxWindowFirstCoefficient)
{
  const double expect = kGaussNorm * std::sqrt(std::numbers::pi) / 2.0 * std::erf(1.0);
  const auto p = project_line_interval([](double) { return 1.0; }, 0.0, 1.0, 40);
  EXPECT_NEAR(p.coeffs[0].real(), expect, 1e-8);
  EXPECT_TRUE(p.under_resolved);  // the discontinuities leave an algebraic tail
}

TEST(ProjectLine, FlagsUnderResolution)
{
  const auto rule = gauss_hermite(128);
  const auto p = project_line([](double x) { return hermite_function(15, x); }, 16, rule);
  EXPECT_TRUE(p.under_resolved);
}

TEST(EvalLine, Reconstructs)
{
  CVector c = CVector::Zero(6);
  c(1) = 2.0;
  c(4) = cplx(0.0, -1.0);
  const LineVector f(c);
  for (double x : {-2.0, 0.1, 1.4}) {
    EXPECT_NEAR(std::abs(eval_line(f, x) - (2.0 * hermite_function(1, x) - cplx(0, 1) * hermite_function(4, x))), 0.0, 1e-14);
  }
}

TEST(PlaneRule, GaussianMomentsPolar)
{
  // int z^p zbar^q d lambda = delta_pq p!, via the polar closed form int r^{2p+1} e^{-r^2} 2 dr = p!
  const PlaneRule plane(48);
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; q <= 6; ++q) {
      const cplx v = plane.integrate_gaussian([&](cplx z) { return std::pow(z, p) * std::pow(std::conj(z), q); });
      EXPECT_NEAR(std::abs(v - (p == q ? std::tgamma(p + 1.0) : 0.0)), 0.0, 1e-10);
    }
  }
}
