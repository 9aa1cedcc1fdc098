#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "fockdict/quadrature.hpp"
#include "fockdict/singular.hpp"

using namespace fockdict;

namespace {

// (1/pi) int_0^inf (f(x+s) - f(x-s)) / s ds, i.e. (1/pi) PV int f(t)/(t - x) dt
template <class F>
double line_hilbert(F&& f, double x)
{
  static const QuadratureRule leg = gauss_legendre(24);
  const auto g = [&](double s) { return (f(x + s) - f(x - s)) / s; };
  return (integrate_composite(g, 0.0, 12.0 + std::abs(x), 48, leg)) / std::numbers::pi;
}

}  // namespace

TEST(SPhi, ConstantSymbolIsScalar)
{
  const auto s = s_phi_matrix(EntireSymbol::constant(cplx(2.0, -1.0)), 10);
  EXPECT_LT((s.entries - cplx(2.0, -1.0) * CMatrix::Identity(11, 11)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SPhi, LinearSymbolIsMultiplicationMinusDerivative)
{
  // phi(u) = u: S f = z f - f'
  const auto s = s_phi_matrix(EntireSymbol::from_doubles({0.0, 1.0}), 12);
  const auto md = md_matrices(12);
  EXPECT_LT((s.entries - (md.M.entries - md.D.entries)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(s.apply(FockVector::unit(0, 12))[1], cplx(1.0));
}

TEST(SPhi, MatchesPlaneIntegralForLowDegreeSymbols)
{
  // S_phi e_n(z) = int e_n(w) e^{z wbar} phi(z - wbar) d lambda(w), on the plane rule
  const PlaneRule plane(64);
  const auto phi = EntireSymbol::from_doubles({cplx(0.5, 0.0), cplx(0.0, 1.0), cplx(-0.25, 0.0), cplx(0.1, 0.2)});
  const auto s = s_phi_matrix(phi, 10);
  for (int n = 0; n <= 4; ++n) {
    const auto image = s.apply(FockVector::unit(n, n));
    for (cplx z : {cplx(0.2, -0.1), cplx(-0.6, 0.5)}) {
      const cplx direct = plane.integrate_gaussian([&](cplx w) {
        return eval(FockVector::unit(n, n), w) * std::exp(z * std::conj(w)) * phi(z - std::conj(w));
      });
      EXPECT_NEAR(std::abs(direct - eval(image, z)), 0.0, 1e-9) << n << " " << z;
    }
  }
}

TEST(SPhi, GaussianSymbolClosedForm)
{
  // phi = e^{a u^2}: S f(z) = e^{a z^2} [e^{a D^2} f]((1 - 2a) z)
  const double a = 0.1;
  const int N = 48;
  const auto s = s_phi_matrix(EntireSymbol::exp_quadratic(a, 2 * N), N);
  const auto expect = [&](int n, cplx z) -> cplx {
    const cplx y = (1.0 - 2.0 * a) * z;
    cplx p;
    if (n == 0) p = 1.0;
    else if (n == 1) p = y;
    else if (n == 2) p = (y * y + 2.0 * a) / std::sqrt(2.0);
    else p = (y * y * y + 6.0 * a * y) / std::sqrt(6.0);
    return std::exp(a * z * z) * p;
  };
  for (int n = 0; n <= 3; ++n) {
    const auto image = s.apply(FockVector::unit(n, n));
    for (cplx z : {cplx(0.0), cplx(0.5, 0.3), cplx(-0.8, -0.2)}) EXPECT_NEAR(std::abs(eval(image, z) - expect(n, z)), 0.0, 1e-12) << n;
  }
}

TEST(SPhi, RejectsSymbolBeyondTwiceDegree)
{
  EXPECT_THROW(s_phi_matrix(EntireSymbol::exp_quadratic(0.1, 21), 10), std::invalid_argument);
}

TEST(SPhi, BerezinTransformRecoversSymbol)
{
  const auto phi = EntireSymbol::from_doubles({1.0, cplx(0.0, 0.5), 0.25});
  for (cplx z : {cplx(0.3, 0.2), cplx(-0.4, -0.6)}) {
    const auto b = berezin_check(phi, z, 60);
    EXPECT_NEAR(std::abs(b.lhs - b.rhs), 0.0, 1e-12);
  }
}

TEST(Hilbert, SymbolCoefficients)
{
  const auto phi = hilbert_symbol(7);
  const double c = -2.0 / std::sqrt(std::numbers::pi);
  EXPECT_EQ(phi.coefficient(0), cplx(0.0));
  EXPECT_NEAR(phi.coefficient(1).real(), c / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(phi.coefficient(3).real(), c / (3.0 * 2.0 * std::sqrt(2.0)), 1e-15);
  EXPECT_EQ(phi.coefficient(2), cplx(0.0));
  EXPECT_NEAR(phi.coefficient(5).real(), c / (5.0 * 2.0 * 4.0 * std::sqrt(2.0)), 1e-15);
}

TEST(Hilbert, MatrixMatchesLineTransform)
{
  const auto rule = gauss_hermite(64);
  const auto T = hilbert_fock_matrix(16);
  for (int n = 0; n <= 8; ++n) {
    const auto p = project_line([&](double x) { return line_hilbert([n](double t) { return hermite_function(n, t); }, x); }, 8, rule);
    for (int m = 0; m <= 8; ++m) EXPECT_NEAR(std::abs(p.coeffs[m] - T.entries(m, n)), 0.0, 1e-6) << m << "," << n;
  }
}

TEST(Hilbert, AntiSelfAdjointOnSharedBlock)
{
  // H is anti-self-adjoint on the line, so the block must be too
  const auto T = hilbert_fock_matrix(24).entries;
  EXPECT_LT((T + T.adjoint()).topLeftCorner(12, 12).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Hilbert, SquareApproachesMinusIdentitySlowly)
{
  double prev = INFINITY;
  for (int N : {8, 16, 32}) {
    const auto T = hilbert_fock_matrix(N).entries;
    const CMatrix r = T * T + CMatrix::Identity(N + 1, N + 1);
    const double res = interior_max_abs(r, N / 2 + 1);
    EXPECT_LT(res, prev);
    prev = res;
  }
  EXPECT_THROW(hilbert_fock_matrix(0), std::invalid_argument);
}

TEST(Hilbert, NormSeriesTendsToQuarterPi)
{
  const auto s = fock_norm_A(1 << 16);
  EXPECT_NEAR(s.value + s.tail_estimate, std::numbers::pi / 4.0, 1e-5);
  EXPECT_LT(s.value, std::numbers::pi / 4.0);
  EXPECT_NEAR(antiderivative_half_vector(2 * 200 + 1).norm_squared(), fock_norm_A(201).value, 1e-12);
}

TEST(Hilbert, AntiderivativeVectorEvaluates)
{
  // A(z/sqrt 2) = int_0^{z/sqrt 2} e^{u^2} du; real z: sqrt(pi)/2 erfi, checked by quadrature
  const auto v = antiderivative_half_vector(80);
  const double x = 0.9;
  static const QuadratureRule leg = gauss_legendre(24);
  const double direct = integrate_composite([](double u) { return std::exp(u * u); }, 0.0, x / std::sqrt(2.0), 2, leg);
  EXPECT_NEAR(eval(v, x).real(), direct, 1e-13);
}

TEST(Boundedness, ConstantSymbolHasFlatNorm)
{
  const auto norms = boundedness_probe(EntireSymbol::constant(3.0), {8, 16, 32});
  for (double n : norms) EXPECT_NEAR(n, 3.0, 1e-12);
}

TEST(Boundedness, LinearSymbolGrows)
{
  const auto norms = boundedness_probe(EntireSymbol::from_doubles({0.0, 1.0}), {8, 32});
  EXPECT_GT(norms[1], 1.5 * norms[0]);
}

TEST(EntireSymbols, TailCertificate)
{
  EXPECT_TRUE(EntireSymbol::exp_quadratic(0.25, 80).f2_tail_certified());
  EXPECT_FALSE(EntireSymbol::exp_quadratic(1.0, 80).f2_tail_certified());
  EXPECT_TRUE(EntireSymbol::exp_linear(cplx(1.0, 2.0), 60).f2_tail_certified());
}

TEST(EntireSymbols, ExpLinearEvaluates)
{
  const auto e = EntireSymbol::exp_linear(cplx(0.5, -0.25), 40);
  const cplx u(0.7, 1.1);
  EXPECT_NEAR(std::abs(e(u) - std::exp(cplx(0.5, -0.25) * u)), 0.0, 1e-14);
}
