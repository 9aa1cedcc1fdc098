#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "fockdict/fock_core.hpp"

using namespace fockdict;

namespace {

FockVector random_fock(std::mt19937_64& rng, int degree)
{
  std::normal_distribution<double> g;
  CVector c(degree + 1);
  for (auto& x : c) x = cplx(g(rng), g(rng));
  return FockVector(c);
}

}  // namespace

TEST(FockCore, InnerOrthonormality)
{
  EXPECT_EQ(inner(FockVector::unit(2, 5), FockVector::unit(2, 5)), cplx(1.0));
  EXPECT_EQ(inner(FockVector::unit(1, 5), FockVector::unit(3, 5)), cplx(0.0));
}

TEST(FockCore, InnerPadsShorterVector)
{
  const FockVector a(CVector::Constant(3, cplx(1.0, 1.0)));
  const FockVector b(CVector::Constant(6, cplx(2.0, 0.0)));
  EXPECT_EQ(inner(a, b), cplx(6.0, 6.0));
}

TEST(FockCore, InnerSesquilinear)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_fock(rng, 12), g = random_fock(rng, 12), h = random_fock(rng, 12);
    const cplx s(0.3, -1.7);
    EXPECT_NEAR(std::abs(inner(f, g) - std::conj(inner(g, f))), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(inner(s * f + h, g) - (s * inner(f, g) + inner(h, g))), 0.0, 1e-12);
    EXPECT_GE(inner(f, f).real(), 0.0);
    EXPECT_EQ(inner(f, f).imag(), 0.0);
  }
  EXPECT_EQ(inner(FockVector::zero(4), FockVector::zero(4)), cplx(0.0));
}

TEST(FockCore, EvalConstantAndMonomial)
{
  EXPECT_EQ(eval(FockVector::unit(0, 0), cplx(5.0, 2.0)), cplx(1.0));
  EXPECT_NEAR(std::abs(eval(FockVector::unit(3, 3), 2.0) - 8.0 / std::sqrt(6.0)), 0.0, 1e-14);
}

TEST(FockCore, EvalMatchesDirectSum)
{
  std::mt19937_64 rng(3);
  const auto f = random_fock(rng, 30);
  const cplx z(0.8, -1.1);
  cplx direct{};
  for (int n = 0; n <= 30; ++n) direct += f[n] * std::pow(z, n) / std::sqrt(std::tgamma(n + 1.0));
  EXPECT_NEAR(std::abs(eval(f, z) - direct), 0.0, 1e-12 * std::abs(direct));
}

TEST(FockCore, EvalOverflowGuard)
{
  EXPECT_THROW(eval(FockVector::unit(0, 3), cplx(40.0, 0.0)), std::range_error);
}

TEST(FockCore, KernelVectorAtZero)
{
  const auto k = kernel_vector(0.0, 10, true);
  EXPECT_EQ(k[0], cplx(1.0));
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(k[n], cplx(0.0));
}

TEST(FockCore, KernelUnitNormAndValue)
{
  const auto k = kernel_vector(1.0, 40, true);
  EXPECT_NEAR(inner(k, k).real(), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(eval(k, 1.0) - std::exp(0.5)), 0.0, 1e-10);
}

TEST(FockCore, ReproducingProperty)
{
  // <f, K(., a)> = f(a) exactly for polynomial f of degree <= N
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 5; ++n) {
    const auto e = FockVector::unit(n, n);
    for (cplx a : {cplx(0.3, 0.4), cplx(-1.2, 0.7), cplx(2.0, -1.0)}) {
      EXPECT_NEAR(std::abs(inner(e, kernel_vector(a, n, false)) - eval(e, a)), 0.0, 1e-13 * std::max(1.0, std::abs(eval(e, a))));
    }
  }
  const auto f = random_fock(rng, 20);
  const cplx a(0.9, -0.6);
  EXPECT_NEAR(std::abs(inner(f, kernel_vector(a, 20, false)) - eval(f, a)), 0.0, 1e-12);
}

TEST(FockCore, KernelNormMonotoneWithPoissonDefect)
{
  const cplx a(1.5, 1.0);
  double prev = 0.0;
  for (int n = 0; n <= 60; ++n) {
    const double nsq = kernel_vector(a, n, true).norm_squared();
    EXPECT_GE(nsq, prev);
    EXPECT_NEAR(nsq, 1.0 - kernel_truncation_defect(a, n), 1e-14);
    prev = nsq;
  }
  EXPECT_NEAR(prev, 1.0, 1e-14);
  EXPECT_LT(kernel_truncation_defect(a, 60), 1e-30);
  EXPECT_EQ(kernel_truncation_defect(0.0, 3), 0.0);
}

TEST(FockCore, WeightedAbsIsBoundedForKernels)
{
  // |k_a(z)| e^{-|z|^2/2} = e^{-|z-a|^2/2} <= 1
  const cplx a(1.0, -0.5);
  const auto k = kernel_vector(a, 80, true);
  for (cplx z : {cplx(0.0), cplx(1.0, -0.5), cplx(2.0, 1.0)}) {
    EXPECT_NEAR(eval_weighted_abs(k, z), std::exp(-std::norm(z - a) / 2.0), 1e-12);
  }
}
