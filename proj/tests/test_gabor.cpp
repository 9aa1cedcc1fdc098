#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fockdict/gabor.hpp"

using namespace fockdict;

namespace {

// Brute-force count over a generous index box.
long long brute_count(const GaborLattice& L, cplx center, double R)
{
  long long c = 0;
  const int span = static_cast<int>(std::ceil((R + std::abs(center) + std::abs(L.shift)) / std::min(L.a, L.row_spacing()))) + 2;
  for (int m = -span; m <= span; ++m) {
    for (int n = -span; n <= span; ++n) {
      const cplx z = L.shift + cplx(n * L.a, -std::numbers::pi * m * L.b);
      c += std::abs(z - center) <= R ? 1 : 0;
    }
  }
  return c;
}

}  // namespace

TEST(Lattice, DensityFormula)
{
  EXPECT_NEAR(GaborLattice(1.0, 1.0).density(), 1.0 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(GaborLattice(0.5, 0.5).density(), 4.0 / std::numbers::pi, 1e-15);
  EXPECT_THROW(GaborLattice(0.0, 1.0), std::invalid_argument);
}

TEST(Lattice, DiskCountMatchesBruteForce)
{
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const GaborLattice L(0.4 + 0.1 * (trial % 7), 0.3 + 0.05 * (trial % 5), cplx(u(rng) / 3.0, u(rng) / 3.0));
    const cplx c(u(rng), u(rng));
    const double R = 1.0 + trial * 0.2;
    EXPECT_EQ(L.count_in_disk(c, R), brute_count(L, c, R)) << trial;
  }
}

TEST(Lattice, PointsInDiskAgreeWithCount)
{
  const GaborLattice L(0.7, 0.4, cplx(0.1, -0.2));
  const auto pts = L.points_in_disk(6.0);
  EXPECT_EQ(static_cast<long long>(pts.size()), L.count_in_disk(0.0, 6.0));
  for (cplx z : pts) EXPECT_LE(std::abs(z), 6.0);
}

TEST(Lattice, ShiftMovesByLatticeUnits)
{
  const GaborLattice L(0.5, 0.25);
  const auto S = L.shifted(1.0, 1.0);
  EXPECT_NEAR(std::abs(S.shift - cplx(0.5, -std::numbers::pi * 0.25)), 0.0, 1e-15);
  EXPECT_EQ(S.count_in_disk(S.shift, 3.0), L.count_in_disk(0.0, 3.0));
}

TEST(Density, LargeDiskEstimateApproachesDensity)
{
  const GaborLattice L(0.5, 0.5);
  const auto rep = density_estimate(L, {10.0, 25.0, 50.0}, center_grid(20.0, 5));
  EXPECT_NEAR(rep.d_minus, L.density(), 0.02 * L.density());
  EXPECT_NEAR(rep.d_plus, L.density(), 0.02 * L.density());
  for (std::size_t i = 0; i < rep.R_values.size(); ++i) EXPECT_LE(rep.lower_est[i], rep.upper_est[i]);
}

TEST(Density, UnionDoublesDensity)
{
  const GaborLattice L(1.0, 1.0);
  const LatticeUnion U{{L, L.shifted(0.5, 0.5)}};
  const auto rep = density_estimate(U, {50.0}, center_grid(5.0, 3));
  EXPECT_NEAR(rep.d_minus, 2.0 / std::numbers::pi, 0.02);
}

TEST(Density, RefusesDisksLeavingFiniteRegion)
{
  const auto set = PointSet::from_lattice(GaborLattice(0.5, 0.5), 10.0);
  EXPECT_THROW(density_estimate(set, {8.0}, {cplx(5.0, 0.0)}), std::out_of_range);
  EXPECT_NO_THROW(density_estimate(set, {4.0}, {cplx(1.0, 0.0)}));
  EXPECT_THROW(density_estimate(set, {}, {cplx(0.0)}), std::invalid_argument);
}

TEST(PointSets, RejectDuplicatesAndMeasureGap)
{
  EXPECT_THROW(PointSet({cplx(0.0), cplx(1.0), cplx(0.0)}), std::invalid_argument);
  const PointSet p({cplx(0.0), cplx(3.0), cplx(0.0, 0.5)});
  const auto s = separation_check(p);
  EXPECT_TRUE(s.separated);
  EXPECT_NEAR(s.min_gap, 0.5, 1e-15);
  EXPECT_EQ(p.count_in_disk(0.0, 1.0), 2);
}

TEST(FramePredicates, LatticeCriterion)
{
  EXPECT_TRUE(lattice_frame_predicate(0.5, 1.0));
  EXPECT_FALSE(lattice_frame_predicate(1.0, 1.0));
  EXPECT_FALSE(lattice_frame_predicate(2.0, 1.0));
  EXPECT_THROW(lattice_frame_predicate(-1.0, 1.0), std::invalid_argument);
}

TEST(FramePredicates, DensityVerdicts)
{
  const auto centers = center_grid(10.0, 3);
  const auto dense = density_estimate(GaborLattice(0.5, 1.0), {30.0, 50.0}, centers);
  const auto sparse = density_estimate(GaborLattice(1.5, 1.0), {30.0, 50.0}, centers);
  const auto critical = density_estimate(GaborLattice(1.0, 1.0), {30.0, 50.0}, centers);
  EXPECT_EQ(density_frame_predicate(dense, true), FrameVerdict::frame);
  EXPECT_EQ(density_frame_predicate(dense, false), FrameVerdict::undecided);
  EXPECT_EQ(density_frame_predicate(sparse, true), FrameVerdict::not_frame);
  EXPECT_EQ(density_frame_predicate(critical, true), FrameVerdict::undecided);
  EXPECT_STREQ(to_string(FrameVerdict::not_frame), "not-frame");
  const auto small = density_estimate(GaborLattice(0.5, 1.0), {10.0}, centers);
  EXPECT_THROW(density_frame_predicate(small, true), std::invalid_argument);
}

TEST(FrameBoundsFinite, DenseLatticeHasPositiveLowerBound)
{
  const auto set = PointSet::from_lattice(GaborLattice(0.5, 0.5), 6.0);
  const auto fb = frame_bounds_finite(set, 96, 8);
  EXPECT_GT(fb.lower, 0.1);
  EXPECT_GE(fb.upper, fb.lower);
  // upper bound of a normalized-kernel frame is at most the number of points
  EXPECT_LE(fb.upper, static_cast<double>(set.size()));
}

TEST(FrameBoundsFinite, SinglePointMatchesRankOne)
{
  // one kernel k_0 = e_0: S restricted to the core is diag(1, 0, ...)
  const PointSet one({cplx(0.0)});
  const auto fb = frame_bounds_finite(one, 8, 3);
  EXPECT_NEAR(fb.upper, 1.0, 1e-15);
  EXPECT_NEAR(fb.lower, 0.0, 1e-15);
  EXPECT_THROW(frame_bounds_finite(one, 8, 5), std::invalid_argument);
  EXPECT_THROW(frame_bounds_finite(PointSet({cplx(3.0, 0.0)}), 8, 2), std::invalid_argument);
}

TEST(BoxWindow, CoefficientsReproduceTransform)
{
  const auto F = box_window_coeffs(160);
  for (cplx z : {cplx(0.0), cplx(0.4, 0.3), cplx(1.0, -0.5)}) {
    EXPECT_NEAR(std::abs(eval(F, z) - box_window_fock(z)), 0.0, 1e-3);
  }
  EXPECT_NEAR(F.norm(), 1.0, 0.05);
  EXPECT_LT(F.norm(), 1.0);
}

TEST(BoxWindow, GramIsHermitianWithUnitishDiagonal)
{
  const auto g = box_frame_gram({-1, 0, 1}, {-1, 0, 1}, 96);
  EXPECT_EQ(g.points.size(), 9u);
  EXPECT_LT((g.gram - g.gram.adjoint()).cwiseAbs().maxCoeff(), 1e-13);
  const double d0 = g.gram(4, 4).real();
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(g.gram(i, i).real(), d0, 0.05);
  // disjoint supports in time: n and n+1 translates are orthogonal on the line
  EXPECT_LT(std::abs(g.gram(3, 4)), 0.1);
}

TEST(KernelGram, ClosedFormMatchesWeylImagesOfVacuum)
{
  const std::vector<cplx> pts{cplx(0.0), cplx(0.5, 0.5), cplx(-1.0, 0.3)};
  const auto closed = kernel_gram_closed_form(pts);
  CMatrix direct(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) direct(i, j) = inner(kernel_vector(pts[i], 80, true), kernel_vector(pts[j], 80, true));
  }
  EXPECT_LT((closed - direct).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Independence, DistinctTranslatesOfGaussian)
{
  const auto r = linear_independence_check(FockVector::unit(0, 0), {cplx(0.0), cplx(1.0, 0.0), cplx(0.0, 1.0), cplx(1.0, 1.0)}, 64);
  EXPECT_TRUE(r.independent);
  EXPECT_TRUE(r.resolved);
  EXPECT_GT(r.ratio, 1e-4);
  EXPECT_THROW(linear_independence_check(FockVector::unit(0, 0), {cplx(0.0), cplx(0.0)}, 16), std::invalid_argument);
  EXPECT_THROW(linear_independence_check(FockVector::unit(0, 0), std::vector<cplx>(13), 16), std::invalid_argument);
}
