#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "fockdict/bargmann.hpp"
#include "fockdict/fock_core.hpp"
#include "fockdict/hermite_line.hpp"
#include "fockdict/operators.hpp"
#include "fockdict/quadrature.hpp"

namespace fockdict {

/**
 * Time-frequency lattice {n a - i pi m b + shift : n, m in Z}.
 *
 * The point n a - i pi m b is the Fock-side displacement of M_{mb} T_{na},
 * so the lattice has density 1/(pi a b).
 */
struct GaborLattice {
  double a = 1.0;
  double b = 1.0;
  cplx shift{};

  GaborLattice(double a_, double b_, cplx shift_ = {}) : a(a_), b(b_), shift(shift_)
  {
    if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("GaborLattice: a and b must be positive");
  }

  /// The same lattice moved by (da, db) in time-frequency coordinates.
  GaborLattice shifted(double da, double db) const { return {a, b, shift + cplx(da * a, -std::numbers::pi * db * b)}; }

  double row_spacing() const { return std::numbers::pi * b; }
  double density() const { return 1.0 / (std::numbers::pi * a * b); }
  double coverage_radius() const { return std::numeric_limits<double>::infinity(); }

  /// Exact number of lattice points in the closed disk |z - center| <= R, counted row by row.
  long long count_in_disk(cplx center, double R) const
  {
    const double h = row_spacing();
    // Row m sits at Im z = Im shift - m h.
    const double y0 = shift.imag() - center.imag();
    const long long m_lo = static_cast<long long>(std::ceil((y0 - R) / h));
    const long long m_hi = static_cast<long long>(std::floor((y0 + R) / h));
    long long count = 0;
    for (long long m = m_lo; m <= m_hi; ++m) {
      const double dy = y0 - static_cast<double>(m) * h;
      const double w2 = R * R - dy * dy;
      if (w2 < 0.0) continue;
      const double w = std::sqrt(w2);
      const double x0 = shift.real() - center.real();
      const long long n_lo = static_cast<long long>(std::ceil((-w - x0) / a));
      const long long n_hi = static_cast<long long>(std::floor((w - x0) / a));
      if (n_hi >= n_lo) count += n_hi - n_lo + 1;
    }
    return count;
  }

  /// All lattice points with |z| <= radius.
  std::vector<cplx> points_in_disk(double radius) const
  {
    std::vector<cplx> out;
    const double h = row_spacing();
    const long long m_lo = static_cast<long long>(std::ceil((shift.imag() - radius) / h));
    const long long m_hi = static_cast<long long>(std::floor((shift.imag() + radius) / h));
    for (long long m = m_lo; m <= m_hi; ++m) {
      const double y = shift.imag() - static_cast<double>(m) * h;
      const double w2 = radius * radius - y * y;
      if (w2 < 0.0) continue;
      const double w = std::sqrt(w2);
      const long long n_lo = static_cast<long long>(std::ceil((-w - shift.real()) / a));
      const long long n_hi = static_cast<long long>(std::floor((w - shift.real()) / a));
      for (long long n = n_lo; n <= n_hi; ++n) out.emplace_back(shift.real() + static_cast<double>(n) * a, y);
    }
    return out;
  }
};

/// Union of finitely many lattices, counted as a multiset.
struct LatticeUnion {
  std::vector<GaborLattice> parts;

  double coverage_radius() const { return std::numeric_limits<double>::infinity(); }

  long long count_in_disk(cplx center, double R) const
  {
    long long count = 0;
    for (const auto& p : parts) count += p.count_in_disk(center, R);
    return count;
  }
};

/// Minimum pairwise distance of a finite set (sweep over points sorted by real part).
inline double min_pairwise_distance(std::vector<cplx> pts)
{
  if (pts.size() < 2) return std::numeric_limits<double>::infinity();
  std::sort(pts.begin(), pts.end(), [](cplx x, cplx y) { return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag()); });
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size() && pts[j].real() - pts[i].real() < best; ++j) {
      best = std::min(best, std::abs(pts[j] - pts[i]));
    }
  }
  return best;
}

/**
 * Finite sequence of distinct points.
 *
 * Points closer than `kDistinctness` are rejected. `region_radius`, when
 * set, is the radius of the disk around 0 that the set is meant to fill;
 * density estimates refuse disks that leave it.
 */
class PointSet {
 public:
  static constexpr double kDistinctness = 1e-9;

  PointSet() = default;

  explicit PointSet(std::vector<cplx> points, std::optional<double> region_radius = std::nullopt,
                    std::optional<GaborLattice> generator = std::nullopt)
      : points_(std::move(points)), region_radius_(region_radius), generator_(generator)
  {
    min_gap_ = min_pairwise_distance(points_);
    if (min_gap_ <= kDistinctness) throw std::invalid_argument("PointSet: points must be pairwise distinct");
  }

  /// Lattice points clipped to |z| <= radius.
  static PointSet from_lattice(const GaborLattice& lattice, double radius)
  {
    return PointSet(lattice.points_in_disk(radius), radius, lattice);
  }

  const std::vector<cplx>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const std::optional<GaborLattice>& generator() const { return generator_; }
  double min_gap() const { return min_gap_; }

  double coverage_radius() const { return region_radius_.value_or(std::numeric_limits<double>::infinity()); }

  long long count_in_disk(cplx center, double R) const
  {
    long long count = 0;
    for (cplx z : points_) count += std::abs(z - center) <= R ? 1 : 0;
    return count;
  }

 private:
  std::vector<cplx> points_;
  std::optional<double> region_radius_;
  std::optional<GaborLattice> generator_;
  double min_gap_ = std::numeric_limits<double>::infinity();
};

template <class Z>
concept DiskCountable = requires(const Z& z, cplx c, double r) {
  { z.count_in_disk(c, r) } -> std::convertible_to<long long>;
  { z.coverage_radius() } -> std::convertible_to<double>;
};

struct DensityReport {
  std::vector<double> R_values;
  std::vector<double> lower_est;
  std::vector<double> upper_est;
  double d_minus = 0.0;  // lower estimate at the largest R
  double d_plus = 0.0;   // upper estimate at the largest R
};

/// Square grid of per_axis x per_axis centers on [-extent, extent]^2.
inline std::vector<cplx> center_grid(double extent, int per_axis)
{
  if (per_axis < 1) throw std::invalid_argument("center_grid: need at least one point per axis");
  std::vector<cplx> out;
  for (int i = 0; i < per_axis; ++i) {
    for (int j = 0; j < per_axis; ++j) {
      const double u = per_axis == 1 ? 0.0 : -extent + 2.0 * extent * i / (per_axis - 1);
      const double v = per_axis == 1 ? 0.0 : -extent + 2.0 * extent * j / (per_axis - 1);
      out.emplace_back(u, v);
    }
  }
  return out;
}

/**
 * Beurling density estimates: for each R, the inf and sup over the centers
 * of |Z cap B(z, R)| / (pi R^2).
 */
template <DiskCountable Z>
DensityReport density_estimate(const Z& set, const std::vector<double>& R_values, const std::vector<cplx>& centers)
{
  if (R_values.empty() || centers.empty()) throw std::invalid_argument("density_estimate: need radii and centers");
  double reach = 0.0;
  for (cplx c : centers) reach = std::max(reach, std::abs(c));
  DensityReport rep;
  for (double R : R_values) {
    if (!(R > 0.0)) throw std::invalid_argument("density_estimate: radii must be positive");
    if (R + reach > set.coverage_radius()) throw std::out_of_range("density_estimate: disk leaves the region covered by the point set");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (cplx c : centers) {
      const double d = static_cast<double>(set.count_in_disk(c, R)) / (std::numbers::pi * R * R);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    rep.R_values.push_back(R);
    rep.lower_est.push_back(lo);
    rep.upper_est.push_back(hi);
  }
  const auto top = std::max_element(rep.R_values.begin(), rep.R_values.end()) - rep.R_values.begin();
  rep.d_minus = rep.lower_est[top];
  rep.d_plus = rep.upper_est[top];
  return rep;
}

struct SeparationResult {
  bool separated = false;
  double min_gap = 0.0;
};

inline SeparationResult separation_check(const PointSet& set)
{
  const double gap = set.min_gap();
  return {gap > PointSet::kDistinctness, gap};
}

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/**
 * Frame bounds of {k_z : z in Z} restricted to span{e_0..e_core}.
 *
 * Assembles S = sum_z k_z k_z^* at truncation N and returns the extreme
 * eigenvalues of its leading (core+1) x (core+1) block, i.e. the extreme
 * Rayleigh quotients of sum |f(z)|^2 e^{-|z|^2} over the core polynomials.
 */
inline FrameBounds frame_bounds_finite(const PointSet& set, int degree, int core_degree)
{
  if (core_degree < 0 || 2 * core_degree > degree) throw std::invalid_argument("frame_bounds_finite: core degree must lie in [0, N/2]");
  const int n1 = degree + 1;
  CMatrix s = CMatrix::Zero(n1, n1);
  for (cplx z : set.points()) {
    if (std::norm(z) > degree / 2.0 + 1e-12) throw std::invalid_argument("frame_bounds_finite: point outside |z|^2 <= N/2");
    if (kernel_truncation_defect(z, degree) > 1e-8) throw ResolutionError("frame_bounds_finite: kernel not resolved at this degree");
    const CVector k = kernel_vector(z, degree, true).coeffs();
    s.noalias() += k * k.adjoint();
  }
  const CMatrix core = s.topLeftCorner(core_degree + 1, core_degree + 1);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(core, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return {std::max(0.0, ev.minCoeff()), ev.maxCoeff()};
}

/// {M_{mb} T_{na} g} with the Gaussian window is a frame iff ab < 1.
inline bool lattice_frame_predicate(double a, double b)
{
  if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("lattice_frame_predicate: a and b must be positive");
  return a * b < 1.0;
}

enum class FrameVerdict { frame, not_frame, undecided };

inline const char* to_string(FrameVerdict v)
{
  switch (v) {
    case FrameVerdict::frame: return "frame";
    case FrameVerdict::not_frame: return "not-frame";
    default: return "undecided";
  }
}

/**
 * Sampling verdict from a density report: frame when the set is separated
 * and D^- exceeds (1 + margin)/pi, not a frame when D^- is below
 * (1 - margin)/pi, undecided in between. The report must reach R >= 30.
 */
inline FrameVerdict density_frame_predicate(const DensityReport& report, bool separated, double margin = 0.1)
{
  if (report.R_values.empty() || *std::max_element(report.R_values.begin(), report.R_values.end()) < 30.0)
    throw std::invalid_argument("density_frame_predicate: report must include R >= 30");
  const double critical = 1.0 / std::numbers::pi;
  if (separated && report.d_minus > critical * (1.0 + margin)) return FrameVerdict::frame;
  if (report.d_minus < critical * (1.0 - margin)) return FrameVerdict::not_frame;
  return FrameVerdict::undecided;
}

// --- Box window -------------------------------------------------------------

/// B chi_[0,1) (z) = c int_0^1 e^{2xz - x^2 - z^2/2} dx by composite Gauss-Legendre.
inline cplx box_window_fock(cplx z)
{
  static const QuadratureRule leg = gauss_legendre(24);
  const cplx half = z * z / 2.0;
  return kGaussNorm * integrate_composite([&](double x) { return std::exp(2.0 * x * z - x * x - half); }, 0.0, 1.0, 4, leg);
}

/// Coefficients of B chi_[0,1) on e_0..e_N (piecewise Legendre projection on the support).
inline FockVector box_window_coeffs(int degree)
{
  return bargmann_coeff(project_line_interval([](double) { return 1.0; }, 0.0, 1.0, degree).coeffs);
}

struct GramResult {
  CMatrix gram;                 // gram(i, j) = <v_i, v_j>
  std::vector<cplx> points;     // displacement of each element, in order
  bool resolved = true;
};

/**
 * Gram matrix of f_mn = W_{z_mn} f, z_mn = n - m pi i, f the box window,
 * for m in m_values and n in n_values (m outer, n inner).
 */
inline GramResult box_frame_gram(const std::vector<int>& m_values, const std::vector<int>& n_values, int degree)
{
  const auto f = box_window_coeffs(degree);
  GramResult out;
  std::vector<CVector> vs;
  for (int m : m_values) {
    for (int n : n_values) {
      const cplx z(n, -std::numbers::pi * m);
      if (std::norm(z) > degree / 2.0) throw std::invalid_argument("box_frame_gram: |z_mn|^2 must not exceed N/2");
      const auto w = weyl_matrix(z, degree);
      out.resolved = out.resolved && w.resolved;
      out.points.push_back(z);
      vs.push_back(w.entries * f.coeffs());
    }
  }
  const auto k = static_cast<Eigen::Index>(vs.size());
  out.gram.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) out.gram(i, j) = vs[j].dot(vs[i]);
  }
  return out;
}

/// Closed-form Gram of normalized kernels: <k_{z_i}, k_{z_j}> = e^{conj(z_i) z_j - (|z_i|^2 + |z_j|^2)/2}.
inline CMatrix kernel_gram_closed_form(const std::vector<cplx>& points)
{
  const auto k = static_cast<Eigen::Index>(points.size());
  CMatrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const cplx zi = points[i], zj = points[j];
      g(i, j) = std::exp(std::conj(zi) * zj - (std::norm(zi) + std::norm(zj)) / 2.0);
    }
  }
  return g;
}

struct IndependenceResult {
  bool independent = false;
  double min_singular = 0.0;
  double ratio = 0.0;  // min / max singular value of the Gram matrix
  bool resolved = true;
};

/**
 * Numerical evidence on whether {W_{z_k} f} is linearly independent: the
 * smallest singular value of their Gram matrix relative to the largest.
 */
inline IndependenceResult linear_independence_check(const FockVector& f, const std::vector<cplx>& points, int degree)
{
  if (points.empty() || points.size() > 12) throw std::invalid_argument("linear_independence_check: need 1 to 12 points");
  const PointSet distinct(points);
  IndependenceResult out;
  std::vector<CVector> vs;
  for (cplx z : distinct.points()) {
    const auto w = weyl_matrix(z, degree);
    out.resolved = out.resolved && w.resolved;
    vs.push_back(w.entries * f.resized(degree).coeffs());
  }
  const auto k = static_cast<Eigen::Index>(vs.size());
  CMatrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) g(i, j) = vs[j].dot(vs[i]);
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(g, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  out.min_singular = std::max(0.0, ev.minCoeff());
  out.ratio = top > 0.0 ? out.min_singular / top : 0.0;
  out.independent = out.ratio > 1e-10;
  return out;
}

}  // namespace fockdict
