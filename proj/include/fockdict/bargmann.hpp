#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fockdict/fock_core.hpp"
#include "fockdict/hermite_line.hpp"
#include "fockdict/quadrature.hpp"

namespace fockdict {

/// B h_n = e_n, so the transform is the identity on coefficient sequences.
inline FockVector bargmann_coeff(const LineVector& f) { return FockVector(f.coeffs()); }
inline LineVector inverse_bargmann_coeff(const FockVector& f) { return LineVector(f.coeffs()); }

/// A quadrature value together with its resolution flag.
struct QuadratureValue {
  cplx value;
  bool reliable = true;
};

/**
 * Bf(z) = c int f(x) e^{2xz - x^2 - z^2/2} dx on a Gauss-Hermite rule.
 *
 * The factor e^{2ix Im z} oscillates; beyond |Im z| > nodes/8 the rule no
 * longer resolves it and the value is flagged.
 */
template <class F>
QuadratureValue bargmann_quadrature(F&& f, cplx z, const QuadratureRule& rule)
{
  if (rule.kind != WeightKind::gauss_hermite) throw std::invalid_argument("bargmann_quadrature: needs a Gauss-Hermite rule");
  cplx acc{};
  const cplx shift = -z * z / 2.0;
  for (int k = 0; k < rule.size(); ++k) {
    const double x = rule.nodes[k];
    acc += rule.weights[k] * cplx(f(x)) * std::exp(2.0 * x * z + shift);
  }
  return {kGaussNorm * acc, std::abs(z.imag()) <= rule.size() / 8.0};
}

/**
 * Coefficients c_0..c_N of Bf recovered from quadrature values alone.
 *
 * c_n = sqrt(n!) / (2 pi r^n) int_0^{2pi} Bf(r e^{it}) e^{-int} dt on the
 * circle r = sqrt(max(n, 1)), where |Bf| e^{-r^2/2} and r^n / sqrt(n!) are
 * balanced, so the rounding error stays near machine precision. The
 * circle carries 2N + 8 equally spaced points.
 */
template <class F>
FockVector bargmann_coeffs_quadrature(F&& f, int degree, const QuadratureRule& rule, bool* reliable = nullptr)
{
  if (degree < 0) throw std::invalid_argument("bargmann_coeffs_quadrature: degree must be >= 0");
  const int points = 2 * degree + 8;
  CVector c = CVector::Zero(degree + 1);
  bool ok = true;
  for (int n = 0; n <= degree; ++n) {
    const double r = std::sqrt(std::max(n, 1) * 1.0);
    cplx acc{};
    for (int k = 0; k < points; ++k) {
      const double t = 2.0 * std::numbers::pi * k / points;
      const auto q = bargmann_quadrature(f, std::polar(r, t), rule);
      ok = ok && q.reliable;
      acc += q.value * std::polar(1.0, -n * t);
    }
    // sqrt(n!) / r^n, accumulated as a product of ratios
    double scale = 1.0;
    for (int i = 1; i <= n; ++i) scale *= std::sqrt(static_cast<double>(i)) / r;
    c(n) = acc / static_cast<double>(points) * scale;
  }
  if (reliable) *reliable = ok;
  return FockVector(std::move(c));
}

/**
 * B^{-1}F(x) = c int F(z) e^{2x zbar - x^2 - zbar^2/2} d lambda(z), by the
 * tensor plane rule. Degrees above 32 are flagged as unresolved.
 */
inline QuadratureValue inverse_bargmann_quadrature(const FockVector& F, double x, const PlaneRule& plane)
{
  const cplx value = plane.integrate([&](cplx z) {
    const cplx zb = std::conj(z);
    const cplx expo = 2.0 * x * zb - x * x - zb * zb / 2.0 - std::norm(z);
    return eval(F, z) * std::exp(expo) / std::numbers::pi;
  });
  return {kGaussNorm * value, F.degree() <= 32};
}

/**
 * sup |F(z)| e^{-|z|^2/2} over a polar grid of radius `grid_radius`.
 *
 * Ring spacing is `grid_step`; each ring gets enough angles for an arc step
 * of at most `grid_step`.
 */
inline double fock_sup_norm(const FockVector& F, double grid_radius, double grid_step)
{
  if (!(grid_step > 0.0)) throw std::invalid_argument("fock_sup_norm: grid_step must be positive");
  double best = std::abs(F.coeffs()(0));
  const int rings = static_cast<int>(std::ceil(grid_radius / grid_step));
  for (int i = 1; i <= rings; ++i) {
    const double r = std::min(grid_radius, i * grid_step);
    const int angles = std::max(8, static_cast<int>(std::ceil(2.0 * std::numbers::pi * r / grid_step)));
    for (int j = 0; j < angles; ++j) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / angles);
      best = std::max(best, eval_weighted_abs(F, z));
    }
  }
  return best;
}

/**
 * ||F||_{F^p} = (p / 2pi int |F e^{-|z|^2/2}|^p dA)^{1/p} by midpoint rule on
 * a square grid. Exposed for experimentation; there is no accuracy
 * contract for p other than 2.
 */
inline double fock_p_norm(const FockVector& F, double p, double grid_radius, double grid_step)
{
  if (!(p > 0.0)) throw std::invalid_argument("fock_p_norm: p must be positive");
  const int n = static_cast<int>(std::ceil(2.0 * grid_radius / grid_step));
  const double h = 2.0 * grid_radius / n;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cplx z(-grid_radius + (i + 0.5) * h, -grid_radius + (j + 0.5) * h);
      acc += std::pow(eval_weighted_abs(F, z), p);
    }
  }
  return std::pow(p / (2.0 * std::numbers::pi) * acc * h * h, 1.0 / p);
}

/**
 * Bf(z) e^{-|z|^2/2} up to a unimodular factor, for bounded f.
 *
 * With z = u + iv this equals c int f(x) e^{-(x-u)^2} e^{2iv(x-u)} dx, which
 * is integrated by composite Gauss-Legendre on [u - 8, u + 8] split at the
 * given breakpoints (discontinuities of f).
 */
template <class F>
cplx bargmann_weighted(F&& f, cplx z, const std::vector<double>& breakpoints, int panels_per_piece = 8)
{
  static const QuadratureRule leg = gauss_legendre(24);
  const double u = z.real();
  const double v = z.imag();
  constexpr double kHalfWidth = 8.0;
  std::vector<double> cuts{u - kHalfWidth};
  for (double b : breakpoints) {
    if (b > u - kHalfWidth && b < u + kHalfWidth) cuts.push_back(b);
  }
  cuts.push_back(u + kHalfWidth);
  std::sort(cuts.begin(), cuts.end());
  cplx acc{};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    acc += integrate_composite(
        [&](double x) {
          const double d = x - u;
          return cplx(f(x)) * std::exp(cplx(-d * d, 2.0 * v * d));
        },
        cuts[i], cuts[i + 1], panels_per_piece, leg);
  }
  return kGaussNorm * acc;
}

struct PboundOptions {
  /// Supremum of |f|; estimated on a fine grid of [-10, 10] when absent.
  std::optional<double> sup_norm;
  std::vector<double> breakpoints;
  double grid_radius = 4.0;
  int radial_points = 100;
  int angular_points = 100;
};

struct PboundResult {
  double lhs = 0.0;  // ||Bf||_{F^inf} estimated on the grid
  double rhs = 0.0;  // c sqrt(pi) ||f||_inf
};

/**
 * Checks the endpoint bound ||Bf||_{F^inf} <= c sqrt(pi) ||f||_inf on a
 * polar grid of radial_points x angular_points points.
 */
template <class F>
PboundResult verify_pbound(F&& f, const PboundOptions& opt = {})
{
  double sup = 0.0;
  if (opt.sup_norm) {
    sup = *opt.sup_norm;
  } else {
    for (int i = 0; i <= 20000; ++i) sup = std::max(sup, std::abs(cplx(f(-10.0 + i * 1e-3))));
  }
  double lhs = 0.0;
  for (int i = 0; i < opt.radial_points; ++i) {
    const double r = opt.grid_radius * i / std::max(1, opt.radial_points - 1);
    for (int j = 0; j < opt.angular_points; ++j) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / opt.angular_points);
      lhs = std::max(lhs, std::abs(bargmann_weighted(f, z, opt.breakpoints)));
    }
  }
  return {lhs, kGaussNorm * std::sqrt(std::numbers::pi) * sup};
}

/// Taylor coefficients of c sqrt(pi) e^{z^2/2} (the image of f = 1) in e_n.
inline FockVector constant_image_coeffs(int degree)
{
  CVector c = CVector::Zero(degree + 1);
  double t = kGaussNorm * std::sqrt(std::numbers::pi);
  for (int m = 0; 2 * m <= degree; ++m) {
    c(2 * m) = t;
    // sqrt((2m+2)!)/(2^{m+1}(m+1)!) over sqrt((2m)!)/(2^m m!)
    t *= std::sqrt((2.0 * m + 1.0) * (2.0 * m + 2.0)) / (2.0 * (m + 1.0));
  }
  return FockVector(std::move(c));
}

}  // namespace fockdict
