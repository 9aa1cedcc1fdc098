#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fockdict/fock_core.hpp"
#include "fockdict/quadrature.hpp"

namespace fockdict {

/// Physicists' Hermite polynomial H_n(y) by the three-term recurrence.
inline double hermite_poly(int n, double y)
{
  if (n < 0) throw std::invalid_argument("hermite_poly: n must be >= 0");
  double h_prev = 1.0;
  if (n == 0) return h_prev;
  double h = 2.0 * y;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * y * h - 2.0 * k * h_prev;
    h_prev = h;
    h = next;
  }
  if (!std::isfinite(h)) throw std::range_error("hermite_poly: value overflows double");
  return h;
}

/**
 * Hermite functions h_0(x) .. h_N(x), each multiplied by e^{shift}.
 *
 * Runs h_{n+1} = (2x h_n - sqrt(n) h_{n-1}) / sqrt(n+1) starting from
 * h_0 = c e^{-x^2}, with the Gaussian kept as a separate log-scale so that
 * neither it nor the polynomial growth leaves the double range. With
 * shift = x^2 the result is the polynomial part h_n(x) e^{x^2}.
 */
inline std::vector<double> hermite_functions_scaled(int degree, double x, double shift)
{
  if (degree < 0) throw std::invalid_argument("hermite_functions: degree must be >= 0");
  std::vector<double> out(degree + 1);
  constexpr double kBig = 1e150;
  const double kLogBig = std::log(kBig);
  double log_scale = std::log(kGaussNorm) - x * x + shift;
  double p_prev = 0.0;
  double p = 1.0;
  for (int n = 0; n <= degree; ++n) {
    out[n] = p * std::exp(log_scale);
    const double next = (2.0 * x * p - std::sqrt(static_cast<double>(n)) * p_prev) / std::sqrt(n + 1.0);
    p_prev = p;
    p = next;
    if (std::abs(p) > kBig) {
      p /= kBig;
      p_prev /= kBig;
      log_scale += kLogBig;
    }
  }
  return out;
}

inline std::vector<double> hermite_functions(int degree, double x) { return hermite_functions_scaled(degree, x, 0.0); }

/// h_n(x) = c / sqrt(2^n n!) e^{-x^2} H_n(sqrt(2) x).
inline double hermite_function(int n, double x)
{
  if (n < 0) throw std::invalid_argument("hermite_function: n must be >= 0");
  return hermite_functions(n, x)[n];
}

/// Evaluates sum_n b_n h_n(x).
inline cplx eval_line(const LineVector& f, double x)
{
  const auto h = hermite_functions(f.degree(), x);
  cplx acc{};
  for (int n = 0; n <= f.degree(); ++n) acc += f.coeffs()(n) * h[n];
  return acc;
}

struct LineProjection {
  LineVector coeffs;
  double tail_ratio = 0.0;
  /// Set when the top quarter of the coefficients carries more than 1e-6 of
  /// the norm; the expansion is then not resolved at this degree.
  bool under_resolved = false;
};

namespace detail {

inline LineProjection finish_projection(CVector c)
{
  const Eigen::Index n = c.size();
  const Eigen::Index tail = std::max<Eigen::Index>(1, n / 4);
  const double total = c.norm();
  const double tail_norm = c.tail(tail).norm();
  LineProjection out{LineVector(std::move(c)), 0.0, false};
  out.tail_ratio = total > 0.0 ? tail_norm / total : 0.0;
  out.under_resolved = out.tail_ratio > 1e-6;
  return out;
}

}  // namespace detail

/**
 * Hermite coefficients b_n = int f(x) h_n(x) dx of a function supplied as
 * fe(x) = f(x) e^{x^2}.
 *
 * The Gauss-Hermite rule is rescaled to the weight e^{-2x^2}, the natural
 * weight of the basis: for f = (polynomial) * e^{-x^2} the rule is exact.
 */
template <class FE>
LineProjection project_line_premultiplied(FE&& fe, int degree, const QuadratureRule& rule)
{
  if (rule.kind != WeightKind::gauss_hermite) throw std::invalid_argument("project_line: needs a Gauss-Hermite rule");
  CVector c = CVector::Zero(degree + 1);
  const double s = 1.0 / std::numbers::sqrt2;
  for (int k = 0; k < rule.size(); ++k) {
    const double t = rule.nodes[k] * s;
    const double w = rule.weights[k] * s;
    const auto h = hermite_functions_scaled(degree, t, t * t);
    const cplx v = w * cplx(fe(t));
    for (int n = 0; n <= degree; ++n) c(n) += v * h[n];
  }
  return detail::finish_projection(std::move(c));
}

/// Hermite coefficients of a callable f : R -> C (f is multiplied by e^{x^2}
/// at the scaled nodes, all of which satisfy x^2 < 250).
template <class F>
LineProjection project_line(F&& f, int degree, const QuadratureRule& rule)
{
  return project_line_premultiplied([&](double t) { return cplx(f(t)) * std::exp(t * t); }, degree, rule);
}

/// Default node count for smooth inputs: 4 N, capped by the rule limit.
inline int default_line_nodes(int degree) { return std::clamp(4 * degree, 32, 256); }

/**
 * Hermite coefficients of a function supported on [lo, hi], by composite
 * Gauss-Legendre quadrature on the support. Meant for discontinuous inputs
 * such as the box window, where Gauss-Hermite converges only algebraically.
 */
template <class F>
LineProjection project_line_interval(F&& f, double lo, double hi, int degree, int panels = 16, int points = 32)
{
  if (!(hi > lo)) throw std::invalid_argument("project_line_interval: empty interval");
  const auto leg = gauss_legendre(points);
  CVector c = CVector::Zero(degree + 1);
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * h;
    for (int k = 0; k < leg.size(); ++k) {
      const double x = mid + h / 2.0 * leg.nodes[k];
      const cplx v = (h / 2.0 * leg.weights[k]) * cplx(f(x));
      const auto hn = hermite_functions(degree, x);
      for (int n = 0; n <= degree; ++n) c(n) += v * hn[n];
    }
  }
  return detail::finish_projection(std::move(c));
}

}  // namespace fockdict
