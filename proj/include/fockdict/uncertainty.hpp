#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "fockdict/fock_core.hpp"
#include "fockdict/operators.hpp"

namespace fockdict {

/// S1 f = f' + z f.
inline OperatorMatrix s1_matrix(int degree)
{
  const auto md = md_matrices(degree);
  return {md.D.entries + md.M.entries, Basis::fock, "S1", true};
}

/// S2 f = i (f' - z f).
inline OperatorMatrix s2_matrix(int degree)
{
  const auto md = md_matrices(degree);
  return {cplx(0.0, 1.0) * (md.D.entries - md.M.entries), Basis::fock, "S2", true};
}

struct UncertaintyValue {
  double lhs = 0.0;  // ||f' + z f - a f|| ||f' - z f - i b f||
  double rhs = 0.0;  // ||f||^2
  /// False when f's top two coefficients exceed 1e-8 ||f||, i.e. when f
  /// looks like a truncated series rather than a padded one.
  bool reliable = true;

  double gap() const { return lhs - rhs; }
};

/**
 * Both sides of ||f' + z f - a f|| ||f' - z f - i b f|| >= ||f||^2.
 *
 * In terms of S1, S2 the left side is ||(S1 - a) f|| ||(S2 + b) f||, since
 * f' - z f - i b f = -i (S2 + b) f. The products are formed one degree
 * above f so that z f is never cut off.
 */
inline UncertaintyValue uncertainty_product(const FockVector& f, double a, double b)
{
  const int n = f.degree();
  const double norm = f.norm();
  UncertaintyValue out;
  if (n >= 1) {
    out.reliable = std::abs(f[n - 1]) <= 1e-8 * norm && std::abs(f[n]) <= 1e-8 * norm;
  } else {
    out.reliable = true;
  }
  const CVector v = f.resized(n + 1).coeffs();
  const auto md = md_matrices(n + 1);
  const CVector df = md.D.entries * v;
  const CVector zf = md.M.entries * v;
  const CVector first = df + zf - a * v;
  const CVector second = df - zf - cplx(0.0, b) * v;
  out.lhs = first.norm() * second.norm();
  out.rhs = norm * norm;
  return out;
}

/// lhs - rhs of the uncertainty inequality (nonnegative up to rounding).
inline double uncertainty_gap(const FockVector& f, double a, double b) { return uncertainty_product(f, a, b).gap(); }

/**
 * Parameters of the equality case f(z) = C exp(alpha z^2 + beta z) with
 * alpha = (c - 1)/(2(c + 1)) and beta = (a + i b c)/(c + 1).
 */
struct ExtremalParams {
  cplx C{1.0, 0.0};
  double c = 1.0;
  double a = 0.0;
  double b = 0.0;

  double alpha() const { return (c - 1.0) / (2.0 * (c + 1.0)); }
  cplx beta() const { return cplx(a, b * c) / (c + 1.0); }
};

namespace detail {

inline FockVector extremal_series(const ExtremalParams& p, int degree)
{
  if (!(p.c > 0.0)) throw std::invalid_argument("extremal_coeffs: c must be positive");
  if (degree < 0) throw std::invalid_argument("extremal_coeffs: degree must be >= 0");
  // f' = (2 alpha z + beta) f gives c_{n+1} = (beta c_n + 2 alpha sqrt(n) c_{n-1}) / sqrt(n+1).
  const double alpha = p.alpha();
  const cplx beta = p.beta();
  CVector c = CVector::Zero(degree + 1);
  c(0) = p.C;
  if (degree >= 1) c(1) = beta * p.C;
  for (int n = 1; n < degree; ++n) c(n + 1) = (beta * c(n) + 2.0 * alpha * std::sqrt(static_cast<double>(n)) * c(n - 1)) / std::sqrt(n + 1.0);
  return FockVector(std::move(c));
}

inline bool extremal_tail_ok(const FockVector& f, double tol)
{
  const int n = f.degree();
  const double top = n >= 1 ? std::max(std::abs(f[n]), std::abs(f[n - 1])) : 0.0;
  return top <= tol * f.norm();
}

}  // namespace detail

/**
 * e_n-coefficients of the extremal function, truncated at N. Throws
 * ResolutionError unless the last two coefficients are below 1e-10 ||f||;
 * the needed N grows as |alpha| approaches 1/2.
 */
inline FockVector extremal_coeffs(const ExtremalParams& p, int degree)
{
  auto f = detail::extremal_series(p, degree);
  if (!detail::extremal_tail_ok(f, 1e-10)) throw ResolutionError("extremal_coeffs: tail not below 1e-10 ||f||; increase the degree");
  return f;
}

/// Smallest multiple of 8 (up to max_degree) at which extremal_coeffs succeeds.
inline int certified_extremal_degree(const ExtremalParams& p, int max_degree = 2000)
{
  for (int n = 8; n <= max_degree; n += 8) {
    if (detail::extremal_tail_ok(detail::extremal_series(p, n), 1e-10)) return n;
  }
  throw ResolutionError("certified_extremal_degree: no certified degree below the limit");
}

}  // namespace fockdict
