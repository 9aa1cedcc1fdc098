#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fockdict/bargmann.hpp"
#include "fockdict/fock_core.hpp"
#include "fockdict/hermite_line.hpp"
#include "fockdict/quadrature.hpp"

namespace fockdict {

enum class Basis { fock, hermite };

/**
 * Dense matrix of an operator on span{e_0..e_N} (or span{h_0..h_N}).
 *
 * Column n holds the coefficients of the image of the n-th basis vector.
 * `resolved` is cleared when the truncation is known to distort the
 * operator beyond its interior block.
 */
struct OperatorMatrix {
  CMatrix entries;
  Basis basis = Basis::fock;
  std::string name;
  bool resolved = true;

  int degree() const { return static_cast<int>(entries.rows()) - 1; }

  template <class Tag>
  BasisVector<Tag> apply(const BasisVector<Tag>& v) const
  {
    return BasisVector<Tag>(entries * v.resized(degree()).coeffs());
  }
};

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

/// max |m_ij| over the leading size x size block.
inline double interior_max_abs(const CMatrix& m, int size)
{
  size = std::min<int>(size, static_cast<int>(m.rows()));
  if (size <= 0) return 0.0;
  return m.topLeftCorner(size, size).cwiseAbs().maxCoeff();
}

/// ||M^* M - I|| in max-norm over the leading size x size block.
inline double unitarity_residual(const CMatrix& m, int size)
{
  const CMatrix g = m.adjoint() * m - CMatrix::Identity(m.cols(), m.cols());
  return interior_max_abs(g, size);
}

// --- Fourier transform and rotations -------------------------------------

/// U_theta f(z) = f(e^{i theta} z): c_n -> e^{i n theta} c_n.
inline FockVector rotation(double theta, const FockVector& f)
{
  CVector c = f.coeffs();
  for (Eigen::Index n = 0; n < c.size(); ++n) c(n) *= std::polar(1.0, theta * static_cast<double>(n));
  return FockVector(std::move(c));
}

namespace detail {

inline cplx i_power(Eigen::Index n)
{
  switch (n % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace detail

/// Fourier transform on F^2: Tf(z) = f(iz), i.e. c_n -> i^n c_n (exact).
inline FockVector fourier_fock(const FockVector& f)
{
  CVector c = f.coeffs();
  for (Eigen::Index n = 0; n < c.size(); ++n) c(n) *= detail::i_power(n);
  return FockVector(std::move(c));
}

inline FockVector inverse_fourier_fock(const FockVector& f)
{
  CVector c = f.coeffs();
  for (Eigen::Index n = 0; n < c.size(); ++n) c(n) *= detail::i_power(3 * n);
  return FockVector(std::move(c));
}

/// Projection onto the i^k eigenspace: keeps indices n = k (mod 4).
inline FockVector spectral_projection(int k, const FockVector& f)
{
  if (k < 0 || k > 3) throw std::invalid_argument("spectral_projection: k must be in 0..3");
  CVector c = f.coeffs();
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    if (n % 4 != k) c(n) = 0.0;
  }
  return FockVector(std::move(c));
}

/**
 * Fourier transform on the line, F(f)(x) = pi^{-1/2} int f(t) e^{2ixt} dt,
 * with f supplied as fe(t) = f(t) e^{t^2} (Gauss-Hermite rule).
 */
template <class FE>
cplx line_fourier_premultiplied(FE&& fe, double x, const QuadratureRule& rule)
{
  cplx acc{};
  for (int k = 0; k < rule.size(); ++k) {
    const double t = rule.nodes[k];
    acc += rule.weights[k] * cplx(fe(t)) * std::polar(1.0, 2.0 * x * t);
  }
  return acc / std::sqrt(std::numbers::pi);
}

// --- Weyl operators ---------------------------------------------------------

/**
 * Matrix of W_a f(z) = f(z - a) e^{z abar - |a|^2/2} on span{e_0..e_N}.
 *
 * Expanding (z-a)^n e^{z abar} gives
 *   <W_a e_n, e_p> = e^{-|a|^2/2} sum_j (-a)^{n-j} abar^{p-j} sqrt(n! p!) / (j! (n-j)! (p-j)!),
 * and the finite sum over j is an associated Laguerre polynomial:
 *   p >= n:  e^{-|a|^2/2} sqrt(n!/p!) abar^{p-n} L_n^{(p-n)}(|a|^2)
 *   p <  n:  e^{-|a|^2/2} sqrt(p!/n!) (-a)^{n-p} L_p^{(n-p)}(|a|^2).
 * The Laguerre values are generated by their three-term recurrence and the
 * factorial prefactor is applied in log space; the explicit alternating sum
 * loses all digits once |a|^2 approaches N/2.
 */
inline OperatorMatrix weyl_matrix(cplx a, int degree)
{
  if (degree < 0) throw std::invalid_argument("weyl_matrix: degree must be >= 0");
  if (std::abs(a) > std::sqrt(static_cast<double>(std::max(degree, 1))) + 1e-12)
    throw std::invalid_argument("weyl_matrix: |a| must not exceed sqrt(N)");
  const int n1 = degree + 1;
  OperatorMatrix out{CMatrix::Identity(n1, n1), Basis::fock, "weyl", true};
  const double x = std::norm(a);
  if (x == 0.0) return out;
  const double log_abs = 0.5 * std::log(x);
  const cplx phase_up = std::conj(a) / std::abs(a);
  const cplx phase_down = -a / std::abs(a);
  std::vector<double> lag(n1);
  for (int k = 0; k <= degree; ++k) {
    // L_m^{(k)}(x), m = 0..N-k
    const int mmax = degree - k;
    lag[0] = 1.0;
    if (mmax >= 1) lag[1] = 1.0 + k - x;
    for (int m = 1; m < mmax; ++m) lag[m + 1] = ((2.0 * m + 1.0 + k - x) * lag[m] - (m + k) * lag[m - 1]) / (m + 1.0);
    const cplx up = std::pow(phase_up, k);
    const cplx down = std::pow(phase_down, k);
    for (int m = 0; m <= mmax; ++m) {
      const double mag = std::exp(-x / 2.0 + 0.5 * (std::lgamma(m + 1.0) - std::lgamma(m + k + 1.0)) + k * log_abs) * lag[m];
      out.entries(m + k, m) = mag * up;
      if (k > 0) out.entries(m, m + k) = mag * down;
    }
  }
  out.resolved = kernel_truncation_defect(a, degree) <= 1e-8;
  return out;
}

/**
 * Number of leading columns of a truncated isometry whose norm defect
 * |1 - ||col||^2| stays below tol. W_a e_n spreads over roughly
 * n +- 2|a| sqrt(n) indices, so this block is much smaller than N - |a|^2.
 */
inline int resolved_column_block(const OperatorMatrix& m, double tol = 1e-12)
{
  int k = 0;
  while (k <= m.degree() && std::abs(1.0 - m.entries.col(k).squaredNorm()) <= tol) ++k;
  return k;
}

/// B (M_b T_a) B^{-1} = e^{i pi a b} W_{a - pi b i}.
inline OperatorMatrix translation_modulation_fock(double a, double b, int degree)
{
  auto w = weyl_matrix(cplx(a, -std::numbers::pi * b), degree);
  w.entries *= std::polar(1.0, std::numbers::pi * a * b);
  w.name = "translation_modulation";
  return w;
}

/**
 * Line-side pipeline for the same operator: g = B^{-1} f through the
 * coefficient map, (M_b T_a g)(x) = e^{2 pi i b x} g(x - a) pointwise,
 * then projected back onto h_0..h_{N_out} by Gauss-Hermite quadrature.
 */
inline FockVector translation_modulation_line(const FockVector& f, double a, double b, int out_degree, const QuadratureRule& rule)
{
  const auto& c = f.coeffs();
  auto proj = project_line_premultiplied(
      [&](double t) {
        const auto h = hermite_functions_scaled(f.degree(), t - a, t * t);
        cplx g{};
        for (int n = 0; n <= f.degree(); ++n) g += c(n) * h[n];
        return g * std::polar(1.0, 2.0 * std::numbers::pi * b * t);
      },
      out_degree, rule);
  return bargmann_coeff(proj.coeffs);
}

// --- Dilation ---------------------------------------------------------------

struct DilationOptions {
  /// Output truncation; 0 picks one from r (see dilation_fock).
  int output_degree = 0;
  int line_nodes = 256;
  int plane_nodes = 96;
  std::vector<cplx> check_points{{0.0, 0.0}, {0.5, 0.0}, {0.3, 0.4}, {0.0, -0.6}, {-0.8, 0.2}, {1.0, 0.5}};
};

struct DilationResult {
  FockVector coeffs;               // B D_r B^{-1} f through the line
  std::vector<cplx> direct_values;  // the Fock-side integral at the check points
  double discrepancy = 0.0;
  bool resolved = true;
};

/**
 * Dilation D_r f(x) = sqrt(r) f(rx) transported to F^2, by two routes.
 *
 * Primary: coefficients -> line function -> rescale -> Gauss-Hermite
 * projection. Cross-check: the Fock-side integral
 *   T_r f(z) = sqrt(2r/(1+r^2)) e^{(1/(1+r^2) - 1/2) z^2}
 *              int f(-iw) e^{(1/2 - r^2/(1+r^2)) wbar^2} e^{2irz wbar/(1+r^2)} d lambda(w)
 * on the plane rule. The z^2 prefactor is required: without it T_r 1 would
 * be constant, while D_r maps the Gaussian to another Gaussian.
 */
inline DilationResult dilation_fock(double r, const FockVector& f, const DilationOptions& opt = {})
{
  if (!(r >= 0.25 && r <= 4.0)) throw std::invalid_argument("dilation_fock: r must lie in [1/4, 4]");
  if (f.degree() > 24) throw std::invalid_argument("dilation_fock: input degree must be <= 24");

  int out_degree = opt.output_degree;
  if (out_degree <= 0) {
    // D_r h_0 has e_{2m} coefficients of size ~ |2 gamma|^m, gamma = (1-r^2)/(2(1+r^2)).
    const double q = std::abs((1.0 - r * r) / (1.0 + r * r));
    const int extra = q < 1e-3 ? 0 : static_cast<int>(std::ceil(2.0 * 30.0 / -std::log(q)));
    out_degree = std::clamp(f.degree() + extra, f.degree(), 256);
  }

  const auto rule = gauss_hermite(opt.line_nodes);
  const double sr = std::sqrt(r);
  const auto& c = f.coeffs();
  auto proj = project_line_premultiplied(
      [&](double t) {
        const auto h = hermite_functions_scaled(f.degree(), r * t, t * t);
        cplx g{};
        for (int n = 0; n <= f.degree(); ++n) g += c(n) * h[n];
        return sr * g;
      },
      out_degree, rule);

  DilationResult out;
  out.coeffs = bargmann_coeff(proj.coeffs);

  const PlaneRule plane(opt.plane_nodes);
  const double s = 1.0 + r * r;
  const double pre = std::sqrt(2.0 * r / s);
  const double wb2 = 0.5 - r * r / s;
  for (const cplx z : opt.check_points) {
    const cplx lin = cplx(0.0, 2.0 * r / s) * z;
    const cplx integral = plane.integrate([&](cplx w) {
      const cplx wb = std::conj(w);
      const cplx expo = wb2 * wb * wb + lin * wb - std::norm(w);
      return eval(f, cplx(0.0, -1.0) * w) * std::exp(expo) / std::numbers::pi;
    });
    const cplx direct = pre * std::exp((1.0 / s - 0.5) * z * z) * integral;
    out.direct_values.push_back(direct);
    out.discrepancy = std::max(out.discrepancy, std::abs(direct - eval(out.coeffs, z)));
  }
  out.resolved = out.discrepancy <= 1e-5;
  return out;
}

// --- Multiplication, differentiation and the position/momentum pair --------

struct MDPair {
  OperatorMatrix M;  // f -> z f
  OperatorMatrix D;  // f -> f'
};

/// M e_n = sqrt(n+1) e_{n+1}, D e_n = sqrt(n) e_{n-1}, truncated at N.
inline MDPair md_matrices(int degree)
{
  const int n1 = degree + 1;
  MDPair out{{CMatrix::Zero(n1, n1), Basis::fock, "M", true}, {CMatrix::Zero(n1, n1), Basis::fock, "D", true}};
  for (int n = 0; n < degree; ++n) {
    const double s = std::sqrt(n + 1.0);
    out.M.entries(n + 1, n) = s;
    out.D.entries(n, n + 1) = s;
  }
  return out;
}

/// Position operator transported to F^2: A1 f = (f' + z f) / 2.
inline OperatorMatrix a1_matrix(int degree)
{
  const auto md = md_matrices(degree);
  return {0.5 * (md.D.entries + md.M.entries), Basis::fock, "A1", true};
}

/// Derivative transported to F^2: A2 f = f' - z f.
inline OperatorMatrix a2_matrix(int degree)
{
  const auto md = md_matrices(degree);
  return {md.D.entries - md.M.entries, Basis::fock, "A2", true};
}

}  // namespace fockdict
