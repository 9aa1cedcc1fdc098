#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "fockdict/fock_core.hpp"
#include "fockdict/operators.hpp"

namespace fockdict {

/// Working precision for the normal-ordered sums. The alternating terms in
/// column n can exceed the result by ~(1 + 4a)^n for e^{a u^2}-type symbols.
using Real384 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<384>, boost::multiprecision::et_off>;

struct WideComplex {
  Real384 re{0};
  Real384 im{0};
};

/**
 * Taylor coefficients phi_0..phi_K of an entire symbol phi.
 *
 * Coefficients are kept in extended precision; the operator built from
 * them sums terms far larger than its entries, so rounding the symbol to
 * double first would already destroy the result.
 */
class EntireSymbol {
 public:
  EntireSymbol() = default;
  EntireSymbol(std::vector<WideComplex> taylor, std::string name) : taylor_(std::move(taylor)), name_(std::move(name)) {}

  /// Symbol given by double coefficients (taken as exact binary values).
  static EntireSymbol from_doubles(const std::vector<cplx>& taylor, std::string name = "custom")
  {
    std::vector<WideComplex> t(taylor.size());
    for (std::size_t k = 0; k < taylor.size(); ++k) t[k] = {Real384(taylor[k].real()), Real384(taylor[k].imag())};
    return {std::move(t), std::move(name)};
  }

  static EntireSymbol constant(cplx value) { return from_doubles({value}, "constant"); }

  /// e^{a u^2} truncated at degree K.
  static EntireSymbol exp_quadratic(double a, int max_degree)
  {
    std::vector<WideComplex> t(max_degree + 1);
    Real384 term{1};
    const Real384 aa(a);
    for (int m = 0; 2 * m <= max_degree; ++m) {
      t[2 * m].re = term;
      term = term * aa / (m + 1);
    }
    return {std::move(t), "exp_quadratic"};
  }

  /// e^{t u} truncated at degree K, for complex t.
  static EntireSymbol exp_linear(cplx slope, int max_degree)
  {
    std::vector<WideComplex> t(max_degree + 1);
    Real384 re{1}, im{0};
    const Real384 sr(slope.real()), si(slope.imag());
    for (int k = 0; k <= max_degree; ++k) {
      t[k] = {re, im};
      const Real384 nre = (re * sr - im * si) / (k + 1);
      const Real384 nim = (re * si + im * sr) / (k + 1);
      re = nre;
      im = nim;
    }
    return {std::move(t), "exp_linear"};
  }

  int degree() const { return static_cast<int>(taylor_.size()) - 1; }
  const std::string& name() const { return name_; }
  const std::vector<WideComplex>& wide() const { return taylor_; }

  cplx coefficient(int k) const
  {
    if (k < 0 || k > degree()) return {};
    return {static_cast<double>(taylor_[k].re), static_cast<double>(taylor_[k].im)};
  }

  std::vector<cplx> coefficients() const
  {
    std::vector<cplx> out(taylor_.size());
    for (int k = 0; k <= degree(); ++k) out[k] = coefficient(k);
    return out;
  }

  /// Horner evaluation of the truncated series.
  cplx operator()(cplx u) const
  {
    cplx acc{};
    for (int k = degree(); k >= 0; --k) acc = acc * u + coefficient(k);
    return acc;
  }

  /**
   * Ratio-test evidence that sum |phi_n|^2 n! converges, i.e. that phi lies
   * in F^2: the ratio |phi_{n+2}|^2 (n+2)! / (|phi_n|^2 n!) over the top
   * nonzero coefficients must stay below 1. Only a diagnostic.
   */
  bool f2_tail_certified() const
  {
    std::vector<double> w;
    for (int n = 0; n <= degree(); ++n) {
      const double m = std::norm(coefficient(n));
      w.push_back(m > 0.0 ? std::log(m) + std::lgamma(n + 1.0) : -INFINITY);
    }
    int last = degree();
    while (last >= 0 && !std::isfinite(w[last])) --last;
    if (last < 4) return true;
    int prev = last - 1;
    while (prev >= 0 && !std::isfinite(w[prev])) --prev;
    if (prev < 0) return true;
    return (w[last] - w[prev]) / (last - prev) < 0.0;
  }

 private:
  std::vector<WideComplex> taylor_;
  std::string name_;
};

/**
 * Taylor coefficients of A(z) = int_0^z e^{u^2} du: taylor[2n+1] = 1/((2n+1) n!).
 */
inline EntireSymbol antiderivative_coeffs(int max_degree)
{
  if (max_degree < 1) throw std::invalid_argument("antiderivative_coeffs: K must be >= 1");
  std::vector<WideComplex> t(max_degree + 1);
  Real384 inv_fact{1};
  for (int n = 0; 2 * n + 1 <= max_degree; ++n) {
    t[2 * n + 1].re = inv_fact / (2 * n + 1);
    inv_fact /= (n + 1);
  }
  return {std::move(t), "antiderivative"};
}

/// Symbol of the Hilbert transform on F^2: phi(u) = -(2/sqrt(pi)) A(u / sqrt(2)).
inline EntireSymbol hilbert_symbol(int max_degree)
{
  using boost::multiprecision::sqrt;
  const auto a = antiderivative_coeffs(std::max(1, max_degree));
  std::vector<WideComplex> t = a.wide();
  const Real384 pi = boost::math::constants::pi<Real384>();
  const Real384 inv_sqrt2 = 1 / sqrt(Real384(2));
  Real384 scale = -2 / sqrt(pi);
  for (int k = 0; k <= a.degree(); ++k) {
    t[k].re *= scale;
    scale *= inv_sqrt2;
  }
  return {std::move(t), "hilbert"};
}

struct SeriesValue {
  double value = 0.0;
  double tail_estimate = 0.0;
};

/**
 * Partial sum of ||A(z/sqrt 2)||^2 = 1/2 sum (2n+1)! / ((2n+1)^2 4^n (n!)^2)
 * over n < terms. The terms behave like n^{-3/2} / (4 sqrt(pi)), so the
 * reported tail estimate is 1 / (2 sqrt(pi terms)).
 */
inline SeriesValue fock_norm_A(int terms)
{
  double central = 1.0;  // C(2n, n) / 4^n
  double acc = 0.0;
  for (int n = 0; n < terms; ++n) {
    acc += 0.5 * central / (2.0 * n + 1.0);
    central *= (2.0 * n + 1.0) / (2.0 * n + 2.0);
  }
  return {acc, terms > 0 ? 1.0 / (2.0 * std::sqrt(std::numbers::pi * terms)) : INFINITY};
}

/// FockVector of A(z / sqrt 2): coefficient sqrt((2n+1)!) / (sqrt(2) (2n+1) 2^n n!) on e_{2n+1}.
inline FockVector antiderivative_half_vector(int degree)
{
  CVector c = CVector::Zero(degree + 1);
  double r = 1.0;  // sqrt((2n+1)!) / (2^n n!)
  for (int n = 0; 2 * n + 1 <= degree; ++n) {
    c(2 * n + 1) = r / (std::numbers::sqrt2 * (2.0 * n + 1.0));
    r *= std::sqrt((2.0 * n + 2.0) * (2.0 * n + 3.0)) / (2.0 * (n + 1.0));
  }
  return FockVector(std::move(c));
}

/**
 * Matrix of S_phi f(z) = int f(w) e^{z wbar} phi(z - wbar) d lambda(w).
 *
 * Because int f(w) wbar^j e^{z wbar} d lambda = f^{(j)}(z),
 *   S_phi = sum_k phi_k sum_j C(k,j) (-1)^j M^{k-j} D^j,
 * so <S e_n, e_p> collects, over k - 2j = p - n,
 *   phi_k C(k,j) (-1)^j sqrt(n! p!) / (n-j)!.
 * The sum is accumulated in 384-bit arithmetic and rounded at the end.
 */
inline OperatorMatrix s_phi_matrix(const EntireSymbol& phi, int degree)
{
  if (degree < 0) throw std::invalid_argument("s_phi_matrix: degree must be >= 0");
  const int K = phi.degree();
  if (K > 2 * degree) throw std::invalid_argument("s_phi_matrix: symbol degree exceeds 2N");
  using boost::multiprecision::sqrt;

  const int top = std::max(K, degree) + 1;
  std::vector<Real384> fact(top + 1), sqrt_fact(top + 1);
  fact[0] = 1;
  for (int n = 1; n <= top; ++n) fact[n] = fact[n - 1] * n;
  for (int n = 0; n <= top; ++n) sqrt_fact[n] = sqrt(fact[n]);

  // psi_k = phi_k k!
  std::vector<WideComplex> psi(K + 1);
  for (int k = 0; k <= K; ++k) psi[k] = {phi.wide()[k].re * fact[k], phi.wide()[k].im * fact[k]};

  const int n1 = degree + 1;
  std::vector<WideComplex> acc(static_cast<std::size_t>(n1) * n1);
  for (int n = 0; n <= degree; ++n) {
    for (int j = 0; j <= n && j <= K; ++j) {
      // k = i + j, target p = n - j + i
      Real384 g = sqrt_fact[n] / (fact[j] * fact[n - j]);
      if (j % 2 == 1) g = -g;
      for (int i = 0; i + j <= K && n - j + i <= degree; ++i) {
        const int p = n - j + i;
        const Real384 w = g * sqrt_fact[p] / fact[i];
        auto& cell = acc[static_cast<std::size_t>(n) * n1 + p];
        cell.re += w * psi[i + j].re;
        cell.im += w * psi[i + j].im;
      }
    }
  }
  OperatorMatrix out{CMatrix::Zero(n1, n1), Basis::fock, "S_" + phi.name(), true};
  for (int n = 0; n <= degree; ++n) {
    for (int p = 0; p <= degree; ++p) {
      const auto& cell = acc[static_cast<std::size_t>(n) * n1 + p];
      out.entries(p, n) = cplx(static_cast<double>(cell.re), static_cast<double>(cell.im));
    }
  }
  return out;
}

/// The Hilbert transform on F^2 as S_phi with phi = -(2/sqrt pi) A(u/sqrt 2), K = 2N.
inline OperatorMatrix hilbert_fock_matrix(int degree)
{
  if (degree < 1) throw std::invalid_argument("hilbert_fock_matrix: degree must be >= 1");
  auto m = s_phi_matrix(hilbert_symbol(2 * degree), degree);
  m.name = "hilbert";
  return m;
}

struct BerezinValue {
  cplx lhs;  // <S_phi k_z, k_z>
  cplx rhs;  // phi(z - zbar)
};

inline BerezinValue berezin_check(const OperatorMatrix& s, const EntireSymbol& phi, cplx z)
{
  const auto k = kernel_vector(z, s.degree(), true).coeffs();
  const cplx lhs = k.dot(s.entries * k);  // Eigen's dot conjugates the first argument
  return {lhs, phi(cplx(0.0, 2.0 * z.imag()))};
}

/// <S_phi k_z, k_z> against phi(z - zbar) = phi(2i Im z).
inline BerezinValue berezin_check(const EntireSymbol& phi, cplx z, int degree)
{
  return berezin_check(s_phi_matrix(phi, degree), phi, z);
}

/**
 * Spectral norm estimate of S_phi truncated at each N, by 200 power
 * iterations on S^* S from a fixed-seed random start. Growth across N is
 * the signal; no convergence certificate is attached.
 */
inline std::vector<double> boundedness_probe(const EntireSymbol& phi, const std::vector<int>& degrees, int iterations = 200,
                                             std::uint64_t seed = 20150101)
{
  std::vector<double> norms;
  for (int n : degrees) {
    const int k = std::min(phi.degree(), 2 * n);
    std::vector<WideComplex> t(phi.wide().begin(), phi.wide().begin() + k + 1);
    const auto s = s_phi_matrix(EntireSymbol(std::move(t), phi.name()), n).entries;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    CVector v(n + 1);
    for (auto& x : v) x = cplx(gauss(rng), gauss(rng));
    v.normalize();
    double sigma = 0.0;
    for (int it = 0; it < iterations; ++it) {
      CVector w = s.adjoint() * (s * v);
      const double nw = w.norm();
      if (nw == 0.0) {
        sigma = 0.0;
        break;
      }
      sigma = std::sqrt(nw);
      v = w / nw;
    }
    norms.push_back(sigma);
  }
  return norms;
}

}  // namespace fockdict
