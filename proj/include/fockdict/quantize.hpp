#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>

#include "fockdict/fock_core.hpp"
#include "fockdict/operators.hpp"

namespace fockdict {

/**
 * Polynomial sum a_{mn} zbar^m z^n in z and zbar: m is the antiholomorphic
 * power, n the holomorphic one. Zero coefficients are not stored.
 */
class PolySymbol {
 public:
  using Key = std::pair<int, int>;  // (m, n)

  PolySymbol() = default;

  static PolySymbol monomial(int m, int n, cplx value = 1.0)
  {
    PolySymbol s;
    s.add(m, n, value);
    return s;
  }

  PolySymbol& add(int m, int n, cplx value)
  {
    if (m < 0 || n < 0) throw std::invalid_argument("PolySymbol: powers must be >= 0");
    auto& slot = coeffs_[{m, n}];
    slot += value;
    if (slot == cplx{}) coeffs_.erase({m, n});
    return *this;
  }

  cplx coefficient(int m, int n) const
  {
    const auto it = coeffs_.find({m, n});
    return it == coeffs_.end() ? cplx{} : it->second;
  }

  const std::map<Key, cplx>& coeffs() const { return coeffs_; }

  int degree() const
  {
    int d = 0;
    for (const auto& [k, v] : coeffs_) d = std::max(d, k.first + k.second);
    return d;
  }

  /// a_{mn} = conj(a_{nm}) for all m, n, i.e. the symbol is real-valued.
  bool is_real(double tol = 0.0) const
  {
    for (const auto& [k, v] : coeffs_) {
      if (std::abs(v - std::conj(coefficient(k.second, k.first))) > tol) return false;
    }
    return true;
  }

  /// The symbol with z and zbar exchanged: phi(z) = sigma(zbar, z).
  PolySymbol swapped() const
  {
    PolySymbol s;
    for (const auto& [k, v] : coeffs_) s.add(k.second, k.first, v);
    return s;
  }

 private:
  std::map<Key, cplx> coeffs_;
};

/// int z^p zbar^q d lambda = delta_{pq} p!.
inline double gaussian_moment(int p, int q) { return p == q ? std::tgamma(p + 1.0) : 0.0; }

/**
 * Toeplitz operator of zbar^m z^n on e_0..e_N:
 *   <T e_j, e_k> = delta_{n+j, m+k} (n+j)! / sqrt(j! k!),
 * with the factorial ratio formed as two products of at most max(m, n) terms.
 */
inline OperatorMatrix toeplitz_monomial_matrix(int m, int n, int degree)
{
  if (m < 0 || n < 0) throw std::invalid_argument("toeplitz_monomial_matrix: powers must be >= 0");
  if (m + n > degree) throw std::invalid_argument("toeplitz_monomial_matrix: m + n must not exceed N");
  const int n1 = degree + 1;
  OperatorMatrix out{CMatrix::Zero(n1, n1), Basis::fock, "toeplitz", true};
  for (int j = 0; j <= degree; ++j) {
    const int k = n + j - m;
    if (k < 0 || k > degree) continue;
    const int top = n + j;
    // sqrt(top!/j!) sqrt(top!/k!): factors above max(j, k) occur twice and are taken as integers
    const int lo = std::min(j, k), hi = std::max(j, k);
    double r = 1.0;
    for (int i = hi + 1; i <= top; ++i) r *= static_cast<double>(i);
    for (int i = lo + 1; i <= hi; ++i) r *= std::sqrt(static_cast<double>(i));
    out.entries(k, j) = r;
  }
  return out;
}

/// Toeplitz operator T_phi for a polynomial phi = sum b_{mn} zbar^m z^n.
inline OperatorMatrix toeplitz_matrix(const PolySymbol& phi, int degree)
{
  const int n1 = degree + 1;
  OperatorMatrix out{CMatrix::Zero(n1, n1), Basis::fock, "toeplitz", true};
  for (const auto& [k, v] : phi.coeffs()) out.entries += v * toeplitz_monomial_matrix(k.first, k.second, degree).entries;
  return out;
}

/**
 * sigma(Z, Z*) = sum a_{mn} Z^n Z*^m on the Fock side, where Z acts as D
 * and Z* as M: the operator sum a_{mn} D^n M^m. Products are formed at
 * degree N + deg(sigma) and cropped, so the N x N block is exact.
 */
inline OperatorMatrix anti_wick_matrix(const PolySymbol& sigma, int degree)
{
  const int d = sigma.degree();
  if (2 * d > degree) throw std::invalid_argument("anti_wick_matrix: symbol degree must not exceed N/2");
  const int big = degree + d;
  const auto md = md_matrices(big);
  const int nb = big + 1;
  CMatrix acc = CMatrix::Zero(nb, nb);
  for (const auto& [k, v] : sigma.coeffs()) {
    CMatrix term = CMatrix::Identity(nb, nb);
    for (int i = 0; i < k.first; ++i) term = md.M.entries * term;
    for (int i = 0; i < k.second; ++i) term = md.D.entries * term;
    acc += v * term;
  }
  return {acc.topLeftCorner(degree + 1, degree + 1), Basis::fock, "anti_wick", true};
}

/// max |anti_wick(sigma) - T_phi| with phi(z) = sigma(zbar, z).
inline double anti_wick_toeplitz_residual(const PolySymbol& sigma, int degree)
{
  const CMatrix diff = anti_wick_matrix(sigma, degree).entries - toeplitz_matrix(sigma.swapped(), degree).entries;
  return diff.size() ? diff.cwiseAbs().maxCoeff() : 0.0;
}

namespace detail {

inline double binomial(int n, int k)
{
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/**
 * Heat-kernel symbol sigma(z) = (2/pi) int phi(wbar) e^{-2|z-w|^2} dA(w).
 *
 * phi(wbar) turns zbar^m z^n into w^m wbar^n; with w = z + v and
 * (2/pi) int v^p vbar^q e^{-2|v|^2} dA = delta_{pq} p!/2^p,
 *   w^m wbar^n -> sum_p C(m,p) C(n,p) p!/2^p z^{m-p} zbar^{n-p}.
 * The result is again a PolySymbol in (zbar, z).
 */
inline PolySymbol heat_symbol(const PolySymbol& phi)
{
  PolySymbol out;
  for (const auto& [k, v] : phi.coeffs()) {
    const int m = k.first, n = k.second;
    double moment = 1.0;  // p!/2^p
    for (int p = 0; p <= std::min(m, n); ++p) {
      if (p > 0) moment *= p / 2.0;
      out.add(n - p, m - p, v * detail::binomial(m, p) * detail::binomial(n, p) * moment);
    }
  }
  return out;
}

/**
 * Polynomial sum r_{jk} x^j zeta^k in the phase-space variables, obtained
 * from a PolySymbol through z = x + i zeta.
 */
class RealSymbol {
 public:
  using Key = std::pair<int, int>;  // (power of x, power of zeta)

  RealSymbol& add(int j, int k, cplx value)
  {
    auto& slot = coeffs_[{j, k}];
    slot += value;
    if (std::abs(slot) < 1e-300) coeffs_.erase({j, k});
    return *this;
  }

  cplx coefficient(int j, int k) const
  {
    const auto it = coeffs_.find({j, k});
    return it == coeffs_.end() ? cplx{} : it->second;
  }

  const std::map<Key, cplx>& coeffs() const { return coeffs_; }

  int degree() const
  {
    int d = 0;
    for (const auto& [k, v] : coeffs_) d = std::max(d, k.first + k.second);
    return d;
  }

 private:
  std::map<Key, cplx> coeffs_;
};

/// Expands zbar^m z^n = (x - i zeta)^m (x + i zeta)^n.
inline RealSymbol to_real_symbol(const PolySymbol& sigma)
{
  RealSymbol out;
  const cplx I(0.0, 1.0);
  for (const auto& [key, v] : sigma.coeffs()) {
    const int m = key.first, n = key.second;
    for (int s = 0; s <= m; ++s) {
      for (int t = 0; t <= n; ++t) {
        // zeta^s from the conjugate factor, zeta^t from the holomorphic one
        const cplx c = v * detail::binomial(m, s) * detail::binomial(n, t) * std::pow(-I, s) * std::pow(I, t);
        out.add(m - s + n - t, s + t, c);
      }
    }
  }
  return out;
}

/// Position X and D = (1/2i) d/dx in the Hermite basis: X = (D + M)/2, D_line = (D - M)/(2i).
struct PhaseSpacePair {
  CMatrix X;
  CMatrix Dx;
};

inline PhaseSpacePair phase_space_matrices(int degree)
{
  const auto md = md_matrices(degree);
  return {0.5 * (md.D.entries + md.M.entries), (md.D.entries - md.M.entries) / cplx(0.0, 2.0)};
}

/**
 * Weyl quantization sigma(D, X) of a polynomial of total degree <= 2 in
 * (x, zeta), as a matrix on h_0..h_N. The mixed term x zeta becomes
 * (X D + D X)/2; all other monomials are unambiguous. Products are formed
 * two degrees higher and cropped.
 */
inline OperatorMatrix weyl_quantize_poly(const RealSymbol& sigma, int degree)
{
  if (sigma.degree() > 2) throw std::invalid_argument("weyl_quantize_poly: only symbols of degree <= 2 are supported");
  const int big = degree + 2;
  const auto ps = phase_space_matrices(big);
  const int nb = big + 1;
  const CMatrix I = CMatrix::Identity(nb, nb);
  CMatrix acc = CMatrix::Zero(nb, nb);
  for (const auto& [k, v] : sigma.coeffs()) {
    const int j = k.first, l = k.second;
    CMatrix term;
    if (j == 0 && l == 0) term = I;
    else if (j == 1 && l == 0) term = ps.X;
    else if (j == 0 && l == 1) term = ps.Dx;
    else if (j == 2 && l == 0) term = ps.X * ps.X;
    else if (j == 0 && l == 2) term = ps.Dx * ps.Dx;
    else term = 0.5 * (ps.X * ps.Dx + ps.Dx * ps.X);
    acc += v * term;
  }
  return {acc.topLeftCorner(degree + 1, degree + 1), Basis::hermite, "weyl_quantized", true};
}

/**
 * max |T_phi - sigma(D, X)| with sigma the heat symbol of phi, the line
 * operator read in e_n through the identity coefficient map h_n -> e_n.
 */
inline double weyl_toeplitz_residual(const PolySymbol& phi, int degree)
{
  if (phi.degree() > 2) throw std::invalid_argument("weyl_toeplitz_residual: symbol degree must be <= 2");
  const CMatrix diff = toeplitz_matrix(phi, degree).entries - weyl_quantize_poly(to_real_symbol(heat_symbol(phi)), degree).entries;
  return diff.size() ? diff.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace fockdict
