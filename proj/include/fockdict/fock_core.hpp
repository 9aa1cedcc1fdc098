#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace fockdict {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// (2/pi)^{1/4}, the normalization shared by the Gauss window, the Hermite
/// functions and the Bargmann kernel.
inline const double kGaussNorm = std::pow(2.0 / std::numbers::pi, 0.25);

/// A truncation or quadrature too coarse for the requested accuracy.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FockBasisTag {};
struct HermiteBasisTag {};

/**
 * Coefficients of a vector against a truncated orthonormal basis.
 *
 * The tag keeps Fock-space vectors (basis e_n(z) = z^n / sqrt(n!)) and
 * L^2(R) vectors (Hermite functions h_n) from being mixed up; the two are
 * converted explicitly by the Bargmann coefficient map.
 */
template <class Tag>
class BasisVector {
 public:
  BasisVector() : coeffs_(CVector::Zero(1)) {}
  explicit BasisVector(CVector coeffs) : coeffs_(std::move(coeffs))
  {
    if (coeffs_.size() == 0) throw std::invalid_argument("basis vector needs at least one coefficient");
  }

  static BasisVector zero(int degree)
  {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    return BasisVector(CVector::Zero(degree + 1));
  }

  /// Unit vector along the n-th basis element, truncated at `degree`.
  static BasisVector unit(int n, int degree)
  {
    if (n < 0 || n > degree) throw std::invalid_argument("basis index out of range");
    CVector c = CVector::Zero(degree + 1);
    c(n) = 1.0;
    return BasisVector(std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const CVector& coeffs() const { return coeffs_; }
  CVector& coeffs() { return coeffs_; }
  cplx operator[](int n) const { return n <= degree() ? coeffs_(n) : cplx{}; }

  double norm_squared() const { return coeffs_.squaredNorm(); }
  double norm() const { return coeffs_.norm(); }

  /// Zero-pads (or truncates) to the requested degree.
  BasisVector resized(int degree) const
  {
    CVector c = CVector::Zero(degree + 1);
    const int keep = std::min(degree, this->degree()) + 1;
    c.head(keep) = coeffs_.head(keep);
    return BasisVector(std::move(c));
  }

  BasisVector& operator+=(const BasisVector& o)
  {
    if (o.degree() > degree()) *this = resized(o.degree());
    coeffs_.head(o.coeffs_.size()) += o.coeffs_;
    return *this;
  }
  BasisVector& operator*=(cplx s)
  {
    coeffs_ *= s;
    return *this;
  }
  friend BasisVector operator+(BasisVector a, const BasisVector& b) { return a += b; }
  friend BasisVector operator*(cplx s, BasisVector a) { return a *= s; }

 private:
  CVector coeffs_;
};

using FockVector = BasisVector<FockBasisTag>;
using LineVector = BasisVector<HermiteBasisTag>;

/// sum_n f_n conj(g_n); the shorter vector is implicitly zero-padded.
template <class Tag>
cplx inner(const BasisVector<Tag>& f, const BasisVector<Tag>& g)
{
  const int n = std::min(f.degree(), g.degree()) + 1;
  cplx acc{};
  for (int k = 0; k < n; ++k) acc += f.coeffs()(k) * std::conj(g.coeffs()(k));
  return acc;
}

namespace detail {

// Largest |z|^2/2 for which e^{|z|^2/2} is still a finite double.
inline constexpr double kMaxHalfModulusSquared = 709.0;

// sum_n c_n t_n with t_0 = start, t_{n+1} = t_n z / sqrt(n+1).
inline cplx monomial_series(const CVector& c, cplx z, cplx start)
{
  cplx term = start;
  cplx acc = c(0) * term;
  for (Eigen::Index n = 1; n < c.size(); ++n) {
    term *= z / std::sqrt(static_cast<double>(n));
    acc += c(n) * term;
  }
  return acc;
}

}  // namespace detail

/// Point evaluation f(z) = sum c_n z^n / sqrt(n!).
inline cplx eval(const FockVector& f, cplx z)
{
  if (std::norm(z) / 2.0 > detail::kMaxHalfModulusSquared)
    throw std::range_error("eval: |z|^2/2 exceeds the double exponent range");
  return detail::monomial_series(f.coeffs(), z, 1.0);
}

/// f(z) e^{-|z|^2/2}, accumulated with the weight folded into the first term.
/// This is the quantity bounded by the F^inf norm and it stays finite where
/// eval() alone would overflow.
inline double eval_weighted_abs(const FockVector& f, cplx z)
{
  return std::abs(detail::monomial_series(f.coeffs(), z, std::exp(-std::norm(z) / 2.0)));
}

/**
 * Reproducing kernel truncated at degree N.
 *
 * K(., a) has coefficients conj(a)^n / sqrt(n!); the normalized kernel k_a
 * carries the extra factor e^{-|a|^2/2}.
 */
inline FockVector kernel_vector(cplx a, int degree, bool normalized)
{
  if (degree < 0) throw std::invalid_argument("kernel_vector: degree must be >= 0");
  CVector c(degree + 1);
  const cplx ab = std::conj(a);
  cplx term = normalized ? cplx(std::exp(-std::norm(a) / 2.0)) : cplx(1.0);
  c(0) = term;
  for (int n = 1; n <= degree; ++n) {
    term *= ab / std::sqrt(static_cast<double>(n));
    c(n) = term;
  }
  return FockVector(std::move(c));
}

/**
 * 1 - ||k_a truncated at N||^2, i.e. the Poisson(|a|^2) tail beyond N.
 *
 * Summed directly from the tail so that defects far below machine epsilon
 * are still reported accurately.
 */
inline double kernel_truncation_defect(cplx a, int degree)
{
  const double x = std::norm(a);
  if (x == 0.0) return 0.0;
  double acc = 0.0;
  for (int n = degree + 1;; ++n) {
    const double log_term = -x + n * std::log(x) - std::lgamma(n + 1.0);
    const double term = std::exp(log_term);
    acc += term;
    if (n > x && term <= acc * 1e-17) break;
    if (n > degree + 100000) break;
  }
  return acc;
}

}  // namespace fockdict
