#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "fockdict/fock_core.hpp"

namespace fockdict {

enum class WeightKind {
  gauss_hermite,  // e^{-x^2} on R
  legendre,       // 1 on [-1, 1]
};

/**
 * Gauss rule for a fixed weight function.
 *
 * For Gauss-Hermite rules `scaled_weights[k] = weights[k] * e^{x_k^2}` is
 * stored as well; it is computed directly from Hermite functions (never by
 * exponentiating x_k^2) and turns the rule into one for plain dx integrals
 * of Gaussian-decaying integrands.
 */
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;
  WeightKind kind = WeightKind::gauss_hermite;

  int size() const { return static_cast<int>(nodes.size()); }
};

namespace detail {

// Eigenvalues of the symmetric tridiagonal Jacobi matrix with zero diagonal.
inline std::vector<double> jacobi_eigenvalues(const Eigen::VectorXd& offdiag)
{
  const auto n = offdiag.size() + 1;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Orthonormal Hermite functions psi_j(x) = p_j(x) e^{-x^2/2}, j < n, where
// p_j are orthonormal for the weight e^{-x^2}. Returns (psi_{n-1}, psi_n,
// sum_{j<n} psi_j^2).
struct HermiteFunctionTriple {
  double prev, last, sum_sq;
};

inline HermiteFunctionTriple hermite_orthonormal(int n, double x)
{
  double p_prev = 0.0;
  double p = std::pow(std::numbers::pi, -0.25) * std::exp(-x * x / 2.0);
  double sum_sq = 0.0;
  for (int j = 0; j < n; ++j) {
    sum_sq += p * p;
    const double next = (x * p - std::sqrt(j / 2.0) * p_prev) / std::sqrt((j + 1) / 2.0);
    p_prev = p;
    p = next;
  }
  return {p_prev, p, sum_sq};
}

}  // namespace detail

/**
 * Gauss-Hermite rule for e^{-x^2}.
 *
 * Nodes come from the Jacobi matrix (Golub-Welsch) and are polished by two
 * Newton steps on the three-term recurrence; weights use the Christoffel
 * form w_k = 1 / sum_j p_j(x_k)^2, which keeps tiny outer weights accurate
 * to full relative precision.
 */
inline QuadratureRule gauss_hermite(int n_nodes)
{
  if (n_nodes < 1 || n_nodes > 256) throw std::invalid_argument("gauss_hermite: node count must be in [1, 256]");
  QuadratureRule rule;
  rule.kind = WeightKind::gauss_hermite;
  if (n_nodes == 1) {
    rule.nodes = {0.0};
    rule.weights = {std::sqrt(std::numbers::pi)};
    rule.scaled_weights = rule.weights;
    return rule;
  }
  Eigen::VectorXd off(n_nodes - 1);
  for (int k = 1; k < n_nodes; ++k) off(k - 1) = std::sqrt(k / 2.0);
  rule.nodes = detail::jacobi_eigenvalues(off);

  for (auto& x : rule.nodes) {
    for (int it = 0; it < 2; ++it) {
      const auto t = detail::hermite_orthonormal(n_nodes, x);
      // p_n' = sqrt(2n) p_{n-1}; the common e^{-x^2/2} factor cancels.
      const double step = t.last / (std::sqrt(2.0 * n_nodes) * t.prev);
      if (std::isfinite(step)) x -= step;
    }
  }
  // Symmetrize so that the rule integrates odd functions to exactly zero.
  for (int k = 0; k < n_nodes / 2; ++k) {
    const double m = 0.5 * (rule.nodes[n_nodes - 1 - k] - rule.nodes[k]);
    rule.nodes[k] = -m;
    rule.nodes[n_nodes - 1 - k] = m;
  }
  if (n_nodes % 2 == 1) rule.nodes[n_nodes / 2] = 0.0;

  rule.weights.resize(n_nodes);
  rule.scaled_weights.resize(n_nodes);
  for (int k = 0; k < n_nodes; ++k) {
    const double x = rule.nodes[k];
    const double scaled = 1.0 / detail::hermite_orthonormal(n_nodes, x).sum_sq;
    rule.scaled_weights[k] = scaled;
    rule.weights[k] = scaled * std::exp(-x * x);
  }
  return rule;
}

/// Gauss-Legendre rule on [-1, 1].
inline QuadratureRule gauss_legendre(int n_nodes)
{
  if (n_nodes < 1) throw std::invalid_argument("gauss_legendre: node count must be >= 1");
  QuadratureRule rule;
  rule.kind = WeightKind::legendre;
  if (n_nodes == 1) {
    rule.nodes = {0.0};
    rule.weights = {2.0};
    rule.scaled_weights = rule.weights;
    return rule;
  }
  Eigen::VectorXd off(n_nodes - 1);
  for (int k = 1; k < n_nodes; ++k) off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  rule.nodes = detail::jacobi_eigenvalues(off);
  rule.weights.resize(n_nodes);
  for (int k = 0; k < n_nodes; ++k) {
    double x = rule.nodes[k];
    double dp = 1.0;
    for (int it = 0; it < 3; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 1; j < n_nodes; ++j) {
        const double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = n_nodes * (x * p1 - p0) / (x * x - 1.0);
      x -= p1 / dp;
    }
    rule.nodes[k] = x;
    rule.weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  rule.scaled_weights = rule.weights;
  return rule;
}

/// Composite Gauss-Legendre integral of f over [lo, hi].
template <class F>
auto integrate_composite(F&& f, double lo, double hi, int panels, const QuadratureRule& legendre)
{
  using R = decltype(f(lo));
  R acc{};
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * h;
    const double mid = a + h / 2.0;
    for (int k = 0; k < legendre.size(); ++k) {
      acc += (h / 2.0 * legendre.weights[k]) * f(mid + h / 2.0 * legendre.nodes[k]);
    }
  }
  return acc;
}

/**
 * Tensor rule for plain dA integrals over the complex plane.
 *
 * Built from a Gauss-Hermite rule rescaled to the weight e^{-alpha t^2} in
 * each real direction; the weight itself is folded back in, so
 * `integrate(g)` approximates the integral of g(u + iv) du dv for any g
 * that decays at least like a Gaussian.
 */
class PlaneRule {
 public:
  explicit PlaneRule(int n_nodes = 96, double alpha = 0.5)
  {
    if (alpha <= 0.0) throw std::invalid_argument("PlaneRule: alpha must be positive");
    const auto line = gauss_hermite(n_nodes);
    const double s = 1.0 / std::sqrt(alpha);
    points_.resize(line.size());
    weights_.resize(line.size());
    for (int k = 0; k < line.size(); ++k) {
      points_[k] = line.nodes[k] * s;
      weights_[k] = line.scaled_weights[k] * s;
    }
    n_nodes_ = n_nodes;
  }

  int nodes_per_axis() const { return n_nodes_; }

  template <class G>
  cplx integrate(G&& g) const
  {
    cplx acc{};
    for (std::size_t j = 0; j < points_.size(); ++j) {
      cplx row{};
      for (std::size_t k = 0; k < points_.size(); ++k) {
        row += weights_[k] * cplx(g(cplx(points_[j], points_[k])));
      }
      acc += weights_[j] * row;
    }
    return acc;
  }

  /// Integral of g against the Gaussian measure d lambda = e^{-|z|^2} dA / pi.
  template <class G>
  cplx integrate_gaussian(G&& g) const
  {
    return integrate([&](cplx z) { return cplx(g(z)) * (std::exp(-std::norm(z)) / std::numbers::pi); });
  }

 private:
  std::vector<double> points_;
  std::vector<double> weights_;
  int n_nodes_ = 0;
};

}  // namespace fockdict
