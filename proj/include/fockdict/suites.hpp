#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fockdict/bargmann.hpp"
#include "fockdict/fock_core.hpp"
#include "fockdict/gabor.hpp"
#include "fockdict/hermite_line.hpp"
#include "fockdict/operators.hpp"
#include "fockdict/quadrature.hpp"
#include "fockdict/quantize.hpp"
#include "fockdict/singular.hpp"
#include "fockdict/uncertainty.hpp"

namespace fockdict {

struct SuiteConfig {
  int degree = 64;
  int nodes = 128;
  std::uint64_t seed = 20150101;
};

struct VerificationCase {
  std::string id;
  std::string ref;  // the identity being checked
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  SuiteConfig config;
  std::vector<VerificationCase> cases;

  bool all_pass() const
  {
    return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.pass; });
  }

  nlohmann::json to_json() const
  {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : cases) {
      cs.push_back({{"id", c.id}, {"ref", c.ref}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    return {{"suite", suite},
            {"config", {{"degree", config.degree}, {"nodes", config.nodes}, {"seed", config.seed}}},
            {"cases", cs},
            {"pass", all_pass()}};
  }
};

inline const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"bargmann", "fourier", "weyl", "dilation", "gabor", "hilbert", "uncertainty", "quantize"};
  return names;
}

namespace detail {

class CaseList {
 public:
  void add(std::string id, std::string ref, double residual, double tolerance)
  {
    const bool pass = std::isfinite(residual) && residual <= tolerance;
    cases_.push_back({std::move(id), std::move(ref), residual, tolerance, pass});
  }

  /// Records a check that threw as a failed case.
  void guard(const std::string& id, const std::string& ref, double tolerance, const std::function<double()>& body)
  {
    double r = std::numeric_limits<double>::quiet_NaN();
    try {
      r = body();
    } catch (const std::exception& e) {
      cases_.push_back({id, ref + " [error: " + e.what() + "]", r, tolerance, false});
      return;
    }
    add(id, ref, r, tolerance);
  }

  std::vector<VerificationCase> take() { return std::move(cases_); }

 private:
  std::vector<VerificationCase> cases_;
};

inline std::vector<cplx> disk_samples(std::uint64_t seed, int count, double radius)
{
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> out;
  for (int i = 0; i < count; ++i) out.push_back(std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng)));
  return out;
}

inline CVector random_vector(std::mt19937_64& rng, int degree, int support)
{
  std::normal_distribution<double> g;
  CVector v = CVector::Zero(degree + 1);
  for (int n = 0; n <= std::min(support, degree); ++n) v(n) = cplx(g(rng), g(rng));
  return v;
}

inline double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline void suite_bargmann(const SuiteConfig& cfg, CaseList& out)
{
  const auto rule = gauss_hermite(std::clamp(cfg.nodes, 1, 256));
  out.guard("bargmann.quadrature_vs_coefficients", "B h_n = e_n at 20 points |z| <= 2, n <= 8", 1e-7, [&] {
    double r = 0.0;
    for (cplx z : disk_samples(cfg.seed, 20, 2.0)) {
      for (int n = 0; n <= 8; ++n) {
        const auto q = bargmann_quadrature([n](double x) { return hermite_function(n, x); }, z, rule);
        r = std::max(r, std::abs(q.value - eval(FockVector::unit(n, n), z)));
      }
    }
    return r;
  });
  out.guard("bargmann.gauss_to_constant", "B maps the normalized Gaussian to 1", 1e-8, [&] {
    const auto q = bargmann_quadrature([](double x) { return kGaussNorm * std::exp(-x * x); }, cplx(0.7, 0.3), rule);
    return std::abs(q.value - 1.0);
  });
  out.guard("bargmann.inverse_quadrature", "B^{-1} e_n = h_n on the plane rule, n <= 8", 1e-6, [&] {
    const PlaneRule plane(96);
    double r = 0.0;
    for (double x : {-1.5, -0.4, 0.0, 0.7, 1.3}) {
      for (int n = 0; n <= 8; ++n) r = std::max(r, std::abs(inverse_bargmann_quadrature(FockVector::unit(n, n), x, plane).value - hermite_function(n, x)));
    }
    return r;
  });
  out.guard("bargmann.isometry", "||B f|| = ||f|| on coefficient vectors", 0.0, [&] {
    std::mt19937_64 rng(cfg.seed);
    const LineVector f(random_vector(rng, cfg.degree, cfg.degree));
    return std::abs(bargmann_coeff(f).norm() - f.norm());
  });
  out.guard("bargmann.endpoint_bound_equality", "||B1||_inf attains c sqrt(pi) ||1||_inf (relative gap)", 0.02, [&] {
    const auto r = verify_pbound([](double) { return 1.0; }, PboundOptions{1.0, {}, 4.0, 100, 100});
    return std::abs(r.lhs / r.rhs - 1.0);
  });
  out.guard("bargmann.endpoint_bound_sign", "||B sign||_inf <= c sqrt(pi) (relative excess)", 1e-3, [&] {
    const auto r = verify_pbound([](double x) { return x < 0.0 ? -1.0 : 1.0; }, PboundOptions{1.0, {0.0}, 4.0, 100, 100});
    return std::max(0.0, r.lhs / r.rhs - 1.0);
  });
}

inline void suite_fourier(const SuiteConfig& cfg, CaseList& out)
{
  const int N = cfg.degree;
  std::mt19937_64 rng(cfg.seed);
  const FockVector f(random_vector(rng, N, N));
  out.guard("fourier.diagonal", "T e_n = i^n e_n", 0.0, [&] {
    double r = 0.0;
    for (int n = 0; n <= N; ++n) r = std::max(r, std::abs(fourier_fock(FockVector::unit(n, N))[n] - detail::i_power(n)));
    return r;
  });
  out.guard("fourier.fourth_power", "T^4 = I", 0.0, [&] {
    return (fourier_fock(fourier_fock(fourier_fock(fourier_fock(f)))).coeffs() - f.coeffs()).cwiseAbs().maxCoeff();
  });
  out.guard("fourier.inverse", "T^{-1} T = I", 0.0, [&] { return (inverse_fourier_fock(fourier_fock(f)).coeffs() - f.coeffs()).cwiseAbs().maxCoeff(); });
  out.guard("fourier.spectral_recombination", "P0 + i P1 - P2 - i P3 = T", 0.0, [&] {
    const cplx I(0.0, 1.0);
    const CVector rec = spectral_projection(0, f).coeffs() + I * spectral_projection(1, f).coeffs() - spectral_projection(2, f).coeffs() -
                        I * spectral_projection(3, f).coeffs();
    return (rec - fourier_fock(f).coeffs()).cwiseAbs().maxCoeff();
  });
  out.guard("fourier.rotation_quarter_turn", "U_{pi/2} = T", 1e-12, [&] {
    return (rotation(std::numbers::pi / 2.0, f).coeffs() - fourier_fock(f).coeffs()).cwiseAbs().maxCoeff() / f.coeffs().cwiseAbs().maxCoeff();
  });
  out.guard("fourier.line_eigenfunctions", "line Fourier transform of h_n is i^n h_n on |x| <= 4, n <= 6", 1e-6, [&] {
    const auto rule = gauss_hermite(std::clamp(cfg.nodes, 1, 256));
    double r = 0.0;
    for (int n = 0; n <= 6; ++n) {
      for (int k = 0; k <= 32; ++k) {
        const double x = -4.0 + k * 0.25;
        const cplx v = line_fourier_premultiplied([n](double t) { return hermite_functions_scaled(n, t, t * t)[n]; }, x, rule);
        r = std::max(r, std::abs(v - detail::i_power(n) * hermite_function(n, x)));
      }
    }
    return r;
  });
}

inline void suite_weyl(const SuiteConfig& cfg, CaseList& out)
{
  const int N = cfg.degree;
  for (cplx a : {cplx(0.5, 0.3), cplx(1.0, -1.0), cplx(2.0, 0.0)}) {
    const std::string tag = "(" + std::to_string(a.real()).substr(0, 4) + "," + std::to_string(a.imag()).substr(0, 5) + ")";
    out.guard("weyl.unitarity" + tag, "W_a^* W_a = I on the block of resolved columns", 1e-10, [&] {
      const auto w = weyl_matrix(a, N);
      const int block = resolved_column_block(w);
      if (block < N / 4) throw std::runtime_error("fewer than N/4 resolved columns");
      return unitarity_residual(w.entries, block);
    });
    out.guard("weyl.composition" + tag, "W_a W_{-a} = I on the block of resolved columns", 1e-10, [&] {
      const auto w = weyl_matrix(-a, N);
      const int block = std::min(resolved_column_block(w), resolved_column_block(weyl_matrix(a, N)));
      const CMatrix p = weyl_matrix(a, N).entries * w.entries - CMatrix::Identity(N + 1, N + 1);
      return interior_max_abs(p, block);
    });
    out.guard("weyl.column0" + tag, "W_a e_0 = k_a", 1e-14, [&] {
      return (weyl_matrix(a, N).entries.col(0) - kernel_vector(a, N, true).coeffs()).cwiseAbs().maxCoeff();
    });
  }
  const int nodes = std::clamp(std::max(cfg.nodes, 2 * N), 1, 256);
  const auto rule = gauss_hermite(nodes);
  for (auto [a, b] : {std::pair{0.5, 0.3}, std::pair{1.0, 0.0}, std::pair{0.0, 0.5}}) {
    const std::string tag = "(" + std::to_string(a).substr(0, 3) + "," + std::to_string(b).substr(0, 3) + ")";
    out.guard("weyl.translation_modulation" + tag, "B M_b T_a B^{-1} = e^{i pi ab} W_{a - pi b i} on e_0, e_1", 1e-6, [&] {
      const auto op = translation_modulation_fock(a, b, N);
      double r = 0.0;
      for (int n = 0; n <= 1; ++n) {
        const auto line = translation_modulation_line(FockVector::unit(n, n), a, b, N, rule);
        r = std::max(r, (line.coeffs() - op.entries.col(n)).cwiseAbs().maxCoeff());
      }
      return r;
    });
  }
}

inline void suite_dilation(const SuiteConfig&, CaseList& out)
{
  for (double r : {0.5, 2.0}) {
    for (int n = 0; n <= 1; ++n) {
      const std::string id = "dilation.two_paths(r=" + std::to_string(r).substr(0, 3) + ",e" + std::to_string(n) + ")";
      out.guard(id, "line route and Fock-side integral agree", 1e-5, [&] { return dilation_fock(r, FockVector::unit(n, n)).discrepancy; });
    }
  }
  out.guard("dilation.identity", "D_1 = I", 1e-10, [&] {
    const auto d = dilation_fock(1.0, FockVector::unit(3, 3));
    return (d.coeffs.resized(3).coeffs() - FockVector::unit(3, 3).coeffs()).cwiseAbs().maxCoeff();
  });
  out.guard("dilation.gaussian", "D_r h_0 has coefficients sqrt(2r/(1+r^2)) gamma^m sqrt((2m)!)/m! on e_{2m}", 1e-10, [&] {
    double worst = 0.0;
    for (double r : {0.5, 2.0}) {
      const auto d = dilation_fock(r, FockVector::unit(0, 0));
      const double gamma = (1.0 - r * r) / (2.0 * (1.0 + r * r));
      double c = std::sqrt(2.0 * r / (1.0 + r * r));
      for (int m = 0; 2 * m <= d.coeffs.degree(); ++m) {
        worst = std::max(worst, std::abs(d.coeffs[2 * m] - c));
        if (2 * m + 1 <= d.coeffs.degree()) worst = std::max(worst, std::abs(d.coeffs[2 * m + 1]));
        c *= gamma * std::sqrt((2.0 * m + 1.0) * (2.0 * m + 2.0)) / (m + 1.0);
      }
    }
    return worst;
  });
}

inline void suite_gabor(const SuiteConfig& cfg, CaseList& out)
{
  const auto centers = center_grid(2.0, 5);
  out.guard("gabor.density(a=b=1,R=50)", "D^+- of the lattice -> 1/(pi ab) (relative error)", 0.05, [&] {
    const auto rep = density_estimate(GaborLattice(1.0, 1.0), {10.0, 20.0, 50.0}, centers);
    const double d = 1.0 / std::numbers::pi;
    return std::max(std::abs(rep.d_minus / d - 1.0), std::abs(rep.d_plus / d - 1.0));
  });
  out.guard("gabor.density_union", "union with a shifted copy has density 2/pi (relative error)", 0.05, [&] {
    const GaborLattice base(1.0, 1.0);
    const auto rep = density_estimate(LatticeUnion{{base, base.shifted(0.5, 0.5)}}, {50.0}, centers);
    const double d = 2.0 / std::numbers::pi;
    return std::max(std::abs(rep.d_minus / d - 1.0), std::abs(rep.d_plus / d - 1.0));
  });
  out.guard("gabor.frame_ratio", "A/B at ab = 0.64 over A/B at ab = 1.21, inverted (N = 80, core 10)", 0.1, [&] {
    const auto dense = frame_bounds_finite(PointSet::from_lattice(GaborLattice(0.8, 0.8), 6.0), 80, 10);
    const auto sparse = frame_bounds_finite(PointSet::from_lattice(GaborLattice(1.1, 1.1), 6.0), 80, 10);
    return (sparse.lower / sparse.upper) / (dense.lower / dense.upper);
  });
  out.guard("gabor.lattice_predicate", "frame iff ab < 1 on (0.9,0.9), (1,1), (2,0.4)", 0.0, [&] {
    const bool ok = lattice_frame_predicate(0.9, 0.9) && !lattice_frame_predicate(1.0, 1.0) && lattice_frame_predicate(2.0, 0.4);
    return ok ? 0.0 : 1.0;
  });
  out.guard("gabor.density_predicate", "density verdicts: 0.8 frame, 1.0 undecided, 1.2 not-frame", 0.0, [&] {
    const auto verdict = [&](double s) {
      const GaborLattice lat(s, s);
      return density_frame_predicate(density_estimate(lat, {30.0, 50.0}, centers), true);
    };
    const bool ok = verdict(0.8) == FrameVerdict::frame && verdict(1.0) == FrameVerdict::undecided && verdict(1.2) == FrameVerdict::not_frame;
    return ok ? 0.0 : 1.0;
  });
  out.guard("gabor.kernel_gram", "<k_zi, k_zj> matches e^{conj(zi) zj - (|zi|^2+|zj|^2)/2}", 1e-12, [&] {
    const auto pts = disk_samples(cfg.seed, 6, 2.0);
    CMatrix g(6, 6);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) g(i, j) = inner(kernel_vector(pts[i], cfg.degree, true), kernel_vector(pts[j], cfg.degree, true));
    }
    return max_abs(g - kernel_gram_closed_form(pts));
  });
  out.guard("gabor.box_window_origin", "B chi_[0,1)(0) = c (sqrt(pi)/2) erf(1)", 1e-10, [&] {
    return std::abs(box_window_fock(0.0) - kGaussNorm * std::sqrt(std::numbers::pi) / 2.0 * std::erf(1.0));
  });
  out.guard("gabor.box_window_two_paths", "pointwise and coefficient box window agree at z = 1+i", 1e-6, [&] {
    return std::abs(box_window_fock(cplx(1.0, 1.0)) - eval(box_window_coeffs(std::max(cfg.degree, 60)), cplx(1.0, 1.0)));
  });
  out.guard("gabor.box_gram_trend", "box window Gram defect shrinks from N = 60 to N = 120 (ratio)", 0.99, [&] {
    const auto g60 = box_frame_gram({0, 1}, {0, 1}, 60).gram;
    const auto g120 = box_frame_gram({0, 1}, {0, 1}, 120).gram;
    return max_abs(g120 - CMatrix::Identity(4, 4)) / max_abs(g60 - CMatrix::Identity(4, 4));
  });
  out.guard("gabor.independence", "W_0 e_0, W_1 e_0 independent with Gram determinant 1 - 1/e", 1e-12, [&] {
    const auto r = linear_independence_check(FockVector::unit(0, 0), {0.0, 1.0}, cfg.degree);
    // eigenvalues of [[1, q], [q, 1]] are 1 -+ q with q = e^{-1/2}
    return r.independent ? std::abs(r.min_singular - (1.0 - std::exp(-0.5))) : 1.0;
  });
}

inline void suite_hilbert(const SuiteConfig& cfg, CaseList& out)
{
  const int N = std::max(cfg.degree, 2);
  out.guard("hilbert.column0", "T 1 = -(2/sqrt(pi)) A(z/sqrt 2)", 1e-15, [&] {
    const CVector expect = -2.0 / std::sqrt(std::numbers::pi) * antiderivative_half_vector(N).coeffs();
    return (hilbert_fock_matrix(N).entries.col(0) - expect).cwiseAbs().maxCoeff();
  });
  out.guard("hilbert.parity", "<T e_m, e_n> = 0 when m = n mod 2", 0.0, [&] {
    const auto t = hilbert_fock_matrix(N).entries;
    double r = 0.0;
    for (int i = 0; i <= N; ++i) {
      for (int j = i % 2; j <= N; j += 2) r = std::max(r, std::abs(t(i, j)));
    }
    return r;
  });
  out.guard("hilbert.norm_series", "series for ||A(z/sqrt 2)||^2 = coefficient norm, 200 terms", 1e-12, [&] {
    return std::abs(fock_norm_A(200).value - antiderivative_half_vector(399).norm_squared());
  });
  out.guard("hilbert.column0_norm", "||T e_0||^2 = (4/pi) ||A(z/sqrt 2)||^2", 1e-12, [&] {
    return std::abs(hilbert_fock_matrix(N).entries.col(0).squaredNorm() - 4.0 / std::numbers::pi * fock_norm_A((N + 1) / 2).value);
  });
  std::vector<double> res;
  for (int n : {16, 32, 64}) {
    out.guard("hilbert.tsquare(N=" + std::to_string(n) + ")", "max |T^2 + I| on e_0..e_8 (reported; ceiling only)", 1.0, [&] {
      const auto t = hilbert_fock_matrix(n).entries;
      const CMatrix sq = t * t + CMatrix::Identity(n + 1, n + 1);
      res.push_back(interior_max_abs(sq, 9));
      return res.back();
    });
  }
  out.guard("hilbert.tsquare_trend", "T^2 + I residual decreases with N (largest successive ratio)", 0.99, [&] {
    if (res.size() != 3) throw std::runtime_error("missing residuals");
    return std::max(res[1] / res[0], res[2] / res[1]);
  });
  out.guard("hilbert.linear_symbol", "S_u = M - D", 0.0, [&] {
    const auto md = md_matrices(N);
    return max_abs(s_phi_matrix(EntireSymbol::from_doubles({0.0, 1.0}), N).entries - (md.M.entries - md.D.entries));
  });
  out.guard("hilbert.exponential_symbol", "S_{e^{u a}} = e^{a^2/2} W_a, a = 0.5, interior", 1e-8, [&] {
    const double a = 0.5;
    const auto s = s_phi_matrix(EntireSymbol::exp_linear(a, 2 * N), N).entries;
    const CMatrix w = std::exp(a * a / 2.0) * weyl_matrix(a, N).entries;
    return interior_max_abs(s - w, N / 2);
  });
  out.guard("hilbert.berezin", "<S k_z, k_z> = phi(z - zbar) at 10 points, three symbols", 1e-6, [&] {
    double r = 0.0;
    const auto pts = disk_samples(cfg.seed + 1, 10, 1.5);
    for (const auto& phi : {EntireSymbol::from_doubles({0.0, 1.0}), EntireSymbol::from_doubles({1.0, 0.5, 0.25}), EntireSymbol::exp_quadratic(0.25, 2 * N)}) {
      const auto s = s_phi_matrix(phi, N);
      for (cplx z : pts) {
        const auto b = berezin_check(s, phi, z);
        r = std::max(r, std::abs(b.lhs - b.rhs));
      }
    }
    return r;
  });
  out.guard("hilbert.bounded_probe", "e^{0.25 u^2}: norm ratio across N = 16, 32, 64 (max)", 1.1, [&] {
    const auto n = boundedness_probe(EntireSymbol::exp_quadratic(0.25, 128), {16, 32, 64}, 200, cfg.seed);
    return std::max(n[1] / n[0], n[2] / n[1]);
  });
  out.guard("hilbert.unbounded_probe", "e^{0.6 u^2}: inverse norm ratio across N = 16, 32, 64 (max)", 0.5, [&] {
    const auto n = boundedness_probe(EntireSymbol::exp_quadratic(0.6, 128), {16, 32, 64}, 200, cfg.seed);
    return std::max(n[0] / n[1], n[1] / n[2]);
  });
}

inline void suite_uncertainty(const SuiteConfig& cfg, CaseList& out)
{
  const int N = std::max(cfg.degree, 4);
  out.guard("uncertainty.commutator", "[S1, S2] = -2i I on indices 0..N-2", 1e-12, [&] {
    const CMatrix c = commutator(s1_matrix(N).entries, s2_matrix(N).entries) + cplx(0.0, 2.0) * CMatrix::Identity(N + 1, N + 1);
    return interior_max_abs(c, N - 1);
  });
  out.guard("uncertainty.self_adjoint", "S1 = S1^*, S2 = S2^*", 0.0, [&] {
    return std::max(max_abs(s1_matrix(N).entries - s1_matrix(N).entries.adjoint()), max_abs(s2_matrix(N).entries - s2_matrix(N).entries.adjoint()));
  });
  out.guard("uncertainty.inequality", "lhs >= ||f||^2 on 20 random padded vectors (largest deficit)", 1e-9, [&] {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 20; ++k) {
      FockVector f(random_vector(rng, N, N - 2));
      f *= 1.0 / f.norm();
      const auto v = uncertainty_product(f, u(rng), u(rng));
      if (!v.reliable) throw std::runtime_error("unpadded test vector");
      worst = std::max(worst, v.rhs - v.lhs);
    }
    return worst;
  });
  out.guard("uncertainty.equality", "extremal family attains equality, 10 draws with |alpha| <= 0.4", 1e-6, [&] {
    std::mt19937_64 rng(cfg.seed + 7);
    std::uniform_real_distribution<double> u(-1.0, 1.0), al(-0.4, 0.4);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double alpha = al(rng);
      ExtremalParams p;
      p.c = (1.0 + 2.0 * alpha) / (1.0 - 2.0 * alpha);
      p.a = u(rng);
      p.b = u(rng);
      const auto f = extremal_coeffs(p, certified_extremal_degree(p));
      worst = std::max(worst, std::abs(uncertainty_product(f, p.a, p.b).gap()));
    }
    return worst;
  });
}

inline void suite_quantize(const SuiteConfig& cfg, CaseList& out)
{
  const int N = std::max(cfg.degree, 8);
  out.guard("quantize.anti_wick", "sum a_mn D^n M^m = T_phi for all monomials m + n <= 4", 1e-12, [&] {
    double r = 0.0;
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; m + n <= 4; ++n) r = std::max(r, anti_wick_toeplitz_residual(PolySymbol::monomial(m, n), N) / std::pow(N + 1.0, 0.5 * (m + n)));
    }
    return r;
  });
  out.guard("quantize.moments", "int z^p zbar^q d lambda = delta_pq p! for p, q <= 6 (plane rule)", 1e-10, [&] {
    const PlaneRule plane(48);
    double r = 0.0;
    for (int p = 0; p <= 6; ++p) {
      for (int q = 0; q <= 6; ++q) {
        const cplx v = plane.integrate_gaussian([&](cplx z) { return std::pow(z, p) * std::pow(std::conj(z), q); });
        r = std::max(r, std::abs(v - gaussian_moment(p, q)));
      }
    }
    return r;
  });
  out.guard("quantize.hermitian", "real symbols give Hermitian Toeplitz matrices", 0.0, [&] {
    PolySymbol s;
    s.add(1, 1, 1.0).add(2, 0, cplx(0.3, 0.2)).add(0, 2, cplx(0.3, -0.2)).add(0, 0, 2.0);
    const auto t = toeplitz_matrix(s, N).entries;
    return max_abs(t - t.adjoint());
  });
  const std::vector<std::pair<std::string, PolySymbol>> symbols{
      {"1", PolySymbol::monomial(0, 0)},
      {"|z|^2", PolySymbol::monomial(1, 1)},
      {"z+zbar", PolySymbol().add(0, 1, 1.0).add(1, 0, 1.0)},
      {"z", PolySymbol::monomial(0, 1)},
      {"zbar^2", PolySymbol::monomial(2, 0)},
      {"z^2-i|z|^2", PolySymbol().add(0, 2, 1.0).add(1, 1, cplx(0.0, -1.0))},
  };
  for (const auto& [name, phi] : symbols) {
    out.guard("quantize.weyl_heat(" + name + ")", "T_phi = sigma(D, X) with sigma the heat symbol of phi", 1e-8, [&] { return weyl_toeplitz_residual(phi, N); });
  }
  out.guard("quantize.oscillator", "T_{|z|^2} and X^2 + D^2 + 1/2 both equal diag(n + 1)", 1e-10, [&] {
    CMatrix diag = CMatrix::Zero(N + 1, N + 1);
    for (int n = 0; n <= N; ++n) diag(n, n) = n + 1.0;
    RealSymbol osc;
    osc.add(2, 0, 1.0).add(0, 2, 1.0).add(0, 0, 0.5);
    return std::max(max_abs(toeplitz_monomial_matrix(1, 1, N).entries - diag), max_abs(weyl_quantize_poly(osc, N).entries - diag));
  });
}

}  // namespace detail

/**
 * Runs one named suite ("all" runs every suite). Cases are sorted by id,
 * so identical configs produce identical reports.
 */
inline VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg = {})
{
  if (cfg.degree < 1 || cfg.nodes < 1) throw std::invalid_argument("run_suite: degree and nodes must be positive");
  detail::CaseList list;
  const auto run_one = [&](const std::string& s) {
    if (s == "bargmann") detail::suite_bargmann(cfg, list);
    else if (s == "fourier") detail::suite_fourier(cfg, list);
    else if (s == "weyl") detail::suite_weyl(cfg, list);
    else if (s == "dilation") detail::suite_dilation(cfg, list);
    else if (s == "gabor") detail::suite_gabor(cfg, list);
    else if (s == "hilbert") detail::suite_hilbert(cfg, list);
    else if (s == "uncertainty") detail::suite_uncertainty(cfg, list);
    else if (s == "quantize") detail::suite_quantize(cfg, list);
    else throw std::invalid_argument("unknown suite '" + s + "'");
  };
  if (name == "all") {
    for (const auto& s : suite_names()) run_one(s);
  } else {
    run_one(name);
  }
  VerificationReport rep{name, cfg, list.take()};
  std::sort(rep.cases.begin(), rep.cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return rep;
}

}  // namespace fockdict
