// fockdict: command-line front end for the Bargmann/Fock-space operator dictionary.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fockdict/fockdict.hpp"

namespace {

using nlohmann::json;
using namespace fockdict;

struct Globals {
  int degree = 64;
  int nodes = 128;
  std::uint64_t seed = 20150101;
  std::string format = "json";
  std::string out;
};

class Emitter {
 public:
  explicit Emitter(const Globals& g) : g_(g) {}

  void vector(const CVector& v) const { write(g_.format == "csv" ? io::to_csv(v) : io::to_json(v).dump() + "\n"); }
  void matrix(const CMatrix& m) const { write(g_.format == "csv" ? io::to_csv(m) : io::to_json(m).dump() + "\n"); }

  /// Objects are JSON only; in CSV mode they become key,value rows.
  void object(const json& j) const
  {
    if (g_.format != "csv") {
      write(j.dump(2) + "\n");
      return;
    }
    std::string text;
    for (const auto& [k, v] : j.items()) text += k + "," + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    write(text);
  }

  void report(const VerificationReport& rep) const
  {
    if (g_.format != "csv") {
      write(rep.to_json().dump(2) + "\n");
      return;
    }
    std::string text = "id,residual,tolerance,pass\n";
    for (const auto& c : rep.cases) text += c.id + "," + io::format_double(c.residual) + "," + io::format_double(c.tolerance) + "," + (c.pass ? "true" : "false") + "\n";
    write(text);
  }

 private:
  void write(const std::string& text) const
  {
    if (g_.out.empty()) {
      std::cout << text;
    } else {
      io::write_file(g_.out, text);
    }
  }

  const Globals& g_;
};

std::vector<double> parse_list(const std::string& text, std::size_t expected = 0)
{
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) throw std::invalid_argument("malformed number '" + item + "'");
  }
  if (expected && out.size() != expected) throw std::invalid_argument("expected " + std::to_string(expected) + " comma-separated values in '" + text + "'");
  return out;
}

FockVector read_fock(const std::string& path) { return FockVector(io::vector_from_json(io::read_json_file(path))); }

int default_degree()
{
  if (const char* env = std::getenv("FOCKDICT_DEGREE")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "fockdict: ignoring invalid FOCKDICT_DEGREE='" << env << "'\n";
  }
  return 64;
}

}  // namespace

int main(int argc, char** argv)
{
  Globals g;
  g.degree = default_degree();

  CLI::App app{"fockdict: the Bargmann transform and its operator dictionary on truncated bases"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--degree", g.degree, "Truncation degree N (default 64, or $FOCKDICT_DEGREE)")->check(CLI::Range(1, 4096));
  app.add_option("--nodes", g.nodes, "Gauss-Hermite node count for line quadrature")->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Write output to this file instead of stdout");

  // bargmann
  auto* bargmann = app.add_subcommand("bargmann", "Bargmann transform of a Hermite-coefficient vector");
  std::string b_input, b_mode = "coeff";
  bargmann->add_option("--input", b_input, "LineVector JSON (array of [re, im])")->required();
  bargmann->add_option("--mode", b_mode, "coeff: exact coefficient map; quad: integral formula")->check(CLI::IsMember({"coeff", "quad"}));

  // op apply / op verify
  auto* op = app.add_subcommand("op", "Operator dictionary");
  op->require_subcommand(1);
  auto* op_apply = op->add_subcommand("apply", "Apply an operator to a FockVector");
  std::string op_name, op_params, op_in;
  op_apply->add_option("--op", op_name, "Operator")->required()->check(CLI::IsMember({"fourier", "rotate", "weyl", "dilate", "a1", "a2"}));
  op_apply->add_option("--params", op_params, "rotate: theta; weyl: re,im; dilate: r");
  op_apply->add_option("--in", op_in, "FockVector JSON")->required();
  auto* op_verify = op->add_subcommand("verify", "Check a structural identity on the interior block");
  std::string verify_name;
  op_verify->add_option("--op", verify_name, "commutator: [D,M] = [A2,A1] = I; unitarity: W_a^* W_a = I")->required()->check(
      CLI::IsMember({"commutator", "unitarity"}));

  // singular
  auto* singular = app.add_subcommand("singular", "Operators S_phi and the Hilbert transform");
  std::string phi_path, apply_path;
  singular->add_option("--phi", phi_path, "Taylor coefficients of phi, JSON array of [re, im]");
  singular->add_option("--apply", apply_path, "FockVector JSON to apply S_phi to");
  auto* hilbert = singular->add_subcommand("hilbert", "The Hilbert transform on F^2");
  std::string hilbert_check = "tsquare";
  hilbert->add_option("--check", hilbert_check, "tsquare | berezin | norm")->check(CLI::IsMember({"tsquare", "berezin", "norm"}));

  // gabor
  auto* gabor = app.add_subcommand("gabor", "Lattices, densities and frame bounds");
  gabor->require_subcommand(1);
  std::string lattice = "1,1", radii = "10,20,50";
  int core = -1;
  auto* g_density = gabor->add_subcommand("density", "Beurling density estimates of the lattice n a - i pi m b");
  g_density->add_option("--lattice", lattice, "a,b");
  g_density->add_option("--R", radii, "Comma-separated radii");
  auto* g_frame = gabor->add_subcommand("frame-bounds", "Frame bounds of the clipped lattice on span{e_0..e_core}");
  g_frame->add_option("--lattice", lattice, "a,b");
  g_frame->add_option("--core", core, "Core degree (default N/8)");
  auto* g_pred = gabor->add_subcommand("predicate", "Frame verdicts from ab < 1 and from density");
  g_pred->add_option("--lattice", lattice, "a,b");

  // uncertainty
  auto* unc = app.add_subcommand("uncertainty", "The uncertainty inequality and its extremal functions");
  std::string unc_f;
  double unc_a = 0.0, unc_b = 0.0;
  unc->add_option("--f", unc_f, "FockVector JSON");
  unc->add_option("--a", unc_a, "a");
  unc->add_option("--b", unc_b, "b");
  auto* extremal = unc->add_subcommand("extremal", "Coefficients of C exp(alpha z^2 + beta z)");
  double ex_c = 1.0, ex_a = 0.0, ex_b = 0.0;
  extremal->add_option("--c", ex_c, "c > 0")->required();
  extremal->add_option("--a", ex_a, "a");
  extremal->add_option("--b", ex_b, "b");

  // quantize
  auto* quant = app.add_subcommand("quantize", "Toeplitz, anti-Wick and Weyl quantization");
  quant->require_subcommand(1);
  int q_m = 0, q_n = 0;
  std::string sym_path;
  auto* q_toeplitz = quant->add_subcommand("toeplitz", "Matrix of T for zbar^m z^n");
  q_toeplitz->add_option("--m", q_m, "Power of zbar")->required();
  q_toeplitz->add_option("--n", q_n, "Power of z")->required();
  auto* q_aw = quant->add_subcommand("anti-wick", "Anti-Wick sigma(Z, Z*) against T_phi");
  q_aw->add_option("--symbol", sym_path, "Symbol JSON: array of [m, n, re, im]")->required();
  auto* q_weyl = quant->add_subcommand("weyl", "Weyl quantization of the heat symbol against T_phi");
  q_weyl->add_option("--symbol", sym_path, "Symbol JSON: array of [m, n, re, im]")->required();

  // suite
  auto* suite = app.add_subcommand("suite", "Run a verification suite and emit a report");
  std::string suite_name = "all";
  suite->add_option("name", suite_name, "bargmann | fourier | weyl | dilation | gabor | hilbert | uncertainty | quantize | all");

  CLI11_PARSE(app, argc, argv);

  const Emitter emit(g);
  const int N = g.degree;
  try {
    if (*bargmann) {
      const LineVector f(io::vector_from_json(io::read_json_file(b_input)));
      if (b_mode == "coeff") {
        emit.vector(bargmann_coeff(f).resized(N).coeffs());
      } else {
        bool reliable = true;
        const auto c = bargmann_coeffs_quadrature([&](double x) { return eval_line(f, x); }, N, gauss_hermite(g.nodes), &reliable);
        if (!reliable) std::cerr << "fockdict: warning: quadrature outside its oscillation budget; raise --nodes\n";
        emit.vector(c.coeffs());
      }
      return 0;
    }

    if (*op_apply) {
      const auto f = read_fock(op_in);
      const int deg = std::max(N, f.degree());
      if (op_name == "fourier") {
        emit.vector(fourier_fock(f).coeffs());
      } else if (op_name == "rotate") {
        emit.vector(rotation(parse_list(op_params, 1)[0], f).coeffs());
      } else if (op_name == "weyl") {
        const auto p = parse_list(op_params, 2);
        const auto w = weyl_matrix(cplx(p[0], p[1]), deg);
        if (!w.resolved) std::cerr << "fockdict: warning: displaced kernel not resolved at this degree\n";
        emit.vector(w.apply(f).coeffs());
      } else if (op_name == "dilate") {
        const auto d = dilation_fock(parse_list(op_params, 1)[0], f);
        if (!d.resolved) std::cerr << "fockdict: warning: dilation paths disagree by " << d.discrepancy << "\n";
        emit.vector(d.coeffs.coeffs());
      } else if (op_name == "a1") {
        emit.vector(a1_matrix(f.degree() + 1).apply(f).coeffs());
      } else {
        emit.vector(a2_matrix(f.degree() + 1).apply(f).coeffs());
      }
      return 0;
    }

    if (*op_verify) {
      json j;
      if (verify_name == "commutator") {
        const auto md = md_matrices(N);
        const CMatrix I = CMatrix::Identity(N + 1, N + 1);
        const double r1 = interior_max_abs(commutator(md.D.entries, md.M.entries) - I, N);
        const double r2 = interior_max_abs(commutator(a2_matrix(N).entries, a1_matrix(N).entries) - I, N);
        j = {{"name", "commutator"}, {"block", N}, {"residual", std::max(r1, r2)}};
      } else {
        const auto w = weyl_matrix(cplx(1.0, 0.5), N);
        const int block = resolved_column_block(w);
        j = {{"name", "unitarity"}, {"block", block}, {"residual", unitarity_residual(w.entries, block)}};
      }
      emit.object(j);
      return j["residual"].get<double>() <= 1e-10 ? 0 : 1;
    }

    if (*hilbert) {
      json j{{"check", hilbert_check}, {"degree", N}};
      const auto t = hilbert_fock_matrix(N);
      if (hilbert_check == "tsquare") {
        const CMatrix sq = t.entries * t.entries + CMatrix::Identity(N + 1, N + 1);
        j["block"] = std::min(9, N + 1);
        j["residual"] = interior_max_abs(sq, 9);
      } else if (hilbert_check == "berezin") {
        const auto phi = hilbert_symbol(2 * N);
        double r = 0.0;
        for (cplx z : {cplx(0.3, 0.2), cplx(-0.5, 0.7), cplx(1.0, -0.4)}) {
          const auto b = berezin_check(t, phi, z);
          r = std::max(r, std::abs(b.lhs - b.rhs));
        }
        j["residual"] = r;
      } else {
        const double col = t.entries.col(0).squaredNorm();
        const double series = 4.0 / std::numbers::pi * fock_norm_A((N + 1) / 2).value;
        j["column0_norm_sq"] = col;
        j["series"] = series;
        j["limit"] = 1.0;
        j["residual"] = std::abs(col - series);
      }
      emit.object(j);
      return 0;
    }

    if (*singular) {
      if (phi_path.empty() || apply_path.empty()) throw std::invalid_argument("singular needs --phi and --apply (or the hilbert subcommand)");
      const CVector taylor = io::vector_from_json(io::read_json_file(phi_path));
      const auto phi = EntireSymbol::from_doubles({taylor.data(), taylor.data() + taylor.size()}, "phi");
      const auto f = read_fock(apply_path);
      const int deg = std::max({N, f.degree(), (phi.degree() + 1) / 2});
      emit.vector(s_phi_matrix(phi, deg).apply(f).coeffs());
      return 0;
    }

    if (*g_density || *g_frame || *g_pred) {
      const auto ab = parse_list(lattice, 2);
      const GaborLattice lat(ab[0], ab[1]);
      if (*g_density) {
        const auto rep = density_estimate(lat, parse_list(radii), center_grid(2.0, 5));
        emit.object({{"R_values", rep.R_values}, {"lower_est", rep.lower_est}, {"upper_est", rep.upper_est}, {"D_minus", rep.d_minus}, {"D_plus", rep.d_plus},
                     {"expected", lat.density()}});
      } else if (*g_frame) {
        const int k = core >= 0 ? core : N / 8;
        const auto set = PointSet::from_lattice(lat, std::sqrt(N / 2.0));
        const auto fb = frame_bounds_finite(set, N, k);
        emit.object({{"points", set.size()}, {"core", k}, {"A_est", fb.lower}, {"B_est", fb.upper}});
      } else {
        const auto rep = density_estimate(lat, {30.0, 50.0}, center_grid(2.0, 5));
        const auto sep = separation_check(PointSet::from_lattice(lat, 10.0));
        emit.object({{"ab", ab[0] * ab[1]},
                     {"lattice_frame", lattice_frame_predicate(ab[0], ab[1])},
                     {"density_verdict", to_string(density_frame_predicate(rep, sep.separated))},
                     {"D_minus", rep.d_minus}});
      }
      return 0;
    }

    if (*extremal) {
      ExtremalParams p;
      p.c = ex_c;
      p.a = ex_a;
      p.b = ex_b;
      emit.vector(extremal_coeffs(p, N).coeffs());
      return 0;
    }

    if (*unc) {
      if (unc_f.empty()) throw std::invalid_argument("uncertainty needs --f (or the extremal subcommand)");
      const auto v = uncertainty_product(read_fock(unc_f), unc_a, unc_b);
      if (!v.reliable) std::cerr << "fockdict: warning: top coefficients of f are not negligible; pad f with zeros\n";
      emit.object({{"lhs", v.lhs}, {"rhs", v.rhs}, {"gap", v.gap()}, {"reliable", v.reliable}});
      return 0;
    }

    if (*q_toeplitz) {
      emit.matrix(toeplitz_monomial_matrix(q_m, q_n, N).entries);
      return 0;
    }

    if (*q_aw || *q_weyl) {
      const auto s = io::poly_symbol_from_json(io::read_json_file(sym_path));
      const double r = *q_aw ? anti_wick_toeplitz_residual(s, N) : weyl_toeplitz_residual(s, N);
      const double tol = *q_aw ? 1e-12 * std::pow(N + 1.0, 0.5 * s.degree()) : 1e-8;
      emit.object({{"residual", r}, {"tolerance", tol}, {"degree", N}});
      return r <= tol ? 0 : 1;
    }

    if (*suite) {
      const auto rep = run_suite(suite_name, {N, g.nodes, g.seed});
      emit.report(rep);
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "fockdict: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
