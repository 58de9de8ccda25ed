// pcfosc: harmonic oscillator eigensystems through parabolic cylinder functions.
//
// Exit status: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pcfosc/pcfosc.hpp"
#include "pcfosc/report.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Params {
  unsigned n = 0;
  double x = 0.0;
  std::optional<double> z;
  double mu = 1.0, omega = 1.0, hbar = 1.0;
  double q = 0.0, efield = 0.0;
  long gamma_sq = 0;
  long m_max = 0;
  double epsilon = 1.0, sigma = 1.0, k = 70.0;
  bool k_from_fit = false;
  std::optional<double> delta_e;
  double lo = 0.0, hi = 0.0, step = 0.0;
  std::string out, levels_out, suite = "all";
};

void add_oscillator_flags(CLI::App* cmd, Params& p) {
  cmd->add_option("--mu", p.mu, "reduced mass")->capture_default_str();
  cmd->add_option("--omega", p.omega, "angular frequency")->capture_default_str();
  cmd->add_option("--hbar", p.hbar, "reduced Planck constant")->capture_default_str();
}

// An empty path or "-" means standard output.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw io_error("cannot open " + path + " for writing");
  file << text;
  file.close();
  if (!file) throw io_error("failed writing " + path);
}

std::string default_levels_path(const std::string& curves) {
  if (curves.empty() || curves == "-") return "";
  std::filesystem::path p(curves);
  const std::string stem = p.stem().string();
  return (p.parent_path() / (stem + "_levels.csv")).string();
}

int run_table(const Params& p) {
  std::ostringstream s;
  pcfosc::write_table(s, p.n);
  std::cout << s.str();
  return 0;
}

int run_eval(const Params& p) {
  using namespace pcfosc;
  if (p.z) {
    std::cout << "n,z,D_n\n" << p.n << ',' << format_number(*p.z) << ',' << format_number(eval_D(p.n, *p.z)) << '\n';
    return 0;
  }
  const OscillatorSpec spec(p.mu, p.omega, p.hbar);
  const double gamma = gamma_of(FieldSpec{p.q, p.efield}, spec);
  const double value = eval_psi_shifted(ShiftedState::continuous(p.n, gamma, spec), p.x);
  std::cout << "n,x,psi\n" << p.n << ',' << format_number(p.x) << ',' << format_number(value) << '\n';
  return 0;
}

int run_spectrum(const Params& p) {
  using namespace pcfosc;
  const OscillatorSpec spec(p.mu, p.omega, p.hbar);
  check_degree_cap(p.n, kDefaultMaxDegree);
  std::cout << "n,E_n\n";
  for (unsigned n = 0; n <= p.n; ++n) std::cout << n << ',' << format_number(energy(n, spec)) << '\n';
  return 0;
}

int run_field(const Params& p) {
  using namespace pcfosc;
  const OscillatorSpec spec(p.mu, p.omega, p.hbar);
  const FieldSpec field{p.q, p.efield};
  const double gamma = gamma_of(field, spec);
  const PotentialMinimum pm = potential_minimum(field, spec);
  std::cout << "gamma," << format_number(gamma) << "\ngamma_sq," << format_number(gamma * gamma) << "\nx_min,"
            << format_number(pm.x_min) << "\ne_min," << format_number(pm.e_min) << "\n\nn,E_n\n";
  const auto ladder = continuous_branch_spectrum(gamma, p.n + 1, spec);
  for (std::size_t n = 0; n < ladder.size(); ++n) std::cout << n << ',' << format_number(ladder[n]) << '\n';
  if (p.gamma_sq != 0) {
    std::cout << "\nm,E_m,pcf_index\n";
    for (const auto& level : integer_branch_spectrum(p.gamma_sq, p.m_max, spec)) {
      std::cout << level.m << ',' << format_number(level.energy) << ',' << level.pcf_index << '\n';
    }
  }
  return 0;
}

int run_lj(const Params& p) {
  using namespace pcfosc;
  const long g2 = p.gamma_sq == 0 ? 1 : p.gamma_sq;
  const LJSpec spec(p.epsilon, p.sigma, g2);
  const OscillatorSpec fitted = fit_oscillator(spec, p.mu, p.hbar);
  const LJMinimum lm = lj_minimum(spec);
  std::cout << "r_min," << format_number(lm.r_min) << "\nu_min," << format_number(lm.u_min) << "\nhbar_omega,"
            << format_number(fitted.hbar_omega()) << "\nomega," << format_number(fitted.omega()) << "\nk_fit,"
            << format_number(fitted.force_constant()) << "\nk_curvature," << format_number(curvature_matched_k(spec))
            << "\n\n";
  write_figure2_levels(std::cout, spec);
  if (p.delta_e) {
    const GammaSqEstimate est = estimate_gamma_sq(p.epsilon, *p.delta_e);
    std::cout << "\nestimated_gamma_sq," << est.gamma_sq << "\nresidual," << format_number(est.residual) << '\n';
    if (est.spacing_exceeds_depth) std::cerr << "warning: level spacing exceeds the well depth\n";
  }
  return 0;
}

int run_figure1(const Params& p) {
  std::ostringstream s;
  pcfosc::write_figure1(s, p.lo, p.hi, p.step);
  emit(p.out, s.str());
  return 0;
}

int run_figure2(const Params& p) {
  using namespace pcfosc;
  const LJSpec spec(p.epsilon, p.sigma, p.gamma_sq == 0 ? 4 : p.gamma_sq);
  Figure2Options opt;
  opt.k = p.k_from_fit ? fit_oscillator(spec, p.mu, p.hbar).force_constant() : p.k;
  opt.r_lo = p.lo;
  opt.r_hi = p.hi;
  opt.step = p.step;
  std::ostringstream curves, levels;
  write_figure2_curves(curves, spec, opt);
  write_figure2_levels(levels, spec);
  emit(p.out, curves.str());
  const std::string levels_path = p.levels_out.empty() ? default_levels_path(p.out) : p.levels_out;
  emit(levels_path, levels.str());
  return 0;
}

int run_verify(const Params& p) {
  using namespace pcfosc;
  VerifyReport report;
  const bool all = p.suite == "all";
  if (all || p.suite == "free") verify_free(report);
  if (all || p.suite == "field") verify_field(report, p.gamma_sq == 0 ? 1 : p.gamma_sq);
  if (all || p.suite == "lj") {
    const long g2 = p.gamma_sq == 0 ? 2 : p.gamma_sq;
    verify_lj(report, p.epsilon, g2);
    std::cout << "L-J ladder (epsilon=" << format_number(p.epsilon) << ", gamma^2=" << g2 << "):";
    for (const auto& level : bound_levels(LJSpec(p.epsilon, 1.0, g2))) std::cout << ' ' << format_number(level.energy);
    std::cout << '\n';
  }
  write_report(std::cout, report);
  return report.passed() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic oscillator eigensystems via parabolic cylinder functions"};
  app.require_subcommand(1);
  // One parameter set per subcommand: CLI11 writes defaults eagerly.
  Params tp, ep, sp, fp, lp, vp, f1p, f2p;

  auto* table = app.add_subcommand("table", "print the polynomial factors of D_0..D_n");
  table->add_option("--n", tp.n, "highest order")->default_val(5);

  auto* eval = app.add_subcommand("eval", "evaluate psi_n(x), or D_n(z) with --z");
  eval->add_option("--n", ep.n, "quantum number")->default_val(0);
  eval->add_option("--x", ep.x, "position")->default_val(0.0);
  eval->add_option("--z", ep.z, "evaluate D_n at this argument instead");
  eval->add_option("--q", ep.q, "charge")->default_val(0.0);
  eval->add_option("--efield", ep.efield, "field magnitude")->default_val(0.0);
  add_oscillator_flags(eval, ep);

  auto* spectrum = app.add_subcommand("spectrum", "free oscillator energy ladder");
  spectrum->add_option("--n", sp.n, "highest quantum number")->default_val(10);
  add_oscillator_flags(spectrum, sp);

  auto* field = app.add_subcommand("field", "oscillator in a uniform field");
  field->add_option("--n", fp.n, "highest continuous-branch level")->default_val(5);
  field->add_option("--q", fp.q, "charge")->default_val(1.0);
  field->add_option("--efield", fp.efield, "field magnitude")->default_val(1.0);
  field->add_option("--gamma-sq", fp.gamma_sq, "also list the integer branch for this gamma^2")
      ->check(CLI::PositiveNumber);
  field->add_option("--m-max", fp.m_max, "highest integer-branch label")->default_val(0);
  add_oscillator_flags(field, fp);

  auto* lj = app.add_subcommand("lj", "harmonic approximation of a Lennard-Jones well");
  lj->add_option("--epsilon", lp.epsilon, "well depth")->default_val(1.0);
  lj->add_option("--sigma", lp.sigma, "length parameter")->default_val(1.0);
  lj->add_option("--gamma-sq", lp.gamma_sq, "number of bound states")->default_val(1)->check(CLI::PositiveNumber);
  lj->add_option("--delta-e", lp.delta_e, "observed level spacing to invert for gamma^2");
  lj->add_option("--mu", lp.mu, "reduced mass")->default_val(1.0);
  lj->add_option("--hbar", lp.hbar, "reduced Planck constant")->default_val(1.0);

  auto* verify = app.add_subcommand("verify", "run the numerical verification suites");
  verify->add_option("--suite", vp.suite, "free, field, lj or all")
      ->default_val("all")
      ->check(CLI::IsMember({"free", "field", "lj", "all"}));
  verify->add_option("--gamma-sq", vp.gamma_sq, "gamma^2 for the field and lj suites")->check(CLI::PositiveNumber);
  verify->add_option("--epsilon", vp.epsilon, "well depth for the lj suite")->default_val(1.0);

  auto* fig1 = app.add_subcommand("figure1", "CSV of D_0..D_3 on a uniform grid");
  fig1->add_option("--lo", f1p.lo, "lowest z")->default_val(-6.0);
  fig1->add_option("--hi", f1p.hi, "highest z")->default_val(6.0);
  fig1->add_option("--step", f1p.step, "grid step")->default_val(0.05);
  fig1->add_option("--out", f1p.out, "output path (stdout if omitted)");

  auto* fig2 = app.add_subcommand("figure2", "CSV of the L-J well, its harmonic curve and levels");
  fig2->add_option("--epsilon", f2p.epsilon, "well depth")->default_val(1.0);
  fig2->add_option("--sigma", f2p.sigma, "length parameter")->default_val(1.0);
  fig2->add_option("--k", f2p.k, "force constant of the harmonic curve")->default_val(70.0);
  fig2->add_flag("--k-from-fit", f2p.k_from_fit, "use k = mu omega^2 of the depth-matched oscillator");
  fig2->add_option("--gamma-sq", f2p.gamma_sq, "number of bound states")->default_val(4)->check(CLI::PositiveNumber);
  fig2->add_option("--mu", f2p.mu, "reduced mass for --k-from-fit")->default_val(1.0);
  fig2->add_option("--hbar", f2p.hbar, "reduced Planck constant for --k-from-fit")->default_val(1.0);
  fig2->add_option("--lo", f2p.lo, "lowest r (default 0.95 sigma)");
  fig2->add_option("--hi", f2p.hi, "highest r (default 2 sigma)");
  fig2->add_option("--step", f2p.step, "r step (default 0.005 sigma)");
  fig2->add_option("--out", f2p.out, "curve CSV path (stdout if omitted)");
  fig2->add_option("--levels-out", f2p.levels_out, "level CSV path (default <out stem>_levels.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (table->parsed()) return run_table(tp);
    if (eval->parsed()) return run_eval(ep);
    if (spectrum->parsed()) return run_spectrum(sp);
    if (field->parsed()) return run_field(fp);
    if (lj->parsed()) return run_lj(lp);
    if (verify->parsed()) return run_verify(vp);
    if (fig1->parsed()) return run_figure1(f1p);
    if (fig2->parsed()) return run_figure2(f2p);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
