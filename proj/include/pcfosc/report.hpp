#pragma once

// Text and CSV renderers plus the self-verification suites used by the
// command-line tool.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "pcfosc/field.hpp"
#include "pcfosc/ljmodel.hpp"
#include "pcfosc/numerics.hpp"
#include "pcfosc/oscillator.hpp"
#include "pcfosc/pcf.hpp"
#include "pcfosc/polys.hpp"

namespace pcfosc {

/// 12 significant digits, '.' separator, no negative zero.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
  return buf;
}

/// Number of nodes lo, lo + step, ... not exceeding hi (plus rounding slack).
inline std::size_t sample_count(double lo, double hi, double step) {
  if (!(hi > lo) || !(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw parameter_error("sampling range needs lo < hi and step > 0");
  }
  const double spans = (hi - lo) / step;
  if (spans > 1e8) throw parameter_error("sampling range has too many points");
  return static_cast<std::size_t>(std::floor(spans + 1e-9)) + 1;
}

/// One row per n: "n | P_n(z) | D_n(z)".
inline void write_table(std::ostream& out, unsigned n_max, unsigned max_degree = kDefaultMaxDegree) {
  check_degree_cap(n_max, max_degree);
  out << "n | P_n(z) | D_n(z)\n";
  for (unsigned n = 0; n <= n_max; ++n) {
    const PcfPolyPart part = pcf_poly(n, max_degree);
    const std::string p = part.poly.to_string("z");
    const std::string d = (n == 0) ? "e^{-z^2/4}" : "e^{-z^2/4} (" + p + ")";
    out << n << " | " << p << " | " << d << '\n';
  }
}

inline void write_figure1(std::ostream& out, double z_lo = -6.0, double z_hi = 6.0, double step = 0.05) {
  const std::size_t count = sample_count(z_lo, z_hi, step);
  const ParabolicCylinder d[] = {ParabolicCylinder(0), ParabolicCylinder(1), ParabolicCylinder(2),
                                 ParabolicCylinder(3)};
  out << "z,D0,D1,D2,D3\n";
  for (std::size_t i = 0; i < count; ++i) {
    const double z = z_lo + static_cast<double>(i) * step;
    out << format_number(z);
    for (const auto& fn : d) out << ',' << format_number(fn(z));
    out << '\n';
  }
}

struct Figure2Options {
  double k = 70.0;
  /// Absolute r range; non-positive values select 0.95 sigma, 2 sigma, 0.005 sigma.
  double r_lo = 0.0;
  double r_hi = 0.0;
  double step = 0.0;
};

/// "r,U_lj,V_harm" over the sampled range with r_min inserted in order.
inline void write_figure2_curves(std::ostream& out, const LJSpec& spec, const Figure2Options& opt = {}) {
  const double lo = opt.r_lo > 0.0 ? opt.r_lo : 0.95 * spec.sigma();
  const double hi = opt.r_hi > 0.0 ? opt.r_hi : 2.0 * spec.sigma();
  const double step = opt.step > 0.0 ? opt.step : 0.005 * spec.sigma();
  const std::size_t count = sample_count(lo, hi, step);
  std::vector<double> rs;
  rs.reserve(count + 1);
  for (std::size_t i = 0; i < count; ++i) rs.push_back(lo + static_cast<double>(i) * step);
  const double r_min = lj_minimum(spec).r_min;
  if (r_min >= lo && r_min <= rs.back() && std::find(rs.begin(), rs.end(), r_min) == rs.end()) {
    rs.insert(std::upper_bound(rs.begin(), rs.end(), r_min), r_min);
  }
  out << "r,U_lj,V_harm\n";
  for (double r : rs) {
    out << format_number(r) << ',' << format_number(lj_potential(r, spec)) << ','
        << format_number(harmonic_curve(r, spec, opt.k)) << '\n';
  }
}

inline void write_figure2_levels(std::ostream& out, const LJSpec& spec) {
  out << "m,E_m\n";
  for (const auto& level : bound_levels(spec)) out << level.m << ',' << format_number(level.energy) << '\n';
}

struct Check {
  std::string name;
  double measured;
  double tolerance;
  bool passed;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  void add_bound(std::string name, double measured, double tolerance) {
    checks.push_back({std::move(name), measured, tolerance, measured < tolerance});
  }
  void add_flag(std::string name, bool ok) { checks.push_back({std::move(name), ok ? 0.0 : 1.0, 0.5, ok}); }
};

inline void write_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  measured=" << format_number(c.measured)
        << "  tol=" << format_number(c.tolerance) << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
  out << (failed == 0 ? "all " + std::to_string(report.checks.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(report.checks.size()) + " checks FAILED")
      << '\n';
}

/// Route equivalence, Table 1, ODE residual, orthonormality, eigen-residual, <x> = 0.
inline void verify_free(VerifyReport& report) {
  bool routes = true;
  for (unsigned n = 0; n <= 50; ++n) {
    const PcfPolyPart a = pcf_poly(n);
    routes = routes && a == pcf_rodrigues_poly(n) && a == pcf_from_hermite(n, hermite_rodrigues(n)) &&
             hermite_recurrence(n) == hermite_rodrigues(n);
  }
  report.add_flag("route equivalence n=0..50 (exact)", routes);

  const PolyZ table[] = {{1}, {0, 1}, {-1, 0, 1}, {0, -3, 0, 1}, {3, 0, -6, 0, 1}, {0, 15, 0, -10, 0, 1}};
  bool table_ok = true;
  for (unsigned n = 0; n < 6; ++n) table_ok = table_ok && pcf_poly(n).poly == table[n];
  report.add_flag("Table of D_0..D_5 (exact)", table_ok);

  double ode = 0.0;
  for (unsigned n = 0; n <= 10; ++n) {
    const ParabolicCylinder d(n);
    for (int i = 0; i <= 1200; ++i) ode = std::max(ode, std::fabs(d.ode_residual(-6.0 + 0.01 * i)));
  }
  report.add_bound("ODE residual n=0..10, z in [-6,6]", ode, 1e-8);

  const OscillatorSpec spec;
  std::vector<Eigenstate> states;
  for (unsigned n = 0; n <= 10; ++n) states.emplace_back(n, spec);
  double diag = 0.0, off = 0.0;
  for (unsigned a = 0; a <= 10; ++a) {
    for (unsigned b = 0; b <= 10; ++b) {
      const double s = state_overlap(states[a], states[b]);
      if (a == b) diag = std::max(diag, std::fabs(s - 1.0));
      else off = std::max(off, std::fabs(s));
    }
  }
  report.add_bound("overlap diagonal |S_nn - 1|, 11x11", diag, 1e-10);
  report.add_bound("overlap off-diagonal |S_mn|, 11x11", off, 1e-10);

  const Grid1D grid(-6.0, 6.0, 1e-3);
  double res = 0.0;
  for (unsigned n = 0; n <= 6; ++n) res = std::max(res, hamiltonian_residual(n, spec, grid));
  report.add_bound("Hamiltonian residual n=0..6, h=1e-3", res, 1e-5);

  double ex = 0.0;
  for (unsigned n = 0; n <= 10; ++n) ex = std::max(ex, std::fabs(expectation_x(n, spec)));
  report.add_bound("|<x>| n=0..10", ex, 1e-10);
}

/// Branch consistency, integer-branch residuals, displacement, minimum.
inline void verify_field(VerifyReport& report, long gamma_sq = 1) {
  const OscillatorSpec spec;
  const double gamma = std::sqrt(static_cast<double>(gamma_sq));
  const std::string tag = " (gamma^2=" + std::to_string(gamma_sq) + ")";

  const auto ladder = integer_branch_spectrum(gamma_sq, 10, spec);
  double branch = 0.0;
  for (const auto& level : ladder) {
    branch = std::max(branch, std::fabs(level.energy - energy_shifted(level.pcf_index, gamma, spec)));
  }
  report.add_bound("integer vs continuous branch ladder" + tag, branch, 1e-12);

  for (long m = -gamma_sq; m < -gamma_sq + 3; ++m) {
    const ShiftedState s = ShiftedState::integer(m, gamma_sq, spec);
    const Grid1D grid(s.center() - 6.0, s.center() + 6.0, 1e-3);
    const double r = field_hamiltonian_residual(s, spec.hbar_omega() * (m + 0.5), grid);
    report.add_bound("field residual m=" + std::to_string(m) + tag, r, 1e-5);
  }

  const FieldSpec unit_field{1.0, 1.0};
  const double g1 = gamma_of(unit_field, spec);
  double disp = 0.0;
  for (unsigned k = 0; k <= 5; ++k) {
    disp = std::max(disp, std::fabs(expectation_x_shifted(ShiftedState::continuous(k, g1, spec)) + 1.0));
  }
  report.add_bound("<x> displacement = -qE/(mu omega^2), k=0..5", disp, 1e-9);

  double ortho = 0.0;
  for (unsigned a = 0; a <= 5; ++a) {
    for (unsigned b = 0; b <= 5; ++b) {
      const double s = shifted_overlap(ShiftedState::continuous(a, g1, spec), ShiftedState::continuous(b, g1, spec));
      ortho = std::max(ortho, std::fabs(s - (a == b ? 1.0 : 0.0)));
    }
  }
  report.add_bound("shifted orthonormality k=0..5", ortho, 1e-10);

  const PotentialMinimum pm = potential_minimum(unit_field, spec);
  const Minimum num = golden_section_minimize<long double>(
      [&](long double x) { return 0.5L * x * x + 1.0L * x; }, -5.0L, 5.0L, 1e-13L);
  report.add_bound("potential minimum position vs golden section", std::fabs(pm.x_min - num.x), 1e-8);
  report.add_bound("potential minimum value vs golden section", std::fabs(pm.e_min - num.value), 1e-8);
  report.add_bound("e_min = -hbar omega gamma^2 (relative)",
                   std::fabs(pm.e_min + spec.hbar_omega() * g1 * g1) / std::fabs(pm.e_min), 1e-14);
}

/// Ladder shape, spacing inversion, and equivalence with the integer branch.
inline void verify_lj(VerifyReport& report, double epsilon = 1.0, long gamma_sq = 2) {
  const LJSpec spec(epsilon, 1.0, gamma_sq);
  const auto levels = bound_levels(spec);
  const double spacing = epsilon / static_cast<double>(gamma_sq);
  bool shape = static_cast<long>(levels.size()) == gamma_sq;
  double ladder_err = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    shape = shape && levels[i].energy < 0.0 && levels[i].energy > -epsilon;
    ladder_err = std::max(ladder_err, std::fabs(levels[i].energy - spacing * (static_cast<double>(levels[i].m) + 0.5)));
  }
  report.add_flag("ladder has gamma^2 levels in (-eps, 0)", shape);
  report.add_bound("ladder equals (eps/gamma^2)(m + 1/2)", ladder_err, 1e-15 * epsilon);

  const OscillatorSpec fitted = fit_oscillator(spec, 1.0);
  const auto branch = integer_branch_spectrum(gamma_sq, -1, fitted);
  double branch_err = branch.size() == levels.size() ? 0.0 : 1.0;
  for (std::size_t i = 0; i < std::min(branch.size(), levels.size()); ++i) {
    branch_err = std::max(branch_err, std::fabs(branch[i].energy - levels[i].energy));
  }
  report.add_bound("ladder equals negative integer-branch levels", branch_err, 1e-12);

  const GammaSqEstimate est = estimate_gamma_sq(epsilon, spacing);
  report.add_flag("estimate_gamma_sq recovers gamma^2", est.gamma_sq == gamma_sq);

  const Minimum num = golden_section_minimize<long double>(
      [&](long double r) {
        const long double s6 = std::pow(1.0L / r, 6);
        return 4.0L * static_cast<long double>(epsilon) * (s6 * s6 - s6);
      },
      0.8L, 2.0L, 1e-13L);
  report.add_bound("L-J minimum position vs golden section", std::fabs(num.x - lj_minimum(spec).r_min), 1e-8);
}

}  // namespace pcfosc
