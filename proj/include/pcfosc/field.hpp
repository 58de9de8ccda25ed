#pragma once

// Harmonic oscillator in a uniform electric field,
// H = -hbar^2/(2 mu) d^2/dx^2 + mu omega^2 x^2 / 2 + q E x.
//
// With gamma = q E / sqrt(2 mu hbar omega^3) the eigenstates are
// D_k(z_scale x + 2 gamma). Two labellings of the same spectrum exist:
//   continuous branch  E_n = hbar omega (n + 1/2 - gamma^2), index k = n;
//   integer branch     E_m = hbar omega (m + 1/2), gamma^2 a positive
//                      integer, m = -gamma^2, -gamma^2 + 1, ..., k = m + gamma^2.
//
// The well bottom is x_min = -q E / (mu omega^2) with depth
// -(q E)^2 / (2 mu omega^2) = -hbar omega gamma^2. (Dropping the 1/2 gives a
// value twice as deep that no longer matches the energy shift.)

#include <cmath>
#include <string>
#include <vector>

#include "pcfosc/errors.hpp"
#include "pcfosc/numerics.hpp"
#include "pcfosc/oscillator.hpp"

namespace pcfosc {

/// Charge q and field magnitude E; either may be negative.
struct FieldSpec {
  double q = 0.0;
  double efield = 0.0;

  double force() const noexcept { return q * efield; }
};

/// gamma = q E / sqrt(2 mu hbar omega^3)
inline double gamma_of(const FieldSpec& field, const OscillatorSpec& spec) {
  const double g = field.force() / std::sqrt(2.0 * spec.mu() * spec.hbar() * std::pow(spec.omega(), 3));
  if (!std::isfinite(g)) throw parameter_error("field coupling gamma is not finite");
  return g;
}

/// q E recovered from gamma.
inline double force_of(double gamma, const OscillatorSpec& spec) noexcept {
  return gamma * std::sqrt(2.0 * spec.mu() * spec.hbar() * std::pow(spec.omega(), 3));
}

/// E_n = hbar omega (n + 1/2 - gamma^2)
inline double energy_shifted(unsigned n, double gamma, const OscillatorSpec& spec) noexcept {
  return spec.hbar_omega() * (n + 0.5 - gamma * gamma);
}

/// Eigenstate of the field Hamiltonian. m is the branch label, pcf_index
/// the order of the underlying D function.
class ShiftedState {
 public:
  /// Psi_{n, gamma^2}, any real gamma.
  static ShiftedState continuous(unsigned n, double gamma, const OscillatorSpec& spec) {
    return ShiftedState(static_cast<long>(n), gamma, spec, n);
  }

  /// Psi_{m + gamma^2} with gamma = +sqrt(gamma_sq), pcf index m + gamma_sq.
  static ShiftedState integer(long m, long gamma_sq, const OscillatorSpec& spec) {
    if (gamma_sq < 1) throw parameter_error("integer branch needs gamma^2 >= 1");
    if (m + gamma_sq < 0) throw parameter_error("integer branch needs m + gamma^2 >= 0");
    return ShiftedState(m, std::sqrt(static_cast<double>(gamma_sq)), spec, static_cast<unsigned>(m + gamma_sq));
  }

  long m() const noexcept { return m_; }
  double gamma() const noexcept { return gamma_; }
  unsigned pcf_index() const noexcept { return psi_.n(); }
  const OscillatorSpec& spec() const noexcept { return psi_.spec(); }
  const Eigenstate& eigenstate() const noexcept { return psi_; }
  /// Centre of the displaced well, -2 gamma / z_scale = -q E / (mu omega^2).
  double center() const noexcept { return psi_.center(); }

  double operator()(double x) const noexcept { return psi_(x); }

  /// Potential of the field Hamiltonian this state belongs to.
  double potential(double x) const noexcept { return spec().potential(x) + force_ * x; }

 private:
  ShiftedState(long m, double gamma, const OscillatorSpec& spec, unsigned index)
      : m_(m), gamma_(gamma), psi_(index, spec, 2.0 * gamma), force_(force_of(gamma, spec)) {}

  long m_;
  double gamma_;
  Eigenstate psi_;
  double force_;
};

inline double eval_psi_shifted(const ShiftedState& state, double x) { return state(x); }

inline double expectation_x_shifted(const ShiftedState& state, const QuadratureRule& rule = default_rule()) {
  return position_expectation(state.eigenstate(), rule);
}

inline double shifted_overlap(const ShiftedState& a, const ShiftedState& b, const QuadratureRule& rule = default_rule()) {
  return state_overlap(a.eigenstate(), b.eigenstate(), rule);
}

struct BranchLevel {
  long m;
  double energy;
  unsigned pcf_index;

  friend bool operator==(const BranchLevel&, const BranchLevel&) = default;
};

/// Levels m = -gamma_sq, ..., m_max with E_m = hbar omega (m + 1/2).
inline std::vector<BranchLevel> integer_branch_spectrum(long gamma_sq, long m_max, const OscillatorSpec& spec) {
  if (gamma_sq < 1) throw parameter_error("integer branch needs gamma^2 >= 1");
  if (m_max < -gamma_sq) {
    throw parameter_error("empty integer-branch range: m_max " + std::to_string(m_max) + " < -gamma^2");
  }
  std::vector<BranchLevel> out;
  out.reserve(static_cast<std::size_t>(m_max + gamma_sq + 1));
  for (long m = -gamma_sq; m <= m_max; ++m) {
    out.push_back({m, spec.hbar_omega() * (static_cast<double>(m) + 0.5), static_cast<unsigned>(m + gamma_sq)});
  }
  return out;
}

/// Continuous-branch energies for n = 0, ..., count - 1.
inline std::vector<double> continuous_branch_spectrum(double gamma, unsigned count, const OscillatorSpec& spec) {
  std::vector<double> out;
  out.reserve(count);
  for (unsigned n = 0; n < count; ++n) out.push_back(energy_shifted(n, gamma, spec));
  return out;
}

struct PotentialMinimum {
  double x_min;
  double e_min;
};

/// Vertex of mu omega^2 x^2 / 2 + q E x.
inline PotentialMinimum potential_minimum(const FieldSpec& field, const OscillatorSpec& spec) noexcept {
  const double k = spec.force_constant();
  const double f = field.force();
  return {-f / k + 0.0, -(f * f) / (2.0 * k) + 0.0};
}

/// max |(H_field - E) Psi| over interior grid nodes. The grid must cover
/// the displaced centre +- 6 l.
inline double field_hamiltonian_residual(const ShiftedState& state, double energy, const Grid1D& grid) {
  if (grid.size() < kMinResidualGridPoints) throw parameter_error("residual grid has fewer than 50 points");
  const double reach = 6.0 * state.spec().length() * (1.0 - 1e-12);
  const double c = state.center();
  if (grid.lo() > c - reach || grid.hi() < c + reach) {
    throw parameter_error("residual grid must cover the displaced centre +- 6l");
  }
  return eigen_residual(state, [&state](double x) { return state.potential(x); }, energy,
                        state.spec().kinetic_coefficient(), grid);
}

}  // namespace pcfosc
