#pragma once

// Free 1D harmonic oscillator with eigenstates written through D_n.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "pcfosc/errors.hpp"
#include "pcfosc/numerics.hpp"
#include "pcfosc/pcf.hpp"

namespace pcfosc {

/// Physical parameters (mu, omega, hbar) of the oscillator
/// H = -hbar^2/(2 mu) d^2/dx^2 + mu omega^2 x^2 / 2.
class OscillatorSpec {
 public:
  OscillatorSpec(double mu = 1.0, double omega = 1.0, double hbar = 1.0) : mu_(mu), omega_(omega), hbar_(hbar) {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(mu) || !positive(omega) || !positive(hbar)) {
      throw parameter_error("oscillator needs finite mu, omega, hbar > 0");
    }
  }

  /// Builds the spec from a force constant via omega = sqrt(k / mu).
  static OscillatorSpec from_force_constant(double mu, double k, double hbar = 1.0) {
    if (!(k > 0.0)) throw parameter_error("force constant must be positive");
    return OscillatorSpec(mu, std::sqrt(k / mu), hbar);
  }

  double mu() const noexcept { return mu_; }
  double omega() const noexcept { return omega_; }
  double hbar() const noexcept { return hbar_; }

  double hbar_omega() const noexcept { return hbar_ * omega_; }
  double force_constant() const noexcept { return mu_ * omega_ * omega_; }
  /// mu omega / hbar, the inverse squared length scale.
  double inverse_length_sq() const noexcept { return mu_ * omega_ / hbar_; }
  /// sqrt(hbar / (mu omega))
  double length() const noexcept { return std::sqrt(hbar_ / (mu_ * omega_)); }
  /// z = z_scale() * x maps position onto the parabolic cylinder argument.
  double z_scale() const noexcept { return std::sqrt(2.0 * mu_ * omega_ / hbar_); }
  /// hbar^2 / (2 mu)
  double kinetic_coefficient() const noexcept { return hbar_ * hbar_ / (2.0 * mu_); }
  double potential(double x) const noexcept { return 0.5 * mu_ * omega_ * omega_ * x * x; }

 private:
  double mu_, omega_, hbar_;
};

/// E_n = hbar omega (n + 1/2)
inline double energy(unsigned n, const OscillatorSpec& spec) noexcept { return spec.hbar_omega() * (n + 0.5); }

/// N_n = (mu omega / (hbar pi))^{1/4} / sqrt(n!)
inline double norm_const(unsigned n, const OscillatorSpec& spec) noexcept {
  const double prefactor = std::pow(spec.inverse_length_sq() / std::numbers::pi, 0.25);
  if (n <= 20) {
    std::uint64_t factorial = 1;
    for (unsigned k = 2; k <= n; ++k) factorial *= k;
    return prefactor / std::sqrt(static_cast<double>(factorial));
  }
  return prefactor * std::exp(-0.5 * std::lgamma(n + 1.0));
}

/// psi(x) = N_n D_n(z_scale x + shift). shift is 0 for the free oscillator.
class Eigenstate {
 public:
  Eigenstate(unsigned n, OscillatorSpec spec, double shift = 0.0)
      : spec_(spec), shift_(shift), pcf_(n), norm_(norm_const(n, spec)), z_scale_(spec.z_scale()) {
    if (!std::isfinite(shift)) throw parameter_error("eigenstate shift must be finite");
  }

  unsigned n() const noexcept { return pcf_.order(); }
  const OscillatorSpec& spec() const noexcept { return spec_; }
  double shift() const noexcept { return shift_; }
  /// Position where z = 0, i.e. the centre of the Gaussian envelope.
  double center() const noexcept { return -shift_ / z_scale_; }

  double operator()(double x) const noexcept { return norm_ * pcf_(z_scale_ * x + shift_); }

 private:
  OscillatorSpec spec_;
  double shift_;
  ParabolicCylinder pcf_;
  double norm_;
  double z_scale_;
};

inline double eval_psi(unsigned n, const OscillatorSpec& spec, double x) { return Eigenstate(n, spec)(x); }

/// The 64-point rule shared by the expectation and overlap helpers.
inline const QuadratureRule& default_rule() {
  static const QuadratureRule rule = gauss_hermite_rule(kDefaultQuadratureNodes);
  return rule;
}

/// <a|b> for two eigenstates of the same spec and shift.
inline double state_overlap(const Eigenstate& a, const Eigenstate& b, const QuadratureRule& rule = default_rule()) {
  return overlap(a, b, a.spec().inverse_length_sq(), rule, a.center());
}

/// <psi | x | psi> by quadrature about the state's own centre.
inline double position_expectation(const Eigenstate& psi, const QuadratureRule& rule = default_rule()) {
  auto x_psi = [&psi](double x) { return x * psi(x); };
  return overlap(psi, x_psi, psi.spec().inverse_length_sq(), rule, psi.center());
}

inline double expectation_x(unsigned n, const OscillatorSpec& spec, const QuadratureRule& rule = default_rule()) {
  return position_expectation(Eigenstate(n, spec), rule);
}

inline constexpr std::size_t kMinResidualGridPoints = 50;

/// max |H psi_n - E_n psi_n| over the interior of grid. The grid must hold
/// at least 50 nodes and cover [-6 l, 6 l] with l = sqrt(hbar / (mu omega)).
inline double hamiltonian_residual(unsigned n, const OscillatorSpec& spec, const Grid1D& grid) {
  if (grid.size() < kMinResidualGridPoints) throw parameter_error("residual grid has fewer than 50 points");
  const double reach = 6.0 * spec.length() * (1.0 - 1e-12);
  if (grid.lo() > -reach || grid.hi() < reach) throw parameter_error("residual grid must cover [-6l, 6l]");
  const Eigenstate psi(n, spec);
  return eigen_residual(psi, [&spec](double x) { return spec.potential(x); }, energy(n, spec),
                        spec.kinetic_coefficient(), grid);
}

}  // namespace pcfosc
