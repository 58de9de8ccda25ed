#pragma once

// Harmonic surrogate for the bound states of a Lennard-Jones well, built on
// the integer branch of the field-shifted oscillator. The well depth is
// matched through hbar omega = epsilon / gamma^2, leaving gamma^2 bound
// levels E_m = (epsilon / gamma^2)(m + 1/2), m = -gamma^2, ..., -1, with
// the oscillator coordinate x = r - 2^{1/6} sigma.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pcfosc/errors.hpp"
#include "pcfosc/field.hpp"
#include "pcfosc/oscillator.hpp"

namespace pcfosc {

class LJSpec {
 public:
  LJSpec(double epsilon = 1.0, double sigma = 1.0, long gamma_sq = 1)
      : epsilon_(epsilon), sigma_(sigma), gamma_sq_(gamma_sq) {
    if (!(std::isfinite(epsilon) && epsilon > 0.0)) throw parameter_error("L-J epsilon must be positive");
    if (!(std::isfinite(sigma) && sigma > 0.0)) throw parameter_error("L-J sigma must be positive");
    if (gamma_sq < 1) throw parameter_error("bound-state count gamma^2 must be >= 1");
  }

  double epsilon() const noexcept { return epsilon_; }
  double sigma() const noexcept { return sigma_; }
  long gamma_sq() const noexcept { return gamma_sq_; }

 private:
  double epsilon_, sigma_;
  long gamma_sq_;
};

/// U(r) = 4 epsilon ((sigma/r)^12 - (sigma/r)^6)
inline double lj_potential(double r, const LJSpec& spec) {
  if (!(r > 0.0)) throw domain_error("L-J potential needs r > 0");
  const double s6 = std::pow(spec.sigma() / r, 6);
  return 4.0 * spec.epsilon() * (s6 * s6 - s6);
}

struct LJMinimum {
  double r_min;
  double u_min;
};

inline LJMinimum lj_minimum(const LJSpec& spec) noexcept {
  return {std::pow(2.0, 1.0 / 6.0) * spec.sigma(), -spec.epsilon()};
}

/// U''(r_min) = 72 epsilon / (2^{1/3} sigma^2). Local curvature of the well,
/// for comparison with the depth-matched oscillator.
inline double curvature_matched_k(const LJSpec& spec) noexcept {
  return 72.0 * spec.epsilon() / (std::cbrt(2.0) * spec.sigma() * spec.sigma());
}

/// Oscillator with hbar omega = epsilon / gamma^2.
inline OscillatorSpec fit_oscillator(const LJSpec& spec, double mu, double hbar = 1.0) {
  return OscillatorSpec(mu, spec.epsilon() / (static_cast<double>(spec.gamma_sq()) * hbar), hbar);
}

/// r - 2^{1/6} sigma
inline double oscillator_coordinate(double r, const LJSpec& spec) noexcept { return r - lj_minimum(spec).r_min; }

struct LJLevel {
  long m;
  double energy;
};

/// The gamma^2 bound levels, lowest first. Each level is formed as
/// ((m + 1/2) epsilon) / gamma^2, which is correctly rounded when epsilon is
/// a power of two.
inline std::vector<LJLevel> bound_levels(const LJSpec& spec) {
  const long g2 = spec.gamma_sq();
  std::vector<LJLevel> out;
  out.reserve(static_cast<std::size_t>(g2));
  for (long m = -g2; m <= -1; ++m) {
    out.push_back({m, ((static_cast<double>(m) + 0.5) * spec.epsilon()) / static_cast<double>(g2)});
  }
  return out;
}

struct GammaSqEstimate {
  long gamma_sq;
  double residual;
  /// delta_e > epsilon: no bound level fits, gamma_sq is clamped to 1.
  bool spacing_exceeds_depth;
};

/// Nearest-integer inversion of the level spacing delta_e = epsilon / gamma^2.
inline GammaSqEstimate estimate_gamma_sq(double epsilon, double delta_e) {
  if (!(std::isfinite(epsilon) && epsilon > 0.0)) throw domain_error("well depth must be positive");
  if (!(std::isfinite(delta_e) && delta_e > 0.0)) throw domain_error("level spacing must be positive");
  const double ratio = epsilon / delta_e;
  const long g2 = std::max(1L, std::lround(ratio));
  return {g2, std::fabs(ratio - static_cast<double>(g2)), delta_e > epsilon};
}

/// V(r) = -epsilon + k (r - r_min)^2 / 2
inline double harmonic_curve(double r, const LJSpec& spec, double k) {
  if (!(k > 0.0)) throw parameter_error("force constant must be positive");
  const double d = oscillator_coordinate(r, spec);
  return -spec.epsilon() + 0.5 * k * d * d;
}

}  // namespace pcfosc
