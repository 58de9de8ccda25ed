#pragma once

// Parabolic cylinder functions of non-negative integer order,
// D_n(z) = P_n(z) exp(-z^2/4) with P_n monic and integer-valued.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pcfosc/errors.hpp"
#include "pcfosc/polys.hpp"

namespace pcfosc {

/// Polynomial factor P_n of D_n. Monic, degree n, parity (-1)^n.
struct PcfPolyPart {
  unsigned index = 0;
  PolyZ poly;

  friend bool operator==(const PcfPolyPart&, const PcfPolyPart&) = default;
};

/// Substitutes P_n(z) = 2^{-n/2} H_n(z / sqrt 2) into a given H_n exactly.
/// The coefficient of z^i becomes c_i / 2^{(n+i)/2}; n + i is even for every
/// nonzero c_i, and the division must be exact.
inline PcfPolyPart pcf_from_hermite(unsigned n, const PolyZ& hermite) {
  if (hermite.degree() != static_cast<long>(n)) {
    throw construction_error("Hermite polynomial of degree " + std::to_string(hermite.degree()) +
                             " supplied for order " + std::to_string(n));
  }
  std::vector<BigInt> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const BigInt& c = hermite.coeffs()[i];
    if (c == 0) continue;
    if ((n + i) % 2 != 0) {
      throw construction_error("Hermite coefficient of t^" + std::to_string(i) + " violates parity for n = " +
                               std::to_string(n));
    }
    const BigInt divisor = BigInt(1) << static_cast<unsigned>((n + i) / 2);
    if (c % divisor != 0) {
      throw construction_error("non-integer coefficient of z^" + std::to_string(i) + " in P_" + std::to_string(n));
    }
    out[i] = c / divisor;
  }
  return {n, PolyZ(std::move(out))};
}

/// P_n via the Hermite relation applied to the recurrence-built H_n.
inline PcfPolyPart pcf_poly(unsigned n, unsigned max_degree = kDefaultMaxDegree) {
  return pcf_from_hermite(n, hermite_recurrence(n, max_degree));
}

/// P_n via D_n(z) = (-1)^n e^{+z^2/4} d^n/dz^n e^{-z^2/2}. The n-th
/// derivative of e^{-z^2/2} is Q_n e^{-z^2/2} with Q_{k+1} = Q_k' - z Q_k.
///
/// The prefactor is e^{+z^2/4}: with e^{-z^2/4} the n = 1 case would give
/// z e^{-3z^2/4}, which is not D_1.
inline PcfPolyPart pcf_rodrigues_poly(unsigned n, unsigned max_degree = kDefaultMaxDegree) {
  check_degree_cap(n, max_degree);
  PolyZ q{1};
  for (unsigned k = 0; k < n; ++k) q = q.derivative() - q.times_t();
  return {n, (n % 2 == 0) ? q : -q};
}

/// D_n prepared for repeated floating-point evaluation.
///
/// Values come from the three-term recurrence He_{k+1} = z He_k - k He_{k-1}
/// (P_n = He_n) rather than Horner on the expanded coefficients: the monomial
/// form cancels catastrophically inside the oscillatory region once n grows
/// (about 7 digits lost for D_40(7)). The recurrence is rescaled to stay in
/// range and combined with the Gaussian in the log domain when needed, so
/// large |z| decays to 0 instead of overflowing.
class ParabolicCylinder {
 public:
  explicit ParabolicCylinder(unsigned n, unsigned max_degree = kDefaultMaxDegree) : part_(pcf_poly(n, max_degree)) {}

  unsigned order() const noexcept { return part_.index; }
  const PcfPolyPart& poly_part() const noexcept { return part_; }

  /// P_n(z)
  double poly(double z) const noexcept { return unscaled(recur(z), &Triple::p0); }
  /// P_n'(z) = n P_{n-1}(z)
  double poly_derivative(double z) const noexcept {
    const unsigned n = order();
    return n == 0 ? 0.0 : n * unscaled(recur(z), &Triple::p1);
  }
  /// P_n''(z) = n (n-1) P_{n-2}(z)
  double poly_second_derivative(double z) const noexcept {
    const unsigned n = order();
    return n < 2 ? 0.0 : static_cast<double>(n) * (n - 1) * unscaled(recur(z), &Triple::p2);
  }

  /// D_n(z)
  double operator()(double z) const noexcept {
    const Triple t = recur(z);
    return with_gauss(t.p0, t.log_scale, z);
  }

  /// D_n''(z) = (P'' - z P' + (z^2/4 - 1/2) P) e^{-z^2/4}.
  double second_derivative(double z) const noexcept {
    const Triple t = recur(z);
    const double n = order();
    const double bracket = n * (n - 1) * t.p2 - z * n * t.p1 + (0.25 * z * z - 0.5) * t.p0;
    return with_gauss(bracket, t.log_scale, z);
  }

  /// D_n'' + (n + 1/2 - z^2/4) D_n, which vanishes for an exact solution.
  double ode_residual(double z) const noexcept {
    return second_derivative(z) + (order() + 0.5 - 0.25 * z * z) * (*this)(z);
  }

 private:
  // He_n, He_{n-1}, He_{n-2} at z, each divided by exp(log_scale).
  struct Triple {
    double p0 = 1.0, p1 = 0.0, p2 = 0.0;
    double log_scale = 0.0;
  };

  Triple recur(double z) const noexcept {
    constexpr double kBig = 1e200;
    Triple t;
    if (!std::isfinite(z)) {
      t.p0 = 0.0;
      return t;
    }
    for (unsigned k = 0; k < order(); ++k) {
      const double next = z * t.p0 - static_cast<double>(k) * t.p1;
      t.p2 = t.p1;
      t.p1 = t.p0;
      t.p0 = next;
      if (std::fabs(t.p0) > kBig) {
        t.p0 /= kBig;
        t.p1 /= kBig;
        t.p2 /= kBig;
        t.log_scale += std::log(kBig);
      }
    }
    return t;
  }

  static double unscaled(const Triple& t, double Triple::*member) noexcept {
    return t.log_scale == 0.0 ? t.*member : t.*member * std::exp(t.log_scale);
  }

  static double with_gauss(double v, double log_scale, double z) noexcept {
    const double exponent = -0.25 * z * z;
    if (log_scale == 0.0 && exponent > -690.0) return v * std::exp(exponent) + 0.0;
    if (v == 0.0 || !std::isfinite(exponent)) return 0.0;
    const double mag = std::exp(std::log(std::fabs(v)) + log_scale + exponent);
    return (v < 0.0 ? -mag : mag) + 0.0;
  }

  PcfPolyPart part_;
};

/// D_n(z) = P_n(z) exp(-z^2/4).
inline double eval_D(unsigned n, double z, unsigned max_degree = kDefaultMaxDegree) {
  return ParabolicCylinder(n, max_degree)(z);
}

}  // namespace pcfosc
