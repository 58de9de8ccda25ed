#pragma once

// Gauss-Hermite quadrature, uniform grids, and finite-difference checks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "pcfosc/errors.hpp"

namespace pcfosc {

inline constexpr unsigned kMaxQuadratureNodes = 256;
inline constexpr unsigned kDefaultQuadratureNodes = 64;

/// Nodes and weights for integrals of f(t) e^{-t^2} over the real line.
/// Nodes strictly increasing and symmetric about 0; weights positive.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
      : nodes_(std::move(nodes)), weights_(std::move(weights)) {
    if (nodes_.empty() || nodes_.size() != weights_.size()) {
      throw parameter_error("quadrature rule needs equally many nodes and weights");
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!(weights_[i] > 0.0)) throw parameter_error("quadrature weights must be positive");
      if (i > 0 && !(nodes_[i] > nodes_[i - 1])) throw parameter_error("quadrature nodes must increase strictly");
    }
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// sum_i w_i f(t_i)
  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const double v = f(nodes_[i]);
      if (!std::isfinite(v)) {
        throw evaluation_error("integrand not finite at node t = " + std::to_string(nodes_[i]));
      }
      sum += weights_[i] * v;
    }
    return sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// N-point Gauss-Hermite rule. Roots of H_N by Newton iteration on the
/// orthonormal three-term recurrence, seeded with the Jacobi-matrix
/// eigenvalues; weights are
/// 2 / h_N'(t)^2 in the orthonormal normalization.
inline QuadratureRule gauss_hermite_rule(unsigned n) {
  if (n < 1 || n > kMaxQuadratureNodes) {
    throw parameter_error("Gauss-Hermite rule size must lie in [1, " + std::to_string(kMaxQuadratureNodes) +
                          "], got " + std::to_string(n));
  }
  constexpr int kMaxIterations = 100;
  const double pim4 = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));  // pi^{-1/4}

  // Seeds: eigenvalues of the Jacobi matrix (off-diagonal sqrt(j/2)),
  // accurate enough that Newton lands on the intended root.
  Eigen::VectorXd seeds = Eigen::VectorXd::Zero(n);
  if (n > 1) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), sub(n - 1);
    for (unsigned j = 1; j < n; ++j) sub[j - 1] = std::sqrt(0.5 * j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> jacobi;
    jacobi.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (jacobi.info() != Eigen::Success) throw construction_error("Gauss-Hermite Jacobi eigensolve failed");
    seeds = jacobi.eigenvalues();  // ascending
  }

  // Descending order: x[0] is the largest root.
  std::vector<double> x(n), w(n);
  const unsigned half = (n + 1) / 2;
  for (unsigned i = 0; i < half; ++i) {
    const double dn = n;
    double z = (n % 2 == 1 && i == half - 1) ? 0.0 : seeds[n - 1 - i];
    double deriv = 0.0;
    bool converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (unsigned j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
      }
      deriv = std::sqrt(2.0 * dn) * p2;
      const double prev = z;
      z = prev - p1 / deriv;
      if (std::fabs(z - prev) <= std::max(1e-14, 4e-16 * std::fabs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw construction_error("Gauss-Hermite root " + std::to_string(i) + " of " + std::to_string(n) +
                               " did not converge");
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = w[n - 1 - i] = 2.0 / (deriv * deriv);
  }
  std::reverse(x.begin(), x.end());
  std::reverse(w.begin(), w.end());
  if (n % 2 == 1) x[n / 2] = 0.0;
  return QuadratureRule(std::move(x), std::move(w));
}

/// sum_i w_i f(t_i) g(t_i); the Gaussian weight must already be folded out of f g.
template <class F, class G>
double weighted_inner_product(F&& f, G&& g, const QuadratureRule& rule) {
  return rule.integrate([&](double t) { return f(t) * g(t); });
}

/// (f(x - h) - 2 f(x) + f(x + h)) / h^2
template <class F>
double fd_second_derivative(F&& f, double x, double h) {
  if (!(h > 0.0)) throw parameter_error("finite-difference step must be positive");
  return (f(x - h) - 2.0 * f(x) + f(x + h)) / (h * h);
}

/// Uniform node set lo, lo + h, ..., up to hi.
class Grid1D {
 public:
  Grid1D(double lo, double hi, double step) : lo_(lo), hi_(hi), step_(step) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) throw parameter_error("grid needs finite lo < hi");
    if (!(step > 0.0) || !std::isfinite(step)) throw parameter_error("grid step must be positive");
    const double spans = (hi - lo) / step;
    if (spans > 1e9) throw parameter_error("grid has too many nodes");
    count_ = static_cast<std::size_t>(std::floor(spans + 1e-9)) + 1;
    if (count_ < 5) throw parameter_error("grid needs at least 5 nodes");
  }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double step() const noexcept { return step_; }
  std::size_t size() const noexcept { return count_; }
  double operator[](std::size_t i) const noexcept { return lo_ + static_cast<double>(i) * step_; }

 private:
  double lo_, hi_, step_;
  std::size_t count_;
};

/// Max over interior grid nodes of |-c psi'' + V psi - E psi| with psi''
/// from the central stencil and c the kinetic prefactor hbar^2 / (2 mu).
template <class Psi, class Potential>
double eigen_residual(Psi&& psi, Potential&& potential, double energy, double kinetic, const Grid1D& grid) {
  const double h = grid.step();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double x = grid[i];
    const double value = psi(x);
    const double r = -kinetic * fd_second_derivative(psi, x, h) + (potential(x) - energy) * value;
    worst = std::max(worst, std::fabs(r));
  }
  return worst;
}

/// Integral of a(x) b(x) dx for states whose product decays like
/// exp(-scale (x - center)^2), via t = sqrt(scale) (x - center).
template <class A, class B>
double overlap(A&& a, B&& b, double scale, const QuadratureRule& rule, double center = 0.0) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw parameter_error("overlap scale must be positive");
  const double root = std::sqrt(scale);
  auto at = [&](auto& fn) {
    return [&fn, root, center](double t) { return fn(center + t / root) * std::exp(0.5 * t * t); };
  };
  return weighted_inner_product(at(a), at(b), rule) / root;
}

struct Minimum {
  double x;
  double value;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi]. The
/// arithmetic type T lets callers evaluate in extended precision.
template <class T = double, class F>
Minimum golden_section_minimize(F&& f, T lo, T hi, T tol = T(1e-12), int max_iterations = 500) {
  if (!(hi > lo)) throw parameter_error("golden-section bracket needs lo < hi");
  const T inv_phi = (std::sqrt(T(5)) - T(1)) / T(2);
  T a = lo, b = hi;
  T c = b - inv_phi * (b - a);
  T d = a + inv_phi * (b - a);
  T fc = f(c), fd = f(d);
  for (int it = 0; it < max_iterations && (b - a) > tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const T xm = (a + b) / T(2);
  return {static_cast<double>(xm), static_cast<double>(f(xm))};
}

}  // namespace pcfosc
