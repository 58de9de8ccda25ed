#pragma once

// Exact integer polynomials and the physicists' Hermite family.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcfosc/errors.hpp"

namespace pcfosc {

using BigInt = boost::multiprecision::cpp_int;

/// Resource guard for every construction that builds a degree-n polynomial.
inline constexpr unsigned kDefaultMaxDegree = 200;

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] multiplies t^i; the zero polynomial has no coefficients and
/// a nonzero polynomial never stores a zero leading coefficient.
class PolyZ {
 public:
  PolyZ() = default;

  explicit PolyZ(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  PolyZ(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static PolyZ constant(BigInt c) { return PolyZ(std::vector<BigInt>{std::move(c)}); }

  /// t^power
  static PolyZ monomial(std::size_t power, BigInt c = 1) {
    std::vector<BigInt> coeffs(power + 1);
    coeffs[power] = std::move(c);
    return PolyZ(std::move(coeffs));
  }

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  /// Coefficient of t^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  const BigInt& leading() const {
    if (coeffs_.empty()) throw domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Horner evaluation in double precision.
  double operator()(double t) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * t + it->convert_to<double>();
    }
    return acc;
  }

  PolyZ derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return PolyZ(std::move(d));
  }

  /// p(-t)
  PolyZ reflected() const {
    std::vector<BigInt> r = coeffs_;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return PolyZ(std::move(r));
  }

  /// t * p(t)
  PolyZ times_t() const {
    if (is_zero()) return {};
    std::vector<BigInt> r;
    r.reserve(coeffs_.size() + 1);
    r.emplace_back(0);
    r.insert(r.end(), coeffs_.begin(), coeffs_.end());
    return PolyZ(std::move(r));
  }

  PolyZ& operator+=(const PolyZ& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  PolyZ& operator-=(const PolyZ& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  PolyZ& operator*=(const BigInt& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator*(PolyZ a, const BigInt& s) { return a *= s; }
  friend PolyZ operator*(const BigInt& s, PolyZ a) { return a *= s; }
  friend PolyZ operator-(PolyZ a) { return a *= BigInt(-1); }

  friend PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyZ(std::move(r));
  }

  friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in descending powers, e.g. "z^4 - 6 z^2 + 3".
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const BigInt& c = coeffs_[k];
      if (c == 0) continue;
      const bool negative = c < 0;
      const BigInt mag = negative ? BigInt(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const bool unit = (mag == 1);
      if (!unit || k == 0) out += mag.str();
      if (k > 0) {
        if (!unit) out += " ";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline double poly_eval(const PolyZ& p, double t) noexcept { return p(t); }

inline PolyZ poly_derivative(const PolyZ& p) { return p.derivative(); }

inline void check_degree_cap(unsigned n, unsigned max_degree) {
  if (n > max_degree) {
    throw parameter_error("polynomial degree " + std::to_string(n) + " exceeds the configured maximum " +
                          std::to_string(max_degree));
  }
}

/// H_n from H_{n+1} = 2t H_n - 2n H_{n-1}, H_0 = 1, H_1 = 2t.
inline PolyZ hermite_recurrence(unsigned n, unsigned max_degree = kDefaultMaxDegree) {
  check_degree_cap(n, max_degree);
  PolyZ prev{1};
  if (n == 0) return prev;
  PolyZ cur{0, 2};
  for (unsigned k = 1; k < n; ++k) {
    PolyZ next = cur.times_t() * BigInt(2) - prev * BigInt(2 * static_cast<unsigned long>(k));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// H_n(t) = (-1)^n e^{t^2} d^n/dt^n e^{-t^2}. The n-th derivative of e^{-t^2}
/// is Q_n(t) e^{-t^2} with Q_0 = 1 and Q_{k+1} = Q_k' - 2t Q_k.
inline PolyZ hermite_rodrigues(unsigned n, unsigned max_degree = kDefaultMaxDegree) {
  check_degree_cap(n, max_degree);
  PolyZ q{1};
  for (unsigned k = 0; k < n; ++k) q = q.derivative() - q.times_t() * BigInt(2);
  return (n % 2 == 0) ? q : -q;
}

}  // namespace pcfosc
