#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "gradedga/decomposition.hpp"
#include "gradedga/multivector.hpp"

namespace gradedga {

/// sinh(z)/z, continuous at 0.
inline Complex sinhc(Complex z) {
  if (std::abs(z) < 1e-4) {
    const Complex z2 = z * z;
    return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sinh(z) / z;
}

/// A bivector whose square is a scalar.
class SimpleBivector {
 public:
  explicit SimpleBivector(Multivector value, const Tolerance& tol = {}) : value_(std::move(value)) {
    if (!value_.is_grade(2, tol) && !value_.is_zero(tol)) {
      throw Error(ErrorCode::InvalidArgument, "simple bivector must be grade 2");
    }
    const Multivector sq = value_ * value_;
    if (!sq.is_grade(0, tol) && !tol.is_zero(sq.max_abs(), value_.max_abs() * value_.max_abs())) {
      throw Error(ErrorCode::InvalidArgument, "bivector is not simple: its square has higher grades");
    }
    lambda_ = sq.scalar_part();
  }

  SimpleBivector(Multivector value, Complex lambda) : value_(std::move(value)), lambda_(lambda) {}

  const Multivector& value() const noexcept { return value_; }
  Complex lambda() const noexcept { return lambda_; }

 private:
  Multivector value_;
  Complex lambda_;
};

/// Even multivector with R reverse(R) = 1.
class Rotor {
 public:
  explicit Rotor(Multivector value, const Tolerance& tol = {}) : value_(std::move(value)) {
    if (!value_.is_even(tol)) throw Error(ErrorCode::InvalidArgument, "rotor must be even");
    const Multivector n = value_ * reverse(value_) - 1.0;
    if (n.max_abs() > 1e-8 * std::max(1.0, value_.max_abs() * value_.max_abs())) {
      throw Error(ErrorCode::InvalidArgument, "rotor is not normalized");
    }
  }

  const Multivector& value() const noexcept { return value_; }

 private:
  Multivector value_;
};

/// cosh(sqrt(lambda)).
inline Complex co(const SimpleBivector& b) { return std::cosh(std::sqrt(b.lambda())); }

/// b sinhc(sqrt(lambda)).
inline Multivector si(const SimpleBivector& b) { return b.value() * sinhc(std::sqrt(b.lambda())); }

inline Multivector exp_simple(const SimpleBivector& b) { return si(b) + co(b); }

/// Truncated Taylor series with scaling and squaring. The l1 norm bounds the
/// geometric product, so after scaling ||X||_1 <= 1/2 thirty terms leave a
/// remainder far below double precision.
inline Multivector exp_series(const Multivector& B, double tol = 1e-16) {
  const double l1 = B.l1_norm();
  int squarings = 0;
  if (l1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(l1 / 0.5)));
  const Multivector X = B / std::ldexp(1.0, squarings);
  Multivector sum = Multivector::scalar(B.algebra_ptr(), 1.0);
  Multivector term = sum;
  for (int i = 1; i <= 30; ++i) {
    term = term * X / static_cast<double>(i);
    sum += term;
    if (term.l1_norm() <= tol * sum.l1_norm()) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Closed-form exponential through the invariant decomposition; falls back
/// to the series when the split is unavailable.
inline Multivector exp_bivector(const Multivector& B, const Tolerance& tol = {}) {
  try {
    const Decomposition d = split(B, tol);
    Multivector r = Multivector::scalar(B.algebra_ptr(), 1.0);
    for (std::size_t i = 0; i < d.blades.size(); ++i) {
      r = r * exp_simple(SimpleBivector(d.blades[i], d.lambdas[i]));
    }
    return r;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::DegenerateRoots:
      case ErrorCode::NonConvergence:
      case ErrorCode::NonInvertible:
      case ErrorCode::DimensionCap:
        return exp_series(grade_select(B, 2));
      default:
        throw;
    }
  }
}

/// Principal logarithm of R = c + s with s a simple bivector.
///
/// With sigma = sqrt(s^2) and z = log(c + sigma) the result is b = s z / sigma.
/// For rotations this reduces to atan2(sqrt(-s^2), c), so every angle up to
/// a full turn is recovered and the sign of s keeps the orientation.
inline SimpleBivector log_simple(const Multivector& R, const Tolerance& tol = {}) {
  const double scale = std::max(1.0, R.max_abs());
  for (std::size_t m = 0; m < R.size(); ++m) {
    const int g = grade_of(static_cast<BladeMask>(m));
    if (g != 0 && g != 2 && !tol.is_zero(R[static_cast<BladeMask>(m)], scale)) {
      throw Error(ErrorCode::InvalidArgument, "simple rotor must have grades 0 and 2 only");
    }
  }
  const Complex c = R.scalar_part();
  const Multivector s = grade_select(R, 2);
  const Multivector sq = s * s;
  if (!tol.is_zero((sq - Multivector::scalar(sq.algebra_ptr(), sq.scalar_part())).max_abs(),
                   scale * scale)) {
    throw Error(ErrorCode::InvalidArgument, "bivector part is not simple");
  }
  const Complex s2 = sq.scalar_part();
  if (std::abs(c * c - s2 - 1.0) > 1e-8 * scale * scale) {
    throw Error(ErrorCode::InvalidArgument, "rotor is not normalized");
  }

  if (c.real() > 0.0 && std::abs(s2) < 1e-8 * std::norm(c)) {
    // atanh(u) / (u c) with u^2 = s^2 / c^2, expanded for small u.
    const Complex u2 = s2 / (c * c);
    const Complex f = (1.0 + u2 / 3.0 + u2 * u2 / 5.0) / c;
    return SimpleBivector(s * f, s2 * f * f);
  }
  const Complex sigma = std::sqrt(s2);
  if (std::abs(sigma) <= tol.threshold(1.0)) {
    throw Error(ErrorCode::AxisUndefined, "rotor is -1 up to a null bivector; the axis is undefined");
  }
  const Complex z = std::log(c + sigma);
  return SimpleBivector(s * (z / sigma), z * z);
}

/// Product of exp(theta_i b_i) over commuting simple blades.
inline Multivector gauge_rotor(std::span<const Multivector> blades, std::span<const double> thetas) {
  if (blades.size() != thetas.size() || blades.empty()) {
    throw Error(ErrorCode::InvalidArgument, "need one angle per blade");
  }
  Multivector r = Multivector::scalar(blades.front().algebra_ptr(), 1.0);
  for (std::size_t i = 0; i < blades.size(); ++i) {
    r = r * exp_simple(SimpleBivector(blades[i] * thetas[i]));
  }
  return r;
}

}  // namespace gradedga
