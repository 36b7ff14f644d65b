#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "gradedga/matrix_rep.hpp"
#include "gradedga/multivector.hpp"
#include "gradedga/polynomial.hpp"

namespace gradedga {

/// Separation below which two eigenvalues count as repeated, relative to
/// 1 + max|lambda|.
inline constexpr double kDistinctRoots = 1e-9;

/// W_m = <B^m>_{2m} / m!, m = 0..k, truncated after the last non-negligible
/// power, so a simple bivector has k = 1 and zero has k = 0.
struct WedgePowers {
  std::vector<Multivector> W;
  int k() const noexcept { return static_cast<int>(W.size()) - 1; }
};

namespace detail {

// Leading W's that vanish are dropped: s = |B|^m sets the scale of W_m.
inline WedgePowers trimmed(std::vector<Multivector> w, double scale, const Tolerance& tol) {
  while (w.size() > 1) {
    const auto m = static_cast<double>(w.size() - 1);
    if (w.back().max_abs() > tol.eps_rel * std::pow(scale, m)) break;
    w.pop_back();
  }
  return WedgePowers{std::move(w)};
}

// Sum_m <W_m^2>_0 (-lambda)^{k-m}, ascending coefficients.
inline Polynomial characteristic(const std::vector<Multivector>& w) {
  const int k = static_cast<int>(w.size()) - 1;
  Polynomial p;
  p.coeffs.resize(static_cast<std::size_t>(k + 1));
  for (int m = 0; m <= k; ++m) {
    const Complex c = (w[static_cast<std::size_t>(m)] * w[static_cast<std::size_t>(m)]).scalar_part();
    const int power = k - m;
    p.coeffs[static_cast<std::size_t>(power)] = (power & 1) ? -c : c;
  }
  return p;
}

// Numerator and denominator of the blade ratio for one eigenvalue.
inline std::pair<Multivector, Multivector> blade_ratio(const std::vector<Multivector>& w,
                                                       Complex lambda) {
  const int k = static_cast<int>(w.size()) - 1;
  Multivector num(w[0].algebra_ptr());
  Multivector den(w[0].algebra_ptr());
  // Horner in lambda over every other W, from the top index down.
  const int num_top = k;
  const int den_top = k - 1;
  for (int i = (k & 1) ? 1 : 0; i <= num_top; i += 2) num = num * lambda + w[static_cast<std::size_t>(i)];
  for (int i = (k & 1) ? 0 : 1; i <= den_top; i += 2) den = den * lambda + w[static_cast<std::size_t>(i)];
  return {num, den};
}

inline void require_distinct(const std::vector<Root>& roots) {
  double scale = 1.0;
  for (const auto& r : roots) {
    scale = std::max(scale, 1.0 + std::abs(r.value));
    if (r.multiplicity > 1) throw Error(ErrorCode::DegenerateRoots, "repeated eigenvalue");
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i].value - roots[j].value) < kDistinctRoots * scale) {
        throw Error(ErrorCode::DegenerateRoots, "eigenvalues are not separated");
      }
    }
  }
}

}  // namespace detail

inline WedgePowers wedge_powers(const Multivector& B, const Tolerance& tol = {}) {
  if (!B.is_grade(2, tol)) throw Error(ErrorCode::InvalidArgument, "input is not a bivector");
  const Multivector b = grade_select(B, 2);
  std::vector<Multivector> w{Multivector::scalar(b.algebra_ptr(), 1.0)};
  const int kmax = b.algebra().dim() / 2;
  if (b.max_abs() == 0.0) return WedgePowers{std::move(w)};
  for (int m = 1; m <= kmax; ++m) {
    w.push_back(outer(w.back(), b) / static_cast<double>(m));
  }
  return detail::trimmed(std::move(w), b.max_abs(), tol);
}

/// Monic polynomial (ascending coefficients) whose roots are lambda_i = b_i^2.
inline Polynomial lambda_polynomial(const Multivector& B, const Tolerance& tol = {}) {
  return detail::characteristic(wedge_powers(B, tol).W);
}

struct Decomposition {
  std::vector<Multivector> blades;
  std::vector<Complex> lambdas;
  Multivector input;

  Multivector sum() const {
    Multivector s(input.algebra_ptr());
    for (const auto& b : blades) s += b;
    return s;
  }
};

namespace detail {

// Rejects splits whose blades do not add up or do not square to scalars;
// both happen when nearly equal roots make the ratio formula ill conditioned.
inline void check_split(const Decomposition& d) {
  const double scale = std::max(1.0, d.input.max_abs());
  if ((d.sum() - d.input).max_abs() > 1e-8 * scale) {
    throw Error(ErrorCode::DegenerateRoots, "blades do not reconstruct the bivector");
  }
  for (std::size_t i = 0; i < d.blades.size(); ++i) {
    const Multivector sq = d.blades[i] * d.blades[i];
    const double s = std::max(1.0, d.blades[i].max_abs() * d.blades[i].max_abs());
    if ((sq - Multivector::scalar(sq.algebra_ptr(), d.lambdas[i])).max_abs() > 1e-8 * s) {
      throw Error(ErrorCode::DegenerateRoots, "blade does not square to its eigenvalue");
    }
  }
}

inline Multivector divide_or_degenerate(const Multivector& num, const Multivector& den,
                                        const Tolerance& tol) {
  try {
    return divide(num, den, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonInvertible) throw;
    throw Error(ErrorCode::DegenerateRoots, "blade denominator is singular");
  }
}

}  // namespace detail

/// Invariant decomposition of a bivector into commuting orthogonal simple
/// blades b_i with b_i^2 = lambda_i. Blades follow the eigenvalue order of
/// solve_lambdas.
inline Decomposition split(const Multivector& B, const Tolerance& tol = {}) {
  const WedgePowers wp = wedge_powers(B, tol);
  Decomposition d{{}, {}, grade_select(B, 2)};
  const int k = wp.k();
  if (k == 0) return d;
  if (k == 1) {
    d.blades.push_back(d.input);
    d.lambdas.push_back((d.input * d.input).scalar_part());
    return d;
  }
  if (B.algebra().dim() > kMaxRepDimension) {
    throw Error(ErrorCode::DimensionCap, "split divides through the Clifford representation (n <= 8)");
  }
  const auto roots = solve_lambdas(detail::characteristic(wp.W));
  detail::require_distinct(roots);
  for (const auto& r : roots) {
    const auto [num, den] = detail::blade_ratio(wp.W, r.value);
    d.blades.push_back(grade_select(detail::divide_or_degenerate(num, den, tol), 2));
    d.lambdas.push_back(r.value);
  }
  detail::check_split(d);
  return d;
}

/// Closed-form quadratic case for n < 6:
/// lambda = (B.B +- sqrt((B.B)^2 - (B^B)^2)) / 2, b = (lambda + B^B/2) / B.
inline Decomposition split_k2(const Multivector& B, const Tolerance& tol = {}) {
  if (B.algebra().dim() >= 6) {
    throw Error(ErrorCode::InvalidArgument, "split_k2 needs n < 6");
  }
  const WedgePowers wp = wedge_powers(B, tol);
  Decomposition d{{}, {}, grade_select(B, 2)};
  if (wp.k() < 2) {
    if (wp.k() == 1) {
      d.blades.push_back(d.input);
      d.lambdas.push_back((d.input * d.input).scalar_part());
    }
    return d;
  }
  const Multivector bb4 = outer(d.input, d.input);
  const Complex dot = (d.input * d.input).scalar_part();
  const Complex wedge_sq = (bb4 * bb4).scalar_part();
  const Complex root = std::sqrt(dot * dot - wedge_sq);
  std::vector<Root> roots{{0.5 * (dot + root), 1}, {0.5 * (dot - root), 1}};
  detail::sort_roots(roots);
  detail::require_distinct(roots);
  for (const auto& r : roots) {
    const Multivector num = bb4 * 0.5 + r.value;
    d.blades.push_back(grade_select(detail::divide_or_degenerate(num, d.input, tol), 2));
    d.lambdas.push_back(r.value);
  }
  detail::check_split(d);
  return d;
}

}  // namespace gradedga
