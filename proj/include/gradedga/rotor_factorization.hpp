#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gradedga/decomposition.hpp"
#include "gradedga/exp_log.hpp"

namespace gradedga {

/// Leading coefficients of the tangent polynomial below this fraction of the
/// largest one are treated as zero; each one removed is a quarter turn whose
/// tangent is unbounded.
inline constexpr double kUnboundedTangent = 1e-13;

/// Commuting simple tangents ta(b_i) read off the grades of a rotor, with
/// lambda_i = ta(b_i)^2. Quarter turns have no finite tangent and are only
/// counted.
struct TangentSplit {
  std::vector<Multivector> tans;
  std::vector<Complex> lambdas;
  int unbounded = 0;
};

inline TangentSplit tangent_split(const Multivector& R, const Tolerance& tol = {}) {
  if (!R.is_even(tol)) throw Error(ErrorCode::InvalidArgument, "tangent split needs an even element");
  const Algebra& alg = R.algebra();
  const int kmax = alg.dim() / 2;
  std::vector<Multivector> w;
  for (int m = 0; m <= kmax; ++m) w.push_back(grade_select(R, 2 * m));
  const double scale = std::max(R.max_abs(), 1e-300);
  while (w.size() > 1 && w.back().max_abs() <= tol.eps_rel * scale) w.pop_back();

  TangentSplit out;
  const int k = static_cast<int>(w.size()) - 1;
  if (k == 0) return out;

  Polynomial p = detail::characteristic(w);
  double cmax = 0.0;
  for (const auto& c : p.coeffs) cmax = std::max(cmax, std::abs(c));
  while (p.coeffs.size() > 1 && std::abs(p.coeffs.back()) <= kUnboundedTangent * cmax) {
    p.coeffs.pop_back();
    ++out.unbounded;
  }
  if (p.degree() == 0) return out;

  if (k > 1 && alg.dim() > kMaxRepDimension) {
    throw Error(ErrorCode::DimensionCap, "tangent split divides through the Clifford representation (n <= 8)");
  }
  const auto roots = solve_lambdas(p);
  detail::require_distinct(roots);
  for (const auto& r : roots) {
    const auto [num, den] = detail::blade_ratio(w, r.value);
    out.tans.push_back(grade_select(detail::divide_or_degenerate(num, den, tol), 2));
    out.lambdas.push_back(r.value);
  }
  return out;
}

/// Commuting simple factors of a versor. For even input the rotors multiply
/// back to it; for odd input reflection * rotors[0] does.
struct Factorization {
  std::vector<Multivector> rotors;
  std::optional<Multivector> reflection;

  Multivector product() const {
    Multivector p = reflection ? *reflection : Multivector::scalar(rotors.front().algebra_ptr(), 1.0);
    for (const auto& r : rotors) p = p * r;
    return p;
  }
};

/// Splits a rotor into commuting simple rotors. All but one factor come from
/// normalize(1 + ta(b_i)); the last one is the residual reverse(R_1)...R that
/// keeps the overall sign. The residual goes to a quarter turn if there is
/// one, otherwise to the rotation with the largest tangent.
inline Factorization factor_even(const Multivector& R, const Tolerance& tol = {}) {
  const TangentSplit ts = tangent_split(R, tol);
  const std::size_t total = ts.tans.size() + static_cast<std::size_t>(ts.unbounded);
  if (total <= 1) return Factorization{{R}, std::nullopt};
  if (ts.unbounded > 1) {
    throw Error(ErrorCode::DegenerateRoots, "more than one quarter-turn factor");
  }

  std::optional<std::size_t> residual;
  if (ts.unbounded == 0) {
    for (std::size_t i = 0; i < ts.lambdas.size(); ++i) {
      if (ts.lambdas[i].real() < 0.0 &&
          (!residual || std::abs(ts.lambdas[i]) > std::abs(ts.lambdas[*residual]))) {
        residual = i;
      }
    }
    if (!residual) residual = ts.lambdas.size() - 1;
  }

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < ts.tans.size(); ++i) {
    if (!residual || i != *residual) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(ts.lambdas[a]) > std::abs(ts.lambdas[b]);
  });

  Factorization f;
  Multivector rest = R;
  for (std::size_t i : order) {
    const Multivector ri = normalize(ts.tans[i] + 1.0, tol);
    rest = reverse(ri) * rest;
    f.rotors.push_back(ri);
  }
  const double scale = std::max(1.0, rest.max_abs());
  for (std::size_t m = 0; m < rest.size(); ++m) {
    const int g = grade_of(static_cast<BladeMask>(m));
    if (g != 0 && g != 2 && std::abs(rest[static_cast<BladeMask>(m)]) > 1e-8 * scale) {
      throw Error(ErrorCode::DegenerateRoots, "residual factor is not simple");
    }
  }
  f.rotors.push_back(rest);
  return f;
}

/// P = r R with r = normalize(<P>_1), R = P r^-1; r and R commute.
inline Factorization factor_odd(const Multivector& P, const Tolerance& tol = {}) {
  if (!P.is_odd(tol)) throw Error(ErrorCode::InvalidArgument, "odd factorization needs an odd element");
  const Multivector r = normalize(grade_select(P, 1), tol);
  const Multivector rinv = versor_inverse(r, tol);
  return Factorization{{P * rinv}, r};
}

/// Principal logarithm: sum of the simple logarithms of the even factors.
inline Multivector log_rotor(const Multivector& R, const Tolerance& tol = {}) {
  const Factorization f = factor_even(R, tol);
  Multivector out(R.algebra_ptr());
  for (const auto& ri : f.rotors) out += log_simple(ri, tol).value();
  return out;
}

inline Multivector rotor_power(const Multivector& R, double t, const Tolerance& tol = {}) {
  return exp_bivector(log_rotor(R, tol) * t, tol);
}

}  // namespace gradedga
