#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "gradedga/error.hpp"

namespace gradedga {

/// Coefficients in ascending powers: coeffs[i] multiplies x^i.
struct Polynomial {
  std::vector<std::complex<double>> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }

  std::complex<double> operator()(std::complex<double> x) const noexcept {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    Polynomial d;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
      d.coeffs.push_back(coeffs[i] * static_cast<double>(i));
    }
    if (d.coeffs.empty()) d.coeffs.push_back(0.0);
    return d;
  }

  /// Sum |a_i| |x|^i, the scale used for backward-error tests.
  double magnitude_at(std::complex<double> x) const noexcept {
    double acc = 0.0;
    const double r = std::abs(x);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
  }
};

struct Root {
  std::complex<double> value;
  int multiplicity = 1;
};

struct RootOptions {
  int max_iterations = 500;
  /// Aberth estimates closer than this (relative to 1 + the larger of the two) are merged
  /// into one root of higher multiplicity.
  double cluster_tolerance = 1e-5;
};

namespace detail {

inline bool root_before(std::complex<double> a, std::complex<double> b, double tie) {
  if (std::abs(a.real() - b.real()) > tie) return a.real() > b.real();
  return a.imag() > b.imag();
}

inline void sort_roots(std::vector<Root>& roots) {
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r.value));
  const double tie = 1e-12 * scale;
  // Insertion sort: the comparator uses a tie tolerance and the lists are tiny.
  for (std::size_t i = 1; i < roots.size(); ++i) {
    for (std::size_t j = i; j > 0 && root_before(roots[j].value, roots[j - 1].value, tie); --j) {
      std::swap(roots[j], roots[j - 1]);
    }
  }
}

inline std::vector<std::complex<double>> quadratic_roots(std::complex<double> a,
                                                         std::complex<double> b,
                                                         std::complex<double> c) {
  const std::complex<double> sq = std::sqrt(b * b - 4.0 * a * c);
  // Choose the sign that avoids cancellation in b + sqrt(disc).
  const double align = (std::conj(b) * sq).real();
  const std::complex<double> q = -0.5 * (align >= 0.0 ? b + sq : b - sq);
  if (q == std::complex<double>{}) return {0.0, 0.0};
  return {q / a, c / q};
}

inline std::vector<std::complex<double>> aberth_roots(const Polynomial& p, const RootOptions& opt) {
  const int n = p.degree();
  const Polynomial dp = p.derivative();
  const std::complex<double> lead = p.coeffs.back();
  // Fujiwara-style bound on the root moduli.
  double bound = 0.0;
  for (int i = 0; i < n; ++i) {
    const double ratio = std::abs(p.coeffs[static_cast<std::size_t>(i)] / lead);
    bound = std::max(bound, 2.0 * std::pow(ratio, 1.0 / (n - i)));
  }
  if (bound == 0.0) return std::vector<std::complex<double>>(static_cast<std::size_t>(n), 0.0);
  const double radius = 0.5 * bound;

  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / n + 0.4;
    z[static_cast<std::size_t>(i)] = std::polar(radius, theta);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const std::complex<double> pz = p(z[i]);
      if (std::abs(pz) <= 4.0 * eps * p.magnitude_at(z[i])) {
        done[i] = true;
        continue;
      }
      std::complex<double> repulsion = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const std::complex<double> denom = dp(z[i]) - pz * repulsion;
      const std::complex<double> step =
          denom == std::complex<double>{} ? std::complex<double>(1e-8 * (1.0 + std::abs(z[i])), 0.0)
                                          : pz / denom;
      z[i] -= step;
      if (std::abs(step) <= 2.0 * eps * (1.0 + std::abs(z[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) return z;
  }
  throw Error(ErrorCode::NonConvergence, "simultaneous root iteration did not converge");
}

}  // namespace detail

/// All roots of `p` (leading coefficient nonzero) with multiplicities, ordered
/// by descending real part, then descending imaginary part. Degrees 1 and 2
/// are solved in closed form; higher degrees by Aberth iteration.
inline std::vector<Root> solve_lambdas(const Polynomial& p, const RootOptions& opt = {}) {
  if (p.coeffs.empty() || p.coeffs.back() == std::complex<double>{}) {
    throw Error(ErrorCode::InvalidArgument, "leading coefficient must be nonzero");
  }
  const int n = p.degree();
  std::vector<std::complex<double>> raw;
  if (n == 1) {
    raw = {-p.coeffs[0] / p.coeffs[1]};
  } else if (n == 2) {
    raw = detail::quadratic_roots(p.coeffs[2], p.coeffs[1], p.coeffs[0]);
  } else if (n > 2) {
    raw = detail::aberth_roots(p, opt);
  }

  std::vector<Root> roots;
  if (n == 2 && raw[0] == raw[1]) {
    roots.push_back({raw[0], 2});
  } else if (n <= 2) {
    for (auto r : raw) roots.push_back({r, 1});
  } else {
    std::vector<bool> used(raw.size(), false);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (used[i]) continue;
      std::complex<double> sum = raw[i];
      int count = 1;
      used[i] = true;
      for (std::size_t j = i + 1; j < raw.size(); ++j) {
        const double local = 1.0 + std::max(std::abs(raw[i]), std::abs(raw[j]));
        if (!used[j] && std::abs(raw[j] - raw[i]) < opt.cluster_tolerance * local) {
          used[j] = true;
          sum += raw[j];
          ++count;
        }
      }
      roots.push_back({sum / static_cast<double>(count), count});
    }
  }
  detail::sort_roots(roots);
  return roots;
}

/// Roots repeated according to multiplicity, in the same order.
inline std::vector<std::complex<double>> flatten_roots(const std::vector<Root>& roots) {
  std::vector<std::complex<double>> out;
  for (const auto& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

}  // namespace gradedga
