#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "gradedga/multivector.hpp"

namespace gradedga {

/// Real multivector with standard normal coefficients on the given grade
/// (all grades when grade < 0).
template <class Rng>
Multivector random_multivector(const AlgebraPtr& alg, Rng& rng, int grade = -1, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Multivector x(alg);
  for (std::size_t m = 0; m < x.size(); ++m) {
    if (grade < 0 || grade_of(static_cast<BladeMask>(m)) == grade) x[static_cast<BladeMask>(m)] = g(rng);
  }
  return x;
}

template <class Rng>
Multivector random_bivector(const AlgebraPtr& alg, Rng& rng, double scale = 1.0) {
  return random_multivector(alg, rng, 2, scale);
}

/// Normalized vector with |v^2| = 1, rejecting nearly null draws.
template <class Rng>
Multivector random_unit_vector(const AlgebraPtr& alg, Rng& rng) {
  for (;;) {
    const Multivector v = random_multivector(alg, rng, 1);
    const double sq = (v * v).scalar_part().real();
    if (std::abs(sq) > 0.1 * v.max_abs() * v.max_abs()) return v / std::sqrt(std::abs(sq));
  }
}

/// Product of `count` unit vectors.
template <class Rng>
Multivector random_versor(const AlgebraPtr& alg, Rng& rng, int count) {
  Multivector u = Multivector::scalar(alg, 1.0);
  for (int i = 0; i < count; ++i) u = u * random_unit_vector(alg, rng);
  return u;
}

}  // namespace gradedga
