#pragma once

// Reference implementations that share no code with the library kernels.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "gradedga/multivector.hpp"

namespace oracle {

using gradedga::Algebra;
using gradedga::BladeMask;
using gradedga::Complex;
using gradedga::Multivector;

// Writes both blades as generator lists, bubble sorts the concatenation and
// then contracts equal neighbours with their squares.
inline std::pair<int, BladeMask> blade_product(const Algebra& alg, BladeMask a, BladeMask b) {
  std::vector<int> g;
  for (int i = 0; i < alg.dim(); ++i) {
    if (a >> i & 1u) g.push_back(i);
  }
  for (int i = 0; i < alg.dim(); ++i) {
    if (b >> i & 1u) g.push_back(i);
  }
  int sign = 1;
  for (std::size_t pass = 0; pass < g.size(); ++pass) {
    for (std::size_t j = 0; j + 1 < g.size(); ++j) {
      if (g[j] > g[j + 1]) {
        std::swap(g[j], g[j + 1]);
        sign = -sign;
      }
    }
  }
  BladeMask out = 0;
  for (std::size_t j = 0; j < g.size();) {
    if (j + 1 < g.size() && g[j] == g[j + 1]) {
      sign *= alg.square(g[j]);
      j += 2;
    } else {
      out |= BladeMask{1} << g[j];
      ++j;
    }
  }
  return {sign, out};
}

inline Multivector gp(const Multivector& a, const Multivector& b) {
  const Algebra& alg = a.algebra();
  Multivector out(a.algebra_ptr());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto [s, m] = blade_product(alg, static_cast<BladeMask>(i), static_cast<BladeMask>(j));
      if (s != 0) out[m] += static_cast<double>(s) * a[static_cast<BladeMask>(i)] * b[static_cast<BladeMask>(j)];
    }
  }
  return out;
}

/// Dense matrix of y -> x y in binary blade order.
inline Eigen::MatrixXcd left_matrix(const Multivector& x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Multivector col = oracle::gp(x, Multivector::blade(x.algebra_ptr(), static_cast<BladeMask>(j)));
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = col[static_cast<BladeMask>(i)];
  }
  return m;
}

/// y with x y = n, by a dense solve on the left-multiplication matrix.
inline Multivector left_divide(const Multivector& n, const Multivector& x) {
  const Eigen::MatrixXcd m = left_matrix(x);
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(n.size()));
  for (std::size_t i = 0; i < n.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = n[static_cast<BladeMask>(i)];
  const Eigen::VectorXcd y = m.colPivHouseholderQr().solve(rhs);
  Multivector out(n.algebra_ptr());
  for (std::size_t i = 0; i < n.size(); ++i) out[static_cast<BladeMask>(i)] = y(static_cast<Eigen::Index>(i));
  return out;
}

/// Plain Taylor sum, no scaling.
inline Multivector exp_taylor(const Multivector& B, int terms = 80) {
  Multivector sum = Multivector::scalar(B.algebra_ptr(), 1.0);
  Multivector term = sum;
  for (int k = 1; k <= terms; ++k) {
    term = oracle::gp(term, B) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

/// Eigenvalues of the companion matrix of an ascending coefficient list.
inline std::vector<Complex> companion_roots(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
  std::vector<Complex> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return out;
}

/// Smallest max-distance over pairings of two equally long lists
/// (brute force over permutations; lists here have at most four entries).
template <class T, class Dist>
double best_matching(std::vector<T> a, const std::vector<T>& b, Dist dist) {
  if (a.size() != b.size()) return 1e300;
  std::vector<std::size_t> idx(a.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  double best = 1e300;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) worst = std::max(worst, dist(a[i], b[idx[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

// 3D PGA rotor R = a + b e23 + c e31 + d e12 + e e01 + f e02 + g e03 + h e0123.
struct E3Printed {
  Eigen::Matrix3d R;
  Eigen::Vector3d t, s;
  Eigen::Matrix3d T;
};

inline E3Printed e3_printed(double a, double b, double c, double d, double e, double f, double g, double h) {
  E3Printed p;
  p.R << a * a + b * b - c * c - d * d, 2 * (a * d + b * c), 2 * (-a * c + b * d),
      2 * (-a * d + b * c), a * a - b * b + c * c - d * d, 2 * (a * b + c * d),
      2 * (a * c + b * d), 2 * (-a * b + c * d), a * a - b * b - c * c + d * d;
  p.t = 2.0 * Eigen::Vector3d(c * g - a * e - b * h - d * f, d * e - a * f - b * g - c * h,
                              b * f - a * g - c * e - d * h);
  p.s = 2.0 * Eigen::Vector3d(c * g + a * e + b * h - d * f, d * e + a * f - b * g + c * h,
                              b * f + a * g - c * e + d * h);
  p.T << 0, p.t(2), -p.t(1), -p.t(2), 0, p.t(0), p.t(1), -p.t(0), 0;
  return p;
}

}  // namespace oracle
