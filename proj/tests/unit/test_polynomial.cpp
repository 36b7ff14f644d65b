#include <gtest/gtest.h>

#include <random>

#include "gradedga/polynomial.hpp"
#include "oracles.hpp"

using namespace gradedga;
using C = std::complex<double>;

TEST(SolveLambdas, FactoredQuadratic) {
  // (l + 1)(l + 4) = l^2 + 5 l + 4
  const auto r = solve_lambdas(Polynomial{{4.0, 5.0, 1.0}});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_LT(std::abs(r[0].value + 1.0), 1e-15);
  EXPECT_LT(std::abs(r[1].value + 4.0), 1e-15);
}

TEST(SolveLambdas, RieszQuadratic) {
  // l^2 + 1/4 has roots +-i/2, ordered by imaginary part.
  const auto r = solve_lambdas(Polynomial{{0.25, 0.0, 1.0}});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_LT(std::abs(r[0].value - C(0, 0.5)), 1e-15);
  EXPECT_LT(std::abs(r[1].value - C(0, -0.5)), 1e-15);
}

TEST(SolveLambdas, ScrewQuadratic) {
  // l (l - B.B) with B.B = -3.
  const auto r = solve_lambdas(Polynomial{{0.0, 3.0, 1.0}});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].value, C(0.0));
  EXPECT_LT(std::abs(r[1].value + 3.0), 1e-15);
}

TEST(SolveLambdas, RepeatedRoots) {
  const auto q = solve_lambdas(Polynomial{{1.0, 2.0, 1.0}});
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].multiplicity, 2);
  // (l + 1)^2 (l - 2)
  const auto c = solve_lambdas(Polynomial{{-2.0, -3.0, 0.0, 1.0}});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_LT(std::abs(c[0].value - 2.0), 1e-10);
  EXPECT_EQ(c[1].multiplicity, 2);
  EXPECT_LT(std::abs(c[1].value + 1.0), 1e-6);
}

TEST(SolveLambdas, Linear) {
  const auto r = solve_lambdas(Polynomial{{3.0, 1.0}});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].value, C(-3.0));
}

TEST(SolveLambdas, StableQuadraticForSmallProducts) {
  // Roots 1e8 and 1e-8: the small one must not cancel away.
  const auto r = solve_lambdas(Polynomial{{1.0, -(1e8 + 1e-8), 1.0}});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_LT(std::abs(r[1].value - 1e-8) / 1e-8, 1e-12);
}

TEST(SolveLambdas, SmallRootsSurviveALargeOne) {
  // (l - 3e6)(l - 0.11)(l - 0.05): the small pair must not merge.
  const C a = 3e6, b = 0.11, c = 0.05;
  const auto r = solve_lambdas(Polynomial{{-a * b * c, a * b + a * c + b * c, -(a + b + c), 1.0}});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_LT(std::abs(r[1].value - b), 1e-9);
  EXPECT_LT(std::abs(r[2].value - c), 1e-9);
}

TEST(SolveLambdas, ZeroLeadingCoefficientRejected) {
  EXPECT_THROW(solve_lambdas(Polynomial{{1.0, 0.0}}), Error);
}

TEST(SolveLambdasProperties, MatchCompanionEigenvalues) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (int deg = 3; deg <= 6; ++deg) {
    for (int t = 0; t < 50; ++t) {
      std::vector<C> c(static_cast<std::size_t>(deg + 1));
      for (auto& v : c) v = C(g(rng), t % 2 ? g(rng) : 0.0);
      c.back() = 1.0;
      const auto roots = flatten_roots(solve_lambdas(Polynomial{c}));
      const auto ref = oracle::companion_roots(c);
      ASSERT_EQ(roots.size(), ref.size());
      double scale = 1.0;
      for (auto x : ref) scale = std::max(scale, std::abs(x));
      const double err = oracle::best_matching(roots, ref, [](C a, C b) { return std::abs(a - b); });
      EXPECT_LT(err, 1e-9 * scale) << "degree " << deg;
    }
  }
}

TEST(SolveLambdasProperties, DeterministicOrdering) {
  const Polynomial p{{C(2, 1), C(-1, 0.5), C(0.3, -2), C(1, 0), C(1, 0)}};
  const auto a = solve_lambdas(p);
  const auto b = solve_lambdas(p);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].value, b[i].value);
    if (i > 0) {
      EXPECT_GE(a[i - 1].value.real(), a[i].value.real() - 1e-12);
    }
  }
}
