#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "gradedga/gradedga.hpp"
#include "gradedga/random.hpp"
#include "oracles.hpp"

using namespace gradedga;
using std::numbers::pi;

namespace {
Multivector e(const AlgebraPtr& a, const char* name, Complex v = 1.0) { return Multivector::named(a, name, v); }

Multivector scaled_bivector(const AlgebraPtr& a, std::mt19937_64& rng, double max_norm) {
  Multivector b = random_bivector(a, rng);
  double n2 = 0.0;
  for (auto c : b.coeffs()) n2 += std::norm(c);
  std::uniform_real_distribution<double> u(0.0, max_norm);
  return b * (u(rng) / std::sqrt(n2));
}
}  // namespace

TEST(Sinhc, Values) {
  EXPECT_EQ(sinhc(0.0), Complex(1.0));
  EXPECT_LT(std::abs(sinhc(Complex(0, pi))), 1e-16);
  // Series sum of 1/(2k+1)!
  double ref = 0.0, f = 1.0;
  for (int k = 0; k < 15; ++k) {
    f = 1.0;
    for (int j = 2; j <= 2 * k + 1; ++j) f *= j;
    ref += 1.0 / f;
  }
  EXPECT_NEAR(sinhc(1.0).real(), ref, 1e-15);
  EXPECT_NEAR(sinhc(1.0).real(), 1.1752011936438014, 1e-15);
  // Continuity across the small-argument switch.
  EXPECT_LT(std::abs(sinhc(0.99999e-4) - sinhc(1.00001e-4)), 1e-12);
}

TEST(CoSi, Cases) {
  const auto e3 = make_algebra(3, 0);
  const double th = 0.8;
  const SimpleBivector b(e(e3, "e12") * th);
  EXPECT_LT(std::abs(co(b) - std::cos(th)), 1e-15);
  EXPECT_LT(max_abs_diff(si(b), e(e3, "e12") * std::sin(th)), 1e-15);

  const auto pga = make_algebra(3, 0, 1);
  const SimpleBivector n(e(pga, "e01") * 2.0);
  EXPECT_EQ(co(n), Complex(1.0));
  EXPECT_TRUE(approx_equal(si(n), n.value(), 0.0));

  const auto sta = make_algebra(1, 3);
  const double phi = 0.6;
  const SimpleBivector k(e(sta, "e14") * phi);
  EXPECT_LT(std::abs(k.lambda() - phi * phi), 1e-15);
  EXPECT_LT(std::abs(co(k) - std::cosh(phi)), 1e-15);
  EXPECT_LT(max_abs_diff(si(k), e(sta, "e14") * std::sinh(phi)), 1e-15);
}

TEST(ExpSimple, Examples) {
  const auto pga = make_algebra(3, 0, 1);
  EXPECT_TRUE(approx_equal(exp_simple(SimpleBivector(Multivector(pga))), Multivector::scalar(pga, 1.0), 0.0));
  EXPECT_TRUE(approx_equal(exp_simple(SimpleBivector(e(pga, "e01"))), e(pga, "e01") + 1.0, 0.0));
  const auto e3 = make_algebra(3, 0);
  EXPECT_LT(max_abs_diff(exp_simple(SimpleBivector(e(e3, "e12") * (pi / 2))), e(e3, "e12")), 1e-15);
}

TEST(SimpleBivector, RejectsNonSimple) {
  const auto a = make_algebra(4, 0);
  EXPECT_THROW(SimpleBivector(e(a, "e12") + e(a, "e34")), Error);
}

TEST(ExpBivector, CommutingBlocks) {
  const auto a = make_algebra(4, 0);
  const double al = 0.4, be = 1.3;
  const Multivector r = exp_bivector(e(a, "e12") * al + e(a, "e34") * be);
  const Multivector ref = (e(a, "e12") * std::sin(al) + std::cos(al)) * (e(a, "e34") * std::sin(be) + std::cos(be));
  EXPECT_LT(max_abs_diff(r, ref), 1e-14);
}

TEST(ExpBivector, ScrewIsRotationTimesTranslation) {
  std::mt19937_64 rng(41);
  const auto a = make_algebra(3, 0, 1);
  const Multivector B = random_bivector(a, rng);
  const Decomposition d = split(B);
  const std::size_t z = std::abs(d.lambdas[0]) < std::abs(d.lambdas[1]) ? 0 : 1;
  const Multivector ref = exp_simple(SimpleBivector(d.blades[1 - z])) * (d.blades[z] + 1.0);
  EXPECT_LT(max_abs_diff(exp_bivector(B), ref), 1e-12);
  EXPECT_LT(max_abs_diff(exp_bivector(B), oracle::exp_taylor(B)), 1e-10);
}

TEST(ExpProperties, MatchesTaylorOracle) {
  std::mt19937_64 rng(42);
  for (const auto& alg : {make_algebra(2, 0), make_algebra(3, 0), make_algebra(4, 0), make_algebra(1, 3),
                          make_algebra(3, 0, 1), make_algebra(2, 2), make_algebra(4, 1), make_algebra(6, 0)}) {
    for (int t = 0; t < 8; ++t) {
      const Multivector B = scaled_bivector(alg, rng, 2.0);
      const Multivector ref = oracle::exp_taylor(B);
      EXPECT_LT(max_abs_diff(exp_bivector(B), ref), 1e-10);
      EXPECT_LT(max_abs_diff(exp_series(B), ref), 1e-12);
    }
  }
}

TEST(ExpProperties, SimpleAgreesWithSeries) {
  std::mt19937_64 rng(43);
  for (const auto& alg : {make_algebra(3, 0), make_algebra(1, 3), make_algebra(3, 0, 1), make_algebra(2, 2),
                          make_algebra(3, 3)}) {
    for (int t = 0; t < 10; ++t) {
      Multivector b = outer(random_multivector(alg, rng, 1), random_multivector(alg, rng, 1));
      b = b * (1.5 / b.l1_norm());
      const Multivector s = exp_series(b);
      EXPECT_LT(max_abs_diff(exp_simple(SimpleBivector(b)), s), 1e-10 * std::max(1.0, s.max_abs()));
    }
  }
}

TEST(ExpProperties, NormalizedAndInvariant) {
  std::mt19937_64 rng(44);
  for (const auto& alg : {make_algebra(4, 0), make_algebra(1, 3), make_algebra(3, 0, 1), make_algebra(4, 1)}) {
    const Multivector B = scaled_bivector(alg, rng, 2.0);
    const Multivector R = exp_bivector(B);
    EXPECT_LT(max_abs_diff(R * reverse(R), Multivector::scalar(alg, 1.0)), 1e-12);
    const Multivector b = outer(random_multivector(alg, rng, 1), random_multivector(alg, rng, 1));
    EXPECT_LT(max_abs_diff(sandwich(exp_simple(SimpleBivector(b)), b), b), 1e-10 * std::max(1.0, b.max_abs()));
  }
}

TEST(LogSimple, Branches) {
  const auto e3 = make_algebra(3, 0);
  for (double th : {0.1, 1.0, 2.0, 3.0}) {
    const Multivector R = e(e3, "e12") * std::sin(th) + std::cos(th);
    EXPECT_LT(max_abs_diff(log_simple(R).value(), e(e3, "e12") * th), 1e-14) << th;
  }
  const auto pga = make_algebra(3, 0, 1);
  EXPECT_TRUE(approx_equal(log_simple(e(pga, "e01") + 1.0).value(), e(pga, "e01"), 1e-16));
  const auto sta = make_algebra(1, 3);
  const double phi = 1.7;
  const Multivector K = e(sta, "e14") * std::sinh(phi) + std::cosh(phi);
  EXPECT_LT(max_abs_diff(log_simple(K).value(), e(sta, "e14") * phi), 1e-14);
  // Past a half turn the orientation of the bivector part carries the angle.
  const Multivector back = e(e3, "e12") * std::sin(-2.5) + std::cos(-2.5);
  EXPECT_LT(max_abs_diff(log_simple(back).value(), e(e3, "e12") * -2.5), 1e-14);
}

TEST(LogSimple, MinusOneHasNoAxis) {
  const auto e3 = make_algebra(3, 0);
  try {
    log_simple(Multivector::scalar(e3, -1.0));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::AxisUndefined);
  }
  const auto pga = make_algebra(3, 0, 1);
  EXPECT_THROW(log_simple(e(pga, "e01") - 1.0), Error);
}

TEST(LogSimpleProperties, RoundTrip) {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> ang(0.01, pi - 0.01);
  for (const auto& alg : {make_algebra(3, 0), make_algebra(1, 3), make_algebra(3, 0, 1), make_algebra(2, 2)}) {
    for (int t = 0; t < 20; ++t) {
      Multivector b = outer(random_multivector(alg, rng, 1), random_multivector(alg, rng, 1));
      const Complex l = (b * b).scalar_part();
      if (l.real() < 0) b = b * (ang(rng) / std::sqrt(-l.real()));
      const SimpleBivector sb(b);
      EXPECT_LT(max_abs_diff(log_simple(exp_simple(sb)).value(), b), 1e-10 * std::max(1.0, b.max_abs()));
    }
  }
}

TEST(GaugeRotor, OrderIndependent) {
  const auto a = make_algebra(6, 0);
  const std::vector<Multivector> bl{e(a, "e12"), e(a, "e34"), e(a, "e56")};
  const std::vector<Multivector> rev{e(a, "e56"), e(a, "e34"), e(a, "e12")};
  const std::vector<double> th{0.3, 0.7, 1.1}, thr{1.1, 0.7, 0.3};
  const Multivector g = gauge_rotor(bl, th);
  EXPECT_LT(max_abs_diff(g, gauge_rotor(rev, thr)), 1e-15);
  EXPECT_LT(max_abs_diff(g, exp_bivector(bl[0] * 0.3 + bl[1] * 0.7 + bl[2] * 1.1)), 1e-12);
}
