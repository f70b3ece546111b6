#include <gtest/gtest.h>

#include <random>

#include "harmap/errors.hpp"
#include "harmap/operators.hpp"
#include "support/oracle.hpp"

using namespace harmap;

TEST(PreSchwarzian, LogExample) {
  EXPECT_NEAR(std::abs(pre_schwarzian(log_example(), 0.0) - 2.0), 0, 1e-15);
  const Complex z(0.3, -0.4);
  const Complex expected = 2.0 / (1.0 - z) - std::conj(z) / (1.0 - std::norm(z));
  EXPECT_NEAR(std::abs(pre_schwarzian(log_example(), z) - expected), 0, 1e-14);
}

TEST(PreSchwarzian, Identity) {
  EXPECT_EQ(pre_schwarzian(identity_map(), Complex(0.5, 0.5)), Complex(0.0));
}

TEST(PreSchwarzian, HalfPlaneAtOrigin) {
  EXPECT_NEAR(std::abs(pre_schwarzian(half_plane_L(), 0.0) - 3.0), 0, 1e-15);
}

TEST(AOperator, HalfPlaneClosedForm) {
  const Complex z(0.0, 0.5);
  EXPECT_NEAR(std::abs(a_operator(half_plane_L(), z) - Complex(0.9, 1.2)), 0, 1e-15);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Complex w = oracle::random_in_disk(rng, 0.99);
    const Complex expected = 1.5 * (1.0 - std::conj(w)) / (1.0 - w);
    EXPECT_NEAR(std::abs(a_operator(half_plane_L(), w) - expected), 0, 1e-12);
  }
}

TEST(AOperator, PowerMapOnRealAxis) {
  EXPECT_NEAR(std::abs(a_operator(power_map(2), 0.5) - Complex(-0.75)), 0, 1e-15);
  for (int n : {2, 3, 5}) {
    for (double x : {0.2, 0.5, 0.9}) {
      double s = 0.0;
      for (int k = 0; k <= n - 2; ++k) s += std::pow(x, 2 * k);
      const double expected =
          -x * (1.0 + 0.5 * (n - 1) * std::pow(x, 2 * (n - 2)) / s);
      EXPECT_NEAR(a_operator(power_map(n), x).real(), expected, 1e-14)
          << "n=" << n << " x=" << x;
    }
  }
}

TEST(AOperator, LogExampleOnRealAxis) {
  for (double x : {-0.9, -0.5, 0.0, 0.3, 0.5, 0.99}) {
    const Complex A = a_operator(log_example(), x);
    EXPECT_NEAR(A.real(), 1.0 - 0.5 * x, 1e-14);
    EXPECT_NEAR(A.imag(), 0.0, 1e-15);
  }
  EXPECT_NEAR(a_operator(log_example(), 0.5).real(), 0.75, 1e-15);
}

TEST(AOperator, MatchesPreSchwarzian) {
  const Complex z(-0.2, 0.7);
  const HarmonicMap K = harmonic_koebe_K();
  const Complex expected =
      0.5 * (1.0 - std::norm(z)) * pre_schwarzian(K, z) - std::conj(z);
  EXPECT_NEAR(std::abs(a_operator(K, z) - expected), 0, 1e-14);
}

TEST(AOperator, MatchesOracleOnCatalog) {
  std::mt19937_64 rng(17);
  for (const auto& c : oracle::catalog_cases()) {
    for (int i = 0; i < 50; ++i) {
      const Complex z = oracle::random_in_disk(rng, 0.9);
      const oracle::Ops o = oracle::operators(c, z);
      EXPECT_NEAR(std::abs(a_operator(c.f, z) - o.A), 0, 1e-11) << c.name;
      EXPECT_NEAR(std::abs(pre_schwarzian(c.f, z) - o.P), 0,
                  1e-11 * std::max(1.0, std::abs(o.P)))
          << c.name;
    }
  }
}

TEST(AOperator, BeyondRadiusThrows) {
  EXPECT_THROW(a_operator(identity_map(), Complex(0.9999999)), DomainError);
}

TEST(AOperatorAnalytic, Examples) {
  EXPECT_NEAR(std::abs(a_operator_analytic(identity_function(), 0.5) + 0.5), 0,
              1e-15);
  const AnalyticFunction koebe = linear_combination(
      1.0L, harmonic_koebe_K().h, -1.0L, harmonic_koebe_K().g);
  EXPECT_NEAR(std::abs(a_operator_analytic(koebe, 0.0) - 2.0), 0, 1e-14);
  EXPECT_NEAR(std::abs(a_operator_analytic(k_alpha_function(1.5), 0.0) - 1.5), 0,
              1e-14);
}

TEST(Schwarzian, MobiusVanishes) {
  for (Complex z : {Complex(0.0), Complex(0.4, -0.3), Complex(-0.8, 0.1)})
    EXPECT_NEAR(std::abs(schwarzian(k_alpha(1.0), z)), 0, 1e-12);
}

TEST(Schwarzian, ZeroAtOrigin) {
  EXPECT_NEAR(std::abs(schwarzian(log_example(), 0.0)), 0, 1e-14);
  EXPECT_NEAR(std::abs(schwarzian(power_map(2), 0.0)), 0, 1e-14);
}

TEST(Schwarzian, MatchesFiniteDifferenceOfP) {
  std::mt19937_64 rng(23);
  for (const auto& c : oracle::catalog_cases()) {
    for (int i = 0; i < 20; ++i) {
      const Complex z = oracle::random_in_disk(rng, 0.8);
      const double h = 1e-5;
      auto P = [&](Complex w) { return oracle::operators(c, w).P; };
      const Complex dx = (P(z + h) - P(z - h)) / (2 * h);
      const Complex dy = (P(z + Complex(0, h)) - P(z - Complex(0, h))) / (2 * h);
      const Complex dz = 0.5 * (dx - Complex(0, 1) * dy);
      const Complex Pz = P(z);
      const Complex fd = dz - 0.5 * Pz * Pz;
      EXPECT_NEAR(std::abs(schwarzian(c.f, z) - fd), 0, 1e-4) << c.name << " " << z;
    }
  }
}

TEST(Evaluate, ConsistentWithSingleOperators) {
  const Complex z(0.25, 0.6);
  const OperatorSample s = evaluate(log_example(), z);
  EXPECT_EQ(s.P, pre_schwarzian(log_example(), z));
  EXPECT_NEAR(std::abs(s.A - a_operator(log_example(), z)), 0, 1e-15);
  ASSERT_TRUE(s.S.has_value());
  EXPECT_NEAR(std::abs(*s.S - schwarzian(log_example(), z)), 0, 1e-13);
  EXPECT_FALSE(evaluate(log_example(), z, false).S.has_value());
  EXPECT_EQ(s.map_label, "log_example");
}

TEST(WirtingerFd, ElementaryFields) {
  const Complex z(0.3, 0.1);
  auto a = wirtinger_fd([](Complex w) { return w; }, z, 1e-5);
  EXPECT_NEAR(std::abs(a.dz - 1.0), 0, 1e-10);
  EXPECT_NEAR(std::abs(a.dzbar), 0, 1e-10);
  auto b = wirtinger_fd([](Complex w) { return std::conj(w); }, z, 1e-5);
  EXPECT_NEAR(std::abs(b.dz), 0, 1e-10);
  EXPECT_NEAR(std::abs(b.dzbar - 1.0), 0, 1e-10);
  auto c = wirtinger_fd([](Complex w) { return Complex(std::norm(w)); }, z, 1e-5);
  EXPECT_NEAR(std::abs(c.dz - std::conj(z)), 0, 1e-10);
  EXPECT_NEAR(std::abs(c.dzbar - z), 0, 1e-10);
}

TEST(LogDensityGradient, Examples) {
  EXPECT_LE(log_density_gradient_check(identity_map(), 0.5), 1e-8);
  EXPECT_LE(log_density_gradient_check(half_plane_L(), Complex(0.3, 0.2)), 1e-6);
  EXPECT_LE(log_density_gradient_check(harmonic_koebe_K(), -0.4), 1e-6);
}

TEST(DilatationHyperbolicDerivative, SchwarzPickBound) {
  std::mt19937_64 rng(29);
  for (const auto& c : oracle::catalog_cases()) {
    for (int i = 0; i < 20; ++i) {
      const Complex z = oracle::random_in_disk(rng, 0.95);
      const double d = dilatation_hyperbolic_derivative(c.f, z);
      EXPECT_GE(d, 0.0);
      EXPECT_LE(d, 1.0 + 1e-12) << c.name;
    }
  }
  // w = z is a disk automorphism, so the bound is attained.
  EXPECT_NEAR(dilatation_hyperbolic_derivative(harmonic_koebe_K(), 0.6), 1.0, 1e-12);
}
