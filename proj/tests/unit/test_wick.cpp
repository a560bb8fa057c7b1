#include "wickchaos/quadrature.hpp"
#include "wickchaos/wick.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace wickchaos;

namespace {
double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }
}  // namespace

TEST(Hermite, LowOrders) {
  EXPECT_EQ(hermite_orthonormal(0, 1.7), 1.0);
  EXPECT_EQ(hermite_orthonormal(1, 1.7), 1.7);
  EXPECT_NEAR(hermite_orthonormal(2, 1.7), (1.7 * 1.7 - 1) / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(hermite_orthonormal(3, 0.4), (0.064 - 1.2) / std::sqrt(6.0), 1e-15);
}

TEST(Hermite, Orthonormal) {
  const auto& rule = cached_gauss_hermite_normal(64);
  for (int j = 0; j <= 12; ++j) {
    for (int k = 0; k <= 12; ++k) {
      double s = 0.0;
      for (int i = 0; i < 64; ++i) s += rule.weights[i] * hermite_orthonormal(j, rule.nodes[i]) * hermite_orthonormal(k, rule.nodes[i]);
      EXPECT_NEAR(s, j == k ? 1.0 : 0.0, 1e-12) << j << ' ' << k;
    }
  }
}

TEST(GaussianMoment, Values) {
  EXPECT_EQ(gaussian_even_moment(0, 2.0), 1.0);
  EXPECT_EQ(gaussian_even_moment(2, 2.0), 2.0);
  EXPECT_EQ(gaussian_even_moment(4, 2.0), 12.0);
  EXPECT_EQ(gaussian_even_moment(6, 1.0), 15.0);
  EXPECT_THROW(gaussian_even_moment(3, 1.0), std::invalid_argument);
}

TEST(WickPower, Examples) {
  EXPECT_EQ(wick_power(2, 3.0, 1.0), 8.0);
  EXPECT_EQ(wick_power(4, 0.0, 1.0), 3.0);
  EXPECT_EQ(wick_power(3, 2.0, 0.0), 8.0);
  EXPECT_EQ(wick_power(0, 5.0, 1.0), 1.0);
  EXPECT_THROW(wick_power(2, 1.0, -1.0), std::invalid_argument);
  EXPECT_THROW(wick_power(21, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(wick_power(-1, 1.0, 1.0), std::invalid_argument);
}

TEST(WickPower, MatchesHermiteForm) {
  // :x^k: with variance s^2 is s^k sqrt(k!) H_k(x / s).
  for (double var : {0.25, 1.0, 3.0}) {
    const double s = std::sqrt(var);
    for (int k = 0; k <= 12; ++k) {
      for (double x : {-2.5, -0.3, 0.0, 0.9, 3.1}) {
        const double ref = std::pow(s, k) * std::sqrt(factorial(k)) * hermite_orthonormal(k, x / s);
        EXPECT_NEAR(wick_power(k, x, var), ref, 1e-11 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST(WickContext, AgreesWithWickPower) {
  for (int k = 0; k <= kMaxWickOrder; ++k) {
    WickContext ctx(k, 0.7);
    for (double x : {-1.3, 0.2, 2.0}) {
      const double ref = wick_power(k, x, 0.7);
      EXPECT_NEAR(ctx(x), ref, 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST(WickCrossMoment, DiagonalAndOff) {
  EXPECT_EQ(wick_cross_moment(2, 2, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(wick_cross_moment(3, 3, -0.8), 6.0 * -0.512);
  EXPECT_EQ(wick_cross_moment(2, 3, 0.5), 0.0);
  EXPECT_EQ(wick_cross_moment(0, 0, 0.0), 1.0);
}

TEST(WickCrossMoment, GaussHermiteCheck) {
  // E(:X^k: :Y^k:) for Y = c X + sqrt(1 - c^2) Z by tensor Gauss-Hermite.
  const auto& rule = cached_gauss_hermite_normal(40);
  const double c = 0.5, sc = std::sqrt(1 - c * c);
  for (int k = 0; k <= 4; ++k) {
    for (int j = 0; j <= 4; ++j) {
      double sum = 0.0;
      for (int a = 0; a < 40; ++a)
        for (int b = 0; b < 40; ++b)
          sum += rule.weights[a] * rule.weights[b] * wick_power(k, rule.nodes[a], 1.0) *
                 wick_power(j, c * rule.nodes[a] + sc * rule.nodes[b], 1.0);
      EXPECT_NEAR(sum, wick_cross_moment(k, j, c), 1e-11);
    }
  }
}
