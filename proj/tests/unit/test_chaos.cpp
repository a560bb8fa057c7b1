#include "wickchaos/chaos.hpp"
#include "wickchaos/wick.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace wickchaos;

TEST(TestFunction, Evaluation) {
  const TestFunction g({0.0, 0.5, 1.0}, {2.0, -1.0});
  EXPECT_EQ(g(0.25), 2.0);
  EXPECT_EQ(g(0.5), -1.0);
  EXPECT_EQ(g(1.0), 0.0);
  EXPECT_EQ(g(-0.1), 0.0);
  EXPECT_FALSE(g.is_indicator());
  EXPECT_TRUE(TestFunction::indicator(0, 1).is_indicator());
  EXPECT_TRUE(TestFunction().is_zero());
  EXPECT_THROW(TestFunction({0.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(TestFunction({1.0, 0.0}, {1.0}), std::invalid_argument);
}

TEST(CorrelationWeight, IndicatorIsTriangle) {
  const auto g = TestFunction::indicator(0.0, 1.0);
  const CorrelationWeight w(g, g);
  for (double z : {-1.5, -1.0, -0.3, 0.0, 0.4, 0.99, 2.0}) EXPECT_NEAR(w(z), std::max(0.0, 1.0 - std::abs(z)), 1e-15);
  EXPECT_EQ(w.lo(), -1.0);
  EXPECT_EQ(w.hi(), 1.0);
  EXPECT_FALSE(w.vanishes_near_origin());
}

TEST(CorrelationWeight, SeparatedSupports) {
  const auto g = TestFunction::indicator(2.0, 3.0);
  const auto gt = TestFunction::indicator(0.0, 1.0);
  const CorrelationWeight w(g, gt);
  EXPECT_TRUE(w.vanishes_near_origin());
  EXPECT_NEAR(w(2.0), 1.0, 1e-15);
  EXPECT_NEAR(w(1.5), 0.5, 1e-15);
  EXPECT_EQ(w(0.5), 0.0);
}

TEST(CorrelationWeight, MatchesRiemannSum) {
  const TestFunction g({0.0, 0.3, 1.0}, {1.0, -2.0});
  const TestFunction gt({0.2, 0.6}, {3.0});
  const CorrelationWeight w(g, gt);
  for (double z : {-0.7, -0.1, 0.25, 0.5}) {
    const int n = 200000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double y = 0.2 + 0.4 * (i + 0.5) / n;
      sum += g(y + z) * gt(y);
    }
    EXPECT_NEAR(w(z), sum * 0.4 / n, 1e-4);
  }
}

TEST(LimitMoment, PowerLawOracle) {
  // rho = 0.65625 |x|^{-1/4}; int int |x - y|^{-1/2} over [0,1]^2 = 8/3.
  const auto g = TestFunction::indicator(0.0, 1.0);
  const double v = limit_second_moment(2, g, g, IncrementVarianceModel::power_law(1.75));
  EXPECT_NEAR(v / 2.296875, 1.0, 1e-10);
}

TEST(LimitMoment, QuadraticAndLinear) {
  const auto g = TestFunction::indicator(0.0, 1.0);
  EXPECT_NEAR(limit_second_moment(3, g, g, IncrementVarianceModel::quadratic()), 6.0, 1e-12);
  EXPECT_NEAR(limit_second_moment(1, g, g, IncrementVarianceModel::linear()), 1.0, 1e-15);
  EXPECT_THROW(limit_second_moment(2, g, g, IncrementVarianceModel::linear()), std::domain_error);
  EXPECT_EQ(limit_second_moment(2, TestFunction::indicator(2, 3), g, IncrementVarianceModel::linear()), 0.0);
  EXPECT_THROW(limit_second_moment(3, g, g, IncrementVarianceModel::power_law(1.6)), std::domain_error);
}

TEST(CrossMoment, TendsToLimit) {
  const auto m = IncrementVarianceModel::power_law(1.6);
  const auto g = TestFunction::indicator(0.0, 1.0);
  const double lim = limit_second_moment(2, g, g, m);
  EXPECT_EQ(cross_second_moment(2, g, g, 0.0, 0.0, m), lim);
  double prev = std::abs(cross_second_moment(2, g, g, 0.1, 0.1, m) - lim);
  for (double h : {0.01, 0.001, 1e-4}) {
    const double gap = std::abs(cross_second_moment(2, g, g, h, h, m) - lim);
    EXPECT_LT(gap, prev);
    prev = gap;
  }
}

TEST(CrossMoment, QuadraticIsExact) {
  const auto g = TestFunction::indicator(0.0, 1.0);
  EXPECT_NEAR(cross_second_moment(2, g, g, 0.1, 0.3, IncrementVarianceModel::quadratic()), 2.0, 1e-12);
}

TEST(Metric, SymmetryZeroAndTwoRoutes) {
  const auto m = IncrementVarianceModel::power_law(1.6);
  const auto g = TestFunction::indicator(0.0, 1.0);
  EXPECT_EQ(metric_d(0.05, 0.05, 2, g, m), 0.0);
  EXPECT_NEAR(metric_d(0.05, 0.01, 2, g, m), metric_d(0.01, 0.05, 2, g, m), 1e-14);
  for (auto [h, hp] : {std::pair{0.1, 0.0}, std::pair{0.1, 0.05}, std::pair{0.02, 0.003}}) {
    const double two_routes = cross_second_moment(2, g, g, h, h, m) + cross_second_moment(2, g, g, hp, hp, m) -
                              2.0 * cross_second_moment(2, g, g, h, hp, m);
    EXPECT_NEAR(metric_d_squared(h, hp, 2, g, m), two_routes, 1e-9);
  }
  EXPECT_THROW(metric_d(-0.1, 0.0, 2, g, m), std::invalid_argument);
}

TEST(Metric, QuadraticIsDegenerate) {
  const auto g = TestFunction::indicator(0.0, 1.0);
  EXPECT_NEAR(metric_d(0.1, 0.0, 2, g, IncrementVarianceModel::quadratic()), 0.0, 1e-7);
}

TEST(Metric, Bounds) {
  EXPECT_NEAR(bound_lemma_41(0.5, 0.25), std::sqrt(0.25 / 0.125), 1e-15);
  EXPECT_EQ(bound_lemma_41(0.3, 0.3), 0.0);
  EXPECT_THROW(bound_lemma_41(0.0, 0.3), std::invalid_argument);
  EXPECT_NEAR(bound_lemma_calc(0.0625, 2, IncrementVarianceModel::power_law(1.6)), std::pow(0.0625, 0.1), 1e-15);
}

TEST(ScaledMetric, AgreesWithDirectQuadrature) {
  const auto m = IncrementVarianceModel::power_law(1.6);
  const auto g = TestFunction::indicator(0.0, 1.0);
  const ScaledIndicatorMetric fast(m, 2, 1.0);
  for (auto [h, hp] : {std::pair{0.0625, 0.0}, std::pair{0.0625, 0.03125}, std::pair{0.01, 0.0013},
                       std::pair{1e-4, 1e-4 * 0.7}}) {
    const double direct = metric_d_squared(h, hp, 2, g, m);
    EXPECT_NEAR(fast.d_squared(h, hp), direct, 1e-10 + 1e-8 * direct) << h << ' ' << hp;
  }
  EXPECT_EQ(fast.d_squared(0.01, 0.01), 0.0);
  EXPECT_THROW(fast.d_squared(0.2, 0.0), std::invalid_argument);
  EXPECT_THROW(ScaledIndicatorMetric(IncrementVarianceModel::quadratic(), 2, 1.0), std::invalid_argument);
}

TEST(ScaledMetric, TinyScales) {
  // d(h, 0)^2 ~ C h^delta; check the homogeneity exponent far below the
  // quadrature resolution of the direct route.
  const auto m = IncrementVarianceModel::power_law(1.6);
  const ScaledIndicatorMetric fast(m, 2, 1.0);
  const double a = fast.d_squared(1e-30, 0.0);
  const double b = fast.d_squared(1e-32, 0.0);
  EXPECT_NEAR(std::log(a / b) / std::log(100.0), 0.2, 1e-6);
}

TEST(ChaosFunctional, Validation) {
  const auto m = IncrementVarianceModel::power_law(1.6);
  const auto path = sample_path(m, SampleGrid{1.0 / 64, 80}, 1);
  const auto g = TestFunction::indicator(0.0, 1.0);
  EXPECT_NO_THROW(chaos_functional(path, 0.125, 2, g, m));
  EXPECT_THROW(chaos_functional(path, 0.1, 2, g, m), std::invalid_argument);
  EXPECT_THROW(chaos_functional(path, 0.5, 2, g, m), std::invalid_argument);
  EXPECT_THROW(chaos_functional(path, 0.125, 0, g, m), std::invalid_argument);
  EXPECT_THROW(chaos_functional(path, 0.125, 2, TestFunction::indicator(-0.5, 0.5), m), std::invalid_argument);
}

TEST(ChaosFunctional, MatchesHandComputedSum) {
  const auto m = IncrementVarianceModel::power_law(1.6);
  const SampleGrid grid{0.25, 6};
  const auto path = sample_path(m, grid, 5);
  const auto g = TestFunction::indicator(0.0, 1.0);
  const double h = 0.5;
  const double var = m.sigma2(h) / (h * h);
  double ref = 0.0;
  for (int i = 0; i < 4; ++i) ref += 0.25 * wick_power(2, (path.values[i + 2] - path.values[i]) / h, var);
  const auto est = chaos_functional(path, h, 2, g, m);
  EXPECT_NEAR(est.value, ref, 1e-13);
  EXPECT_EQ(est.k, 2);
  EXPECT_EQ(chaos_functional_values(path, {h}, 2, g, m).front(), est.value);
}

TEST(ChaosFunctional, MeanZero) {
  const auto m = IncrementVarianceModel::power_law(1.75);
  CirculantSampler s(m, SampleGrid{1.0 / 256, 288});
  const auto g = TestFunction::indicator(0.0, 1.0);
  double sum = 0.0, sq = 0.0;
  const int n = 2000;
  for (int t = 0; t < n; ++t) {
    const double v = chaos_functional(s.sample(17, t), 1.0 / 32, 2, g, m).value;
    sum += v;
    sq += v * v;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sq / n - mean * mean) / n);
  EXPECT_LT(std::abs(mean), 4.0 * se);
}
