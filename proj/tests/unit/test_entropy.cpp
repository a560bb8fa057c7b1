#include "wickchaos/entropy.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace wickchaos;

namespace {

MetricTable uniform_table(int n) {
  std::vector<double> pts(n + 1);
  for (int i = 0; i <= n; ++i) pts[i] = static_cast<double>(i) / n;
  return make_metric_table(pts, 0.0, 1.0, [](double a, double b) { return std::abs(a - b); });
}

}  // namespace

TEST(MetricTable, CellsCoverDomain) {
  const auto t = make_metric_table({0.0, 0.2, 1.0}, 0.0, 1.0, [](double a, double b) { return std::abs(a - b); });
  EXPECT_NEAR(t.cell_widths[0], 0.1, 1e-15);
  EXPECT_NEAR(t.cell_widths[1], 0.5, 1e-15);
  EXPECT_NEAR(t.cell_widths[2], 0.4, 1e-15);
  EXPECT_NEAR(t.diameter, 1.0, 1e-15);
  EXPECT_NEAR(t.distance(2, 1), 0.8, 1e-15);
  EXPECT_THROW(make_metric_table({0.5, 0.2}, 0.0, 1.0, [](double, double) { return 0.0; }), std::invalid_argument);
}

TEST(Triangle, EuclideanHasNoViolation) {
  const auto t = uniform_table(200);
  const auto rep = check_triangle(t, 10000);
  EXPECT_LE(rep.max_violation, 1e-15);
  EXPECT_GT(rep.triples, 10000);
}

TEST(Triangle, DetectsSquaredDistance) {
  std::vector<double> pts{0.0, 0.5, 1.0};
  const auto t = make_metric_table(pts, 0.0, 1.0, [](double a, double b) { return (a - b) * (a - b); });
  EXPECT_GT(check_triangle(t, 100).max_violation, 0.4);
}

TEST(Ball, Measure) {
  const auto t = uniform_table(10);
  EXPECT_NEAR(ball_measure(t, 0, 0.0), 0.05, 1e-15);
  EXPECT_NEAR(ball_measure(t, 0, 0.25), 0.25, 1e-15);
  EXPECT_NEAR(ball_measure(t, 5, 0.1), 0.3, 1e-15);
  EXPECT_NEAR(ball_measure(t, 5, 2.0), 1.0, 1e-15);
  EXPECT_THROW(ball_measure(t, 11, 0.1), std::out_of_range);
}

TEST(EntropyIntegral, ToyOracles) {
  // Ball measure ~ u at the end point of [0, 1] with the Euclidean metric.
  const auto t = uniform_table(20000);
  const auto e1 = entropy_integral(t, 0, 0.1, 1.0);
  EXPECT_NEAR(e1.value / 0.330258509299405, 1.0, 2e-3);
  EXPECT_NEAR(e1.truncation_u, 1.0 / 20000, 1e-15);
  const auto e2 = entropy_integral(t, 0, 1.0, 0.5);
  EXPECT_NEAR(e2.value / 0.886226925452758, 1.0, 2e-3);
  EXPECT_EQ(entropy_integral(t, 0, 0.0, 1.0).value, 0.0);
}

TEST(EntropyIntegral, ExactForStepMeasure) {
  // Two points, cells of 1/2: log 2 on [0, 1), zero once the ball is T.
  const auto t = make_metric_table({0.0, 1.0}, 0.0, 1.0, [](double a, double b) { return std::abs(a - b); });
  EXPECT_NEAR(entropy_integral(t, 0, 0.5, 1.0).value, 0.5 * std::log(2.0), 1e-15);
  EXPECT_NEAR(entropy_integral(t, 0, 3.0, 1.0).value, std::log(2.0), 1e-15);
}

TEST(EntropyIntegral, MonotoneInV) {
  const auto t = uniform_table(500);
  double prev = 0.0;
  for (double v : {0.01, 0.02, 0.1, 0.3, 0.9}) {
    const double cur = entropy_integral(t, 250, v, 1.0).value;
    EXPECT_GT(cur, prev);
    prev = cur;
  }
}

TEST(Majorizing, PowerLawTablePasses) {
  const auto model = IncrementVarianceModel::power_law(1.6);
  const auto table = make_chaos_metric_table(model, 2, TestFunction::indicator(0, 1), ChaosTableSpec{0.0625, 1e-45, 257});
  EXPECT_EQ(table.size(), 257);
  EXPECT_EQ(table.points.front(), 0.0);
  EXPECT_LE(check_triangle(table, 20000).max_violation, 1e-8);
  const auto rep = check_majorizing_bound(table, 2, 0.2, log_grid(1.0 / 1024, 0.25, 5));
  EXPECT_TRUE(rep.decreasing);
  EXPECT_TRUE(rep.floor_ok);
  EXPECT_EQ(rep.status, CheckStatus::pass);
  EXPECT_GT(rep.fitted_C, 0.0);
  for (const auto& row : rep.rows) EXPECT_LE(row.sup_integral, rep.fitted_C * row.envelope * (1 + 1e-12));
  std::ostringstream os;
  rep.write_csv(os);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "v,sup_entropy_integral,envelope,fitted_C,truncation_u");
}

TEST(Majorizing, QuadraticTableIsDegenerate) {
  // d = 0 identically: every ball is all of T, so S(v) = 0.
  const auto table = make_chaos_metric_table(IncrementVarianceModel::quadratic(), 2, TestFunction::indicator(0, 1),
                                             ChaosTableSpec{0.0625, 1e-6, 17});
  EXPECT_LE(table.diameter, 1e-6);
  for (int i = 0; i < table.size(); ++i) EXPECT_EQ(entropy_integral(table, i, 0.1, 1.0).value, 0.0);
}

TEST(Majorizing, CoarseTableIsInconclusive) {
  const auto model = IncrementVarianceModel::power_law(1.6);
  const auto table = make_chaos_metric_table(model, 2, TestFunction::indicator(0, 1), ChaosTableSpec{0.0625, 1e-3, 9});
  const auto rep = check_majorizing_bound(table, 2, 0.2, log_grid(1.0 / 1024, 0.25, 5));
  EXPECT_EQ(rep.status, CheckStatus::inconclusive);
  EXPECT_STREQ(to_string(rep.status), "inconclusive");
}

TEST(Majorizing, Errors) {
  const auto t = uniform_table(10);
  EXPECT_THROW(check_majorizing_bound(t, 2, 0.2, {}), std::invalid_argument);
  EXPECT_THROW(check_majorizing_bound(t, 2, 0.2, {1.5}), std::invalid_argument);
}
