#include "wickchaos/experiment_config.hpp"
#include "wickchaos/experiments.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace wickchaos;

TEST(Config, DefaultsFromEmptyObject) {
  const auto c = parse_config("{}");
  EXPECT_EQ(c.model.kind, "power_law");
  EXPECT_EQ(c.k, 2);
  EXPECT_EQ(c.n, 4608);
  EXPECT_NO_THROW(c.validate());
  EXPECT_TRUE(std::isinf(c.orlicz.q.back()));
}

TEST(Config, RoundTrip) {
  auto c = parse_config(R"({"model": {"kind": "power_law", "r": 1.75}, "k": 3, "seed": 5,
                            "h": [0.03125], "q": [0.5, "inf"]})");
  EXPECT_EQ(c.model.r, 1.75);
  EXPECT_EQ(c.k, 3);
  EXPECT_EQ(c.seed, 5u);
  ASSERT_EQ(c.orlicz.q.size(), 2u);
  EXPECT_TRUE(std::isinf(c.orlicz.q[1]));
  const auto again = parse_config(to_json(c));
  EXPECT_EQ(to_json(again), to_json(c));
  EXPECT_EQ(again.h, c.h);
  EXPECT_EQ(again.convergence.h, c.convergence.h);
}

TEST(Config, Validation) {
  EXPECT_THROW(parse_config(R"({"model": {"kind": "cubic"}})").model.build(), std::invalid_argument);
  EXPECT_THROW(parse_config(R"({"h": [0.01]})").validate(), std::invalid_argument);
  EXPECT_THROW(parse_config(R"({"h": [0.25]})").validate(), std::invalid_argument);
  EXPECT_THROW(parse_config(R"({"q": ["two"]})"), std::invalid_argument);
  EXPECT_THROW(parse_config("not json"), std::exception);
  EXPECT_THROW(load_config("/nonexistent/config.json"), std::runtime_error);
}

TEST(Config, ModelBuild) {
  EXPECT_EQ(parse_config(R"({"model": {"kind": "quadratic"}})").model.build().kind(), ModelKind::quadratic);
  EXPECT_EQ(parse_config(R"({"model": {"kind": "linear"}})").model.build().kind(), ModelKind::linear);
}

TEST(Summary, Statistics) {
  const auto s = summarize({1.0, 2.0, 3.0, 4.0});
  EXPECT_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.variance, 5.0 / 3.0, 1e-15);
  EXPECT_NEAR(s.mean_stderr, std::sqrt(5.0 / 12.0), 1e-15);
  EXPECT_EQ(s.count, 4);
  EXPECT_EQ(median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
}

TEST(Summary, Combine) {
  EXPECT_EQ(combine(CheckStatus::pass, CheckStatus::inconclusive), CheckStatus::inconclusive);
  EXPECT_EQ(combine(CheckStatus::fail, CheckStatus::inconclusive), CheckStatus::fail);
  EXPECT_EQ(combine(CheckStatus::pass, CheckStatus::pass), CheckStatus::pass);
}

TEST(Expansion, Coefficients) {
  ExpansionSpec sq;
  sq.f = "square";
  const auto c = expansion_coefficients(sq, 4);
  EXPECT_NEAR(c[0], 1.0, 1e-12);
  EXPECT_NEAR(c[1], 0.0, 1e-12);
  EXPECT_NEAR(c[2], std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(c[4], 0.0, 1e-12);
  ExpansionSpec ab;
  ab.f = "abs";
  const auto a = expansion_coefficients(ab, 2);
  EXPECT_NEAR(a[0], std::sqrt(2.0 / M_PI), 1e-14);
  EXPECT_NEAR(a[2], std::sqrt(2.0 / M_PI) / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(expansion_correlation(sq, 0.5), 1.0 + 2.0 * 0.25, 1e-12);
  EXPECT_NEAR(expansion_correlation(ab, 1.0), 1.0, 1e-12);
}
