#include "wickchaos/increment_variance.hpp"
#include "wickchaos/orlicz.hpp"
#include "wickchaos/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace wickchaos;

TEST(Psi, Values) {
  EXPECT_NEAR(psi(2.0, 1.0), std::exp(1.0) - 1.0, 1e-15);
  EXPECT_EQ(psi(1.0, 0.0), 0.0);
  EXPECT_NEAR(psi(PsiFamily::infinity(), 0.0), 0.0, 1e-15);
  EXPECT_NEAR(psi(PsiFamily::infinity(), 1.0), std::exp(std::exp(1.0)) - std::exp(1.0), 1e-12);
  EXPECT_THROW(psi(2.0, -1.0), std::domain_error);
  EXPECT_THROW(PsiFamily(0.0), std::invalid_argument);
}

TEST(Psi, SmallQLinearPatch) {
  const PsiFamily f(0.5);
  EXPECT_NEAR(f.x0(), 4.0, 1e-15);
  EXPECT_NEAR(f.K(), 1.597264024732663, 1e-14);
  EXPECT_NEAR(f.psi(2.0), 2.0 * f.K(), 1e-14);
  // continuous at x0
  EXPECT_NEAR(f.psi(4.0), std::expm1(2.0), 1e-13);
  EXPECT_NEAR(f.psi(4.0 + 1e-12), f.psi(4.0), 1e-10);
  EXPECT_TRUE(std::isnan(PsiFamily(2.0).x0()));
}

TEST(Psi, InverseRoundTrip) {
  for (double q : {0.3, 0.5, 1.0, 2.0, PsiFamily::infinity()}) {
    for (double x : {0.0, 1e-3, 0.5, 2.0, 4.0, 7.5}) {
      const double y = psi(q, x);
      if (!std::isfinite(y)) continue;
      EXPECT_NEAR(psi_inv(q, y), x, 1e-12 * std::max(1.0, x)) << q << ' ' << x;
    }
  }
}

TEST(PhiQ, Values) {
  EXPECT_NEAR(phi_q(PsiFamily(1.0), std::exp(1.0) - 1.0), 1.0, 1e-15);
  EXPECT_NEAR(phi_q(PsiFamily(2.0), 3.0), std::sqrt(std::log(4.0)), 1e-15);
  EXPECT_NEAR(phi_q(PsiFamily(PsiFamily::infinity()), 0.0), 0.0, 1e-15);
  EXPECT_THROW(phi_q(PsiFamily(0.5), 1.0), std::logic_error);
  EXPECT_NEAR(phi_q(PsiFamily(0.5).with_G(1.0), std::exp(1.0) - 1.0), 4.0, 1e-14);
}

TEST(LambdaQ, InvertsDerivative) {
  const PsiFamily f(0.5);
  EXPECT_EQ(lambda_q(0.5, 0.5 * f.K()), 0.0);
  EXPECT_EQ(lambda_q(0.5, f.K()), f.x0());
  for (double x : {5.0, 20.0, 100.0, 1e4}) {
    EXPECT_NEAR(lambda_q(0.5, f.dpsi(x)), x, 1e-9 * x);
  }
  EXPECT_THROW(lambda_q(1.0, 1.0), std::invalid_argument);
}

TEST(FindGq, SatisfiesDefiningInequality) {
  for (double q : {0.3, 0.5, 0.8}) {
    const auto fam = make_psi_family(q);
    ASSERT_TRUE(fam.has_G());
    const double G = fam.G();
    EXPECT_GT(G, 0.0);
    EXPECT_LT(G, fam.K() / (std::exp(1.0 / (2.0 * q)) - 1.0) * (1.0 + 1e-12));
    for (double y : log_grid(1e-3, 1e8, 500)) {
      EXPECT_LE(lambda_q(q, y), std::pow(2.0 * std::log1p(y / G), 1.0 / q) * (1.0 + 1e-9)) << q << ' ' << y;
    }
  }
  EXPECT_NEAR(make_psi_family(0.5).G(), 0.929570, 1e-5);
  EXPECT_THROW(find_Gq(1.0), std::invalid_argument);
}

TEST(Young, Passes) {
  const auto grid = log_grid(1e-4, 50.0, 101);
  for (double q : {0.3, 0.5, 1.0, 2.0, PsiFamily::infinity()}) {
    const auto rep = young_check(make_psi_family(q), grid, grid);
    EXPECT_TRUE(rep.pass) << q << ' ' << rep.max_violation;
  }
  EXPECT_THROW(young_check(PsiFamily(0.5), grid, grid), std::logic_error);
}

TEST(Young, DetectsBadConstant) {
  // An oversized G makes Phi_q too small for the inequality.
  const auto grid = log_grid(1e-3, 50.0, 101);
  const auto rep = young_check(PsiFamily(0.5).with_G(1e3), grid, grid);
  EXPECT_FALSE(rep.pass);
}

TEST(Convexity, AllFamilies) {
  std::vector<double> grid{0.0};
  for (double x : log_grid(1e-6, 100.0, 400)) grid.push_back(x);
  for (double q : {0.3, 0.5, 1.0, 2.0, PsiFamily::infinity()}) EXPECT_LE(psi_convexity_violation(PsiFamily(q), grid), 1e-12) << q;
  // exp(x^q) - 1 without the linear patch is concave near the origin.
  std::vector<double> near{0.0, 0.01, 0.02, 0.03};
  EXPECT_EQ(psi_convexity_violation(PsiFamily(2.0), near), 0.0);
}

TEST(OrliczNorm, Gaussian) {
  Philox4x32 rng(123);
  std::normal_distribution<double> normal;
  std::vector<double> xs(200000);
  for (auto& x : xs) x = normal(rng);
  EXPECT_NEAR(orlicz_norm_empirical(xs, 2.0) / std::sqrt(8.0 / 3.0), 1.0, 0.02);
  std::vector<double> zeros(1000, 0.0);
  EXPECT_EQ(orlicz_norm_empirical(zeros, 2.0), 0.0);
  std::vector<double> few(10, 1.0);
  EXPECT_THROW(orlicz_norm_empirical(few, 2.0), std::invalid_argument);
}

TEST(OrliczNorm, ConstantSample) {
  // |xi| = 1: mean psi_1(1/c) = e^{1/c} - 1 = 1 at c = 1/log 2.
  std::vector<double> ones(1000, 1.0);
  EXPECT_NEAR(orlicz_norm_empirical(ones, 1.0), 1.442695040888963, 1e-9);
  EXPECT_NEAR(orlicz_norm_empirical(ones, 2.0), 1.201122408786450, 1e-9);
}
