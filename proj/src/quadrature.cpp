#include "wickchaos/quadrature.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace wickchaos {

namespace {

double legendre_with_derivative(int n, double x, double& derivative) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  derivative = n * (x * p1 - p0) / (x * x - 1.0);
  return p1;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  QuadratureRule rule{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }
  for (int i = 0; i < n; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      const double p = legendre_with_derivative(n, x, dp);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    legendre_with_derivative(n, x, dp);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

QuadratureRule gauss_hermite_normal(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite_normal: n must be positive");
  // Golub-Welsch on the Jacobi matrix of the probabilists' Hermite family.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    jacobi(i, i - 1) = std::sqrt(static_cast<double>(i));
    jacobi(i - 1, i) = jacobi(i, i - 1);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  QuadratureRule rule{solver.eigenvalues(), Eigen::VectorXd(n)};
  // Polish each node with Newton on the orthonormal recurrence, then take the
  // Christoffel weights 1 / sum_j H_j(x)^2, which keep full relative accuracy.
  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    for (int it = 0; it < 3; ++it) {
      double hm1 = 0.0;
      double h = 1.0;
      for (int k = 0; k < n; ++k) {
        const double next = (x * h - std::sqrt(static_cast<double>(k)) * hm1) / std::sqrt(k + 1.0);
        hm1 = h;
        h = next;
      }
      // h = H_n(x), hm1 = H_{n-1}(x); H_n' = sqrt(n) H_{n-1}.
      const double dh = std::sqrt(static_cast<double>(n)) * hm1;
      if (dh == 0.0) break;
      x -= h / dh;
    }
    rule.nodes[i] = x;
    double hm1 = 0.0;
    double h = 1.0;
    double sum = 1.0;
    for (int k = 0; k + 1 < n; ++k) {
      const double next = (x * h - std::sqrt(static_cast<double>(k)) * hm1) / std::sqrt(k + 1.0);
      hm1 = h;
      h = next;
      sum += h * h;
    }
    rule.weights[i] = 1.0 / sum;
  }
  return rule;
}

namespace {

template <QuadratureRule (*Make)(int)>
const QuadratureRule& cached(int n) {
  static std::mutex mutex;
  static std::map<int, QuadratureRule> rules;
  std::scoped_lock lock(mutex);
  auto it = rules.find(n);
  if (it == rules.end()) it = rules.emplace(n, Make(n)).first;
  return it->second;
}

}  // namespace

const QuadratureRule& cached_gauss_legendre(int n) { return cached<gauss_legendre>(n); }

const QuadratureRule& cached_gauss_hermite_normal(int n) {
  return cached<gauss_hermite_normal>(n);
}

}  // namespace wickchaos
