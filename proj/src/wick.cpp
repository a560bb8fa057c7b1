#include "wickchaos/wick.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace wickchaos {

namespace {

// C(k, 2j) (2j-1)!! as exact integers; the largest entry (k = 20) is
// about 1.2e14, well inside int64.
const std::array<std::array<std::int64_t, kMaxWickOrder / 2 + 1>, kMaxWickOrder + 1>& wick_table() {
  static const auto table = [] {
    std::array<std::array<std::int64_t, kMaxWickOrder / 2 + 1>, kMaxWickOrder + 1> t{};
    std::int64_t binom[kMaxWickOrder + 1][kMaxWickOrder + 1] = {};
    for (int n = 0; n <= kMaxWickOrder; ++n) {
      binom[n][0] = binom[n][n] = 1;
      for (int i = 1; i < n; ++i) binom[n][i] = binom[n - 1][i - 1] + binom[n - 1][i];
    }
    for (int k = 0; k <= kMaxWickOrder; ++k) {
      std::int64_t dfact = 1;
      for (int j = 0; 2 * j <= k; ++j) {
        if (j > 0) dfact *= 2 * j - 1;
        t[k][j] = binom[k][2 * j] * dfact;
      }
    }
    return t;
  }();
  return table;
}

void check_order(int k) {
  if (k < 0 || k > kMaxWickOrder) throw std::invalid_argument("Wick order must lie in [0, 20]");
}

}  // namespace

double hermite_orthonormal(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite_orthonormal: k must be nonnegative");
  double prev = 0.0;
  double cur = 1.0;
  for (int n = 0; n < k; ++n) {
    const double next = (x * cur - std::sqrt(static_cast<double>(n)) * prev) / std::sqrt(n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double gaussian_even_moment(int order, double variance) {
  if (order < 0 || order % 2 != 0) throw std::invalid_argument("gaussian_even_moment: order must be even");
  double m = 1.0;
  for (int i = 1; i < order; i += 2) m *= i * variance;
  return m;
}

double wick_power(int k, double x, double variance) {
  return WickContext(k, variance)(x);
}

double wick_cross_moment(int k, int j, double covariance) {
  if (k != j) return 0.0;
  check_order(k);
  return std::tgamma(k + 1.0) * std::pow(covariance, k);
}

WickContext::WickContext(int order, double variance) : order_(order), variance_(variance) {
  check_order(order);
  if (variance < 0.0) throw std::invalid_argument("wick_power: variance must be nonnegative");
  const auto& table = wick_table()[order];
  double vpow = 1.0;
  for (int j = 0; 2 * j <= order; ++j) {
    coeff_[j] = (j % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(table[j]) * vpow;
    vpow *= variance;
  }
}

double WickContext::operator()(double x) const {
  // Horner in x^2, starting from the x^k term.
  const double x2 = x * x;
  double acc = 0.0;
  for (int j = 0; 2 * j <= order_; ++j) acc = acc * x2 + coeff_[j];
  return order_ % 2 == 0 ? acc : acc * x;
}

}  // namespace wickchaos
