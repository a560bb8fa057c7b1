#pragma once

namespace wickchaos {

/// Largest supported Wick/Hermite order.
inline constexpr int kMaxWickOrder = 20;

/// Orthonormal Hermite polynomial H_k: E H_j(eta) H_k(eta) = [j == k] for a
/// standard normal eta.  Computed by the normalized three-term recurrence.
double hermite_orthonormal(int k, double x);

/// E X^{2j} = (2j-1)!! var^j for X ~ N(0, var). Takes the even order 2j.
double gaussian_even_moment(int order, double variance);

/// :x^k: relative to variance var,
///   sum_j (-1)^j C(k, 2j) E(X^{2j}) x^{k-2j}.
/// var = 0 gives x^k. Throws for negative variance or k outside [0, 20].
double wick_power(int k, double x, double variance);

/// E(:X^k: :Y^j:) = k! (E XY)^k [k == j].
double wick_cross_moment(int k, int j, double covariance);

/// Fixed (order, variance) pair for repeated evaluation of :x^k:.
class WickContext {
 public:
  WickContext(int order, double variance);

  int order() const { return order_; }
  double variance() const { return variance_; }
  double operator()(double x) const;

 private:
  int order_;
  double variance_;
  double coeff_[kMaxWickOrder / 2 + 1];
};

}  // namespace wickchaos
