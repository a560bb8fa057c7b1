#pragma once

#include <vector>

namespace wickchaos {

/// Right-continuous step function with compact support:
///   g(x) = levels[i] for breakpoints[i] <= x < breakpoints[i+1], 0 outside.
class TestFunction {
 public:
  TestFunction() = default;
  TestFunction(std::vector<double> breakpoints, std::vector<double> levels);

  /// 1_{[a, b)}; the endpoint convention is immaterial for every integral.
  static TestFunction indicator(double a, double b);

  double operator()(double x) const;
  bool is_zero() const;
  double support_lo() const;
  double support_hi() const;
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& levels() const { return levels_; }
  /// True for a single-level indicator of an interval.
  bool is_indicator() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> levels_;
};

/// Cross-correlation W(z) = int g(y + z) g~(y) dy of two step functions, so
/// that  int int F(x - y) g(x) g~(y) dx dy = int F(z) W(z) dz.
/// W is continuous and piecewise linear with knots at the differences of the
/// breakpoints.
class CorrelationWeight {
 public:
  CorrelationWeight(const TestFunction& g, const TestFunction& g_tilde);

  double operator()(double z) const;
  const std::vector<double>& knots() const { return knots_; }
  double lo() const { return knots_.empty() ? 0.0 : knots_.front(); }
  double hi() const { return knots_.empty() ? 0.0 : knots_.back(); }
  bool is_zero() const { return knots_.empty(); }
  /// True when W vanishes on a neighbourhood of z = 0.
  bool vanishes_near_origin() const;

 private:
  TestFunction g_;
  TestFunction gt_;
  std::vector<double> knots_;
};

}  // namespace wickchaos
