#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

namespace wickchaos {

/// Fixed quadrature rule: sum_i weights[i] * f(nodes[i]).
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// n-point Gauss-Hermite rule for the standard normal law: the weights sum
/// to one and sum_i w_i p(x_i) = E p(eta) for polynomials of degree < 2n.
QuadratureRule gauss_hermite_normal(int n);

/// Process-wide cached rules (thread-safe initialization).
const QuadratureRule& cached_gauss_legendre(int n);
const QuadratureRule& cached_gauss_hermite_normal(int n);

/// Settings for composite Gauss-Legendre integration on geometrically graded
/// panels.
struct GradedQuadrature {
  int order = 12;
  /// Ratio between consecutive panel widths when approaching a graded end.
  double grading = 0.25;
  /// Innermost panel width relative to the half-segment it refines.
  double kink_resolution = 1e-6;
  /// Innermost panel width relative to the distance of the graded end from
  /// the origin (resolves features living at the scale of that distance).
  double scale_resolution = 0.25;
};

namespace detail {

template <class F>
double gauss_panel(F& f, double a, double b, const QuadratureRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

inline int grading_levels(double length, double anchor_scale, const GradedQuadrature& opts) {
  double target = opts.kink_resolution * length;
  if (anchor_scale > 0.0) target = std::min(target, opts.scale_resolution * anchor_scale);
  int levels = 0;
  double width = length;
  while (width > target && levels < 400) {
    width *= opts.grading;
    ++levels;
  }
  return levels;
}

}  // namespace detail

/// Integrates f over [a, b] with panels refined geometrically toward both
/// endpoints, which may carry kinks or integrable endpoint singularities.
template <class F>
double integrate_graded(F&& f, double a, double b, const GradedQuadrature& opts = {}) {
  if (!(b > a)) return 0.0;
  const auto& rule = cached_gauss_legendre(opts.order);
  const double mid = 0.5 * (a + b);
  const double half = mid - a;
  double total = 0.0;

  // Left half, refined toward a.
  {
    const int levels = detail::grading_levels(half, std::abs(a), opts);
    double outer = mid;
    double width = half;
    for (int j = 0; j < levels; ++j) {
      width *= opts.grading;
      const double inner = a + width;
      total += detail::gauss_panel(f, inner, outer, rule);
      outer = inner;
    }
    total += detail::gauss_panel(f, a, outer, rule);
  }
  // Right half, refined toward b.
  {
    const int levels = detail::grading_levels(half, std::abs(b), opts);
    double outer = mid;
    double width = half;
    for (int j = 0; j < levels; ++j) {
      width *= opts.grading;
      const double inner = b - width;
      total += detail::gauss_panel(f, outer, inner, rule);
      outer = inner;
    }
    total += detail::gauss_panel(f, outer, b, rule);
  }
  return total;
}

/// Integrates f over [lo, hi] for integrands that are smooth except at the
/// given breakpoints and possibly behave like |z|^(1/power - 1) at z = 0.
///
/// Each side of the origin is mapped by z = +-u^power, which removes the
/// singularity at z = 0 when power = 1 / (1 - alpha) for an |z|^-alpha
/// integrand; every mapped segment is then integrated by integrate_graded.
template <class F>
double integrate_piecewise(F&& f, std::vector<double> breakpoints, double lo, double hi,
                           double power = 1.0, const GradedQuadrature& opts = {}) {
  if (!(hi > lo)) return 0.0;
  const double inv = 1.0 / power;
  auto side = [&](double z_from, double z_to, double sign) {
    // z_from, z_to >= 0 are distances from the origin, z_from < z_to.
    std::vector<double> cuts{std::pow(z_from, inv), std::pow(z_to, inv)};
    for (double c : breakpoints) {
      const double dist = sign * c;
      if (dist > z_from && dist < z_to) cuts.push_back(std::pow(dist, inv));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto mapped = [&](double u) {
      const double up = std::pow(u, power - 1.0);
      return f(sign * up * u) * power * up;
    };
    auto identity = [&](double u) { return f(sign * u); };
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (power == 1.0) {
        sum += integrate_graded(identity, cuts[i], cuts[i + 1], opts);
      } else {
        sum += integrate_graded(mapped, cuts[i], cuts[i + 1], opts);
      }
    }
    return sum;
  };
  double total = 0.0;
  if (hi > 0.0) total += side(std::max(lo, 0.0), hi, 1.0);
  if (lo < 0.0) total += side(std::max(-hi, 0.0), -lo, -1.0);
  return total;
}

}  // namespace wickchaos
