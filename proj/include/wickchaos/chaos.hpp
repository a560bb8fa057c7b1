#pragma once

#include "wickchaos/increment_variance.hpp"
#include "wickchaos/path_sampler.hpp"
#include "wickchaos/quadrature.hpp"
#include "wickchaos/step_function.hpp"

#include <cstdint>
#include <vector>

namespace wickchaos {

/// One evaluation of  int :((G(x+h) - G(x))/h)^k: g(x) dx  on a sampled path.
struct ChaosEstimate {
  double h = 0.0;
  int k = 0;
  double value = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  double step = 0.0;
};

/// Left Riemann sum over the path grid; the Wick power is taken relative to
/// the exact variance sigma^2(h)/h^2 of the difference quotient.
/// Throws std::invalid_argument if h is not a multiple of the grid step or if
/// supp g + h leaves the sampled range.
ChaosEstimate chaos_functional(const GaussianPath& path, double h, int k, const TestFunction& g,
                               const IncrementVarianceModel& model);

/// Same as chaos_functional for several h at once (one pass per h, shared
/// validation); values in the order of hs.
std::vector<double> chaos_functional_values(const GaussianPath& path, const std::vector<double>& hs,
                                            int k, const TestFunction& g,
                                            const IncrementVarianceModel& model);

/// k! int int rho(x - y)^k g(x) g~(y) dx dy.  Throws std::domain_error when
/// rho^k is not locally integrable near a point where the weight is nonzero.
double limit_second_moment(int k, const TestFunction& g, const TestFunction& g_tilde,
                           const IncrementVarianceModel& model, const GradedQuadrature& opts = {});

/// k! int int B_{x-y}(h, h')^k g(x) g~(y) dx dy for h, h' >= 0; a zero
/// argument uses the one-sided limit of B and h = h' = 0 reduces to
/// limit_second_moment.
double cross_second_moment(int k, const TestFunction& g, const TestFunction& g_tilde, double h,
                           double h_prime, const IncrementVarianceModel& model,
                           const GradedQuadrature& opts = {});

/// d(h, h')^2 = E(:X_h^k:(g) - :X_h'^k:(g))^2 from one combined integrand
/// (no subtraction of separately computed moments).  Radicands in
/// [-1e-10, 0) are clamped to 0, anything below throws std::runtime_error.
double metric_d_squared(double h, double h_prime, int k, const TestFunction& g,
                        const IncrementVarianceModel& model, const GradedQuadrature& opts = {});
double metric_d(double h, double h_prime, int k, const TestFunction& g,
                const IncrementVarianceModel& model, const GradedQuadrature& opts = {});

/// h^{delta/2}, the constant-free L2 rate envelope for d(h, 0).
double bound_lemma_calc(double h, int k, const IncrementVarianceModel& model);

/// (|h - h'| / (h h'))^{1/2}. Throws for h <= 0 or h' <= 0.
double bound_lemma_41(double h, double h_prime);

/// Power-law d(h, h') for g = indicator of an interval of length L, by
/// scaling: the metric integrand is homogeneous in (z, h, h'), so its
/// full-line moments are computed once per ratio t = min/max and combined
/// with an exact series for the part of the line outside [-L, L].
class ScaledIndicatorMetric {
 public:
  struct Profile {
    double t = 0.0;
    double zeroth = 0.0;
    double first = 0.0;
    /// Far-field coefficients of the integrand for (1, t) on z > 0 and z < 0.
    std::vector<double> far_plus;
    std::vector<double> far_minus;
  };

  ScaledIndicatorMetric(const IncrementVarianceModel& model, int k, double length,
                        const GradedQuadrature& opts = {});

  /// Full-line moments for the pair (1, t), 0 <= t <= 1.
  Profile profile(double t) const;
  /// d^2 for the pair (h, h') whose ratio min/max has the given profile.
  /// Requires 8 max(h, h') <= L.
  double d_squared(double h, double h_prime, const Profile& profile) const;
  double d_squared(double h, double h_prime) const { return d_squared(h, h_prime, profile(ratio(h, h_prime))); }

  static double ratio(double h, double h_prime);

 private:
  IncrementVarianceModel model_;
  int k_;
  double length_;
  GradedQuadrature opts_;
};

}  // namespace wickchaos
