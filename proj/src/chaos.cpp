#include "wickchaos/chaos.hpp"

#include "wickchaos/wick.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wickchaos {

namespace {

double int_power(double x, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

double factorial(int k) { return std::tgamma(k + 1.0); }

// Exponent delta_k = 1 - k(2 - r) of the rho^k singularity; substitution
// power 1/delta_k removes it.
double singular_power(const IncrementVarianceModel& model, int k) {
  const double dk = 1.0 - k * (2.0 - model.exponent());
  if (!(dk > 0.0)) throw std::domain_error("rho^k is not locally integrable at the origin");
  return 1.0 / dk;
}

std::vector<double> kernel_breakpoints(const CorrelationWeight& w, double h, double hp) {
  std::vector<double> b = w.knots();
  for (double c : {0.0, h, -h, hp, -hp, h - hp, hp - h}) b.push_back(c);
  return b;
}

template <class F>
double integrate_against(F&& f, const CorrelationWeight& w, double h, double hp, double power,
                         const GradedQuadrature& opts) {
  auto integrand = [&](double z) { return f(z) * w(z); };
  return integrate_piecewise(integrand, kernel_breakpoints(w, h, hp), w.lo(), w.hi(), power, opts);
}

void check_k(int k) {
  if (k < 1 || k > kMaxWickOrder) throw std::invalid_argument("chaos order k must lie in [1, 20]");
}

int steps_for(double h, double step) {
  const double ratio = h / step;
  const long m = std::lround(ratio);
  if (m < 1 || std::abs(ratio - m) > 1e-9 * ratio) {
    throw std::invalid_argument("h must be a positive integer multiple of the grid step");
  }
  return static_cast<int>(m);
}

// Coefficients b_n with B_z(h, h') = rho(|z|) sum_n b_n |z|^{-n} for
// |z| >= 8 max(h, h'), sign s = sign(z).
std::vector<double> far_series(double r, double s, double h, double hp, int terms) {
  std::vector<double> hpow(terms + 1, 1.0);
  std::vector<double> qpow(terms + 1, 1.0);
  for (int i = 1; i <= terms; ++i) {
    hpow[i] = hpow[i - 1] * h;
    qpow[i] = qpow[i - 1] * (-hp);
  }
  std::vector<double> b(terms + 1, 0.0);
  b[0] = 1.0;
  double binom_r = 1.0;
  double sign_power = 1.0;
  for (int n = 1; n <= terms; ++n) {
    binom_r *= (r - 2.0 - (n - 1)) / n;
    sign_power *= s;
    double moment = 0.0;
    double binom_n = 1.0;
    for (int i = 0; i <= n; ++i) {
      moment += binom_n * hpow[i] * qpow[n - i] / ((i + 1.0) * (n - i + 1.0));
      binom_n = binom_n * (n - i) / (i + 1.0);
    }
    b[n] = binom_r * sign_power * moment;
  }
  return b;
}

std::vector<double> series_power(const std::vector<double>& b, int k) {
  std::vector<double> out(b.size(), 0.0);
  out[0] = 1.0;
  for (int p = 0; p < k; ++p) {
    std::vector<double> next(b.size(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (out[i] == 0.0) continue;
      for (std::size_t j = 0; i + j < b.size(); ++j) next[i + j] += out[i] * b[j];
    }
    out = std::move(next);
  }
  return out;
}

constexpr int kTailTerms = 40;

// f_n with  F(z) = B(h,h)^k - B(h,h')^k - B(h',h)^k + B(h',h')^k
//                = rho(|z|)^k sum_n f_n |z|^{-n}  on one side of the origin.
std::vector<double> metric_far_series(double r, int k, double s, double h, double hp) {
  const auto a = series_power(far_series(r, s, h, h, kTailTerms), k);
  const auto b = series_power(far_series(r, s, h, hp, kTailTerms), k);
  const auto c = series_power(far_series(r, s, hp, h, kTailTerms), k);
  const auto d = series_power(far_series(r, s, hp, hp, kTailTerms), k);
  std::vector<double> f(kTailTerms + 1);
  for (int n = 0; n <= kTailTerms; ++n) f[n] = a[n] - b[n] - c[n] + d[n];
  return f;
}

}  // namespace

ChaosEstimate chaos_functional(const GaussianPath& path, double h, int k, const TestFunction& g,
                               const IncrementVarianceModel& model) {
  const auto values = chaos_functional_values(path, {h}, k, g, model);
  return {h, k, values.front(), path.seed, path.stream, path.grid.step};
}

std::vector<double> chaos_functional_values(const GaussianPath& path, const std::vector<double>& hs,
                                            int k, const TestFunction& g,
                                            const IncrementVarianceModel& model) {
  check_k(k);
  const SampleGrid& grid = path.grid;
  const double step = grid.step;
  std::vector<double> out;
  out.reserve(hs.size());
  if (g.is_zero()) {
    out.assign(hs.size(), 0.0);
    return out;
  }
  if (g.support_lo() < 0.0) throw std::invalid_argument("chaos_functional: support of g must be in [0, inf)");
  const int first = static_cast<int>(std::ceil(g.support_lo() / step - 1e-9));
  const int last = static_cast<int>(std::ceil(g.support_hi() / step - 1e-9)) - 1;
  std::vector<double> weights(last - first + 1);
  for (int i = first; i <= last; ++i) weights[i - first] = g(grid.x(i));
  for (double h : hs) {
    const int m = steps_for(h, step);
    if (last + m > grid.count) {
      throw std::invalid_argument("chaos_functional: support of g plus h exceeds the sampled range");
    }
    const WickContext wick(k, model.sigma2(h) / (h * h));
    const double inv_h = 1.0 / h;
    double sum = 0.0;
    for (int i = first; i <= last; ++i) {
      const double w = weights[i - first];
      if (w == 0.0) continue;
      sum += w * wick((path.values[i + m] - path.values[i]) * inv_h);
    }
    out.push_back(sum * step);
  }
  return out;
}

double limit_second_moment(int k, const TestFunction& g, const TestFunction& g_tilde,
                           const IncrementVarianceModel& model, const GradedQuadrature& opts) {
  check_k(k);
  const CorrelationWeight w(g, g_tilde);
  if (w.is_zero()) return 0.0;
  switch (model.kind()) {
    case ModelKind::quadratic:
      return factorial(k) * integrate_against([](double) { return 1.0; }, w, 0.0, 0.0, 1.0, opts);
    case ModelKind::linear:
      // rho is the unit point mass at the origin.
      if (k == 1) return w(0.0);
      if (w.vanishes_near_origin()) return 0.0;
      throw std::domain_error("rho^k is not integrable for the linear model when k >= 2");
    case ModelKind::power_law: {
      const double power = singular_power(model, k);
      auto f = [&](double z) { return int_power(model.rho(z), k); };
      return factorial(k) * integrate_against(f, w, 0.0, 0.0, power, opts);
    }
  }
  return 0.0;
}

double cross_second_moment(int k, const TestFunction& g, const TestFunction& g_tilde, double h,
                           double h_prime, const IncrementVarianceModel& model,
                           const GradedQuadrature& opts) {
  check_k(k);
  if (h < 0.0 || h_prime < 0.0) throw std::invalid_argument("cross_second_moment: need h, h' >= 0");
  if (h == 0.0 && h_prime == 0.0) return limit_second_moment(k, g, g_tilde, model, opts);
  const CorrelationWeight w(g, g_tilde);
  if (w.is_zero()) return 0.0;
  auto f = [&](double z) { return int_power(averaged_kernel(model, z, h, h_prime), k); };
  return factorial(k) * integrate_against(f, w, h, h_prime, 1.0, opts);
}

double metric_d_squared(double h, double h_prime, int k, const TestFunction& g,
                        const IncrementVarianceModel& model, const GradedQuadrature& opts) {
  check_k(k);
  if (h < 0.0 || h_prime < 0.0) throw std::invalid_argument("metric_d: need h, h' >= 0");
  if (h == h_prime) return 0.0;
  const CorrelationWeight w(g, g);
  if (w.is_zero()) return 0.0;
  const bool has_origin_term = h == 0.0 || h_prime == 0.0;
  const bool point_mass = has_origin_term && model.kind() == ModelKind::linear;
  double power = 1.0;
  if (has_origin_term && model.kind() == ModelKind::power_law) power = singular_power(model, k);

  auto term = [&](double z, double a, double b) {
    if (a == 0.0 && b == 0.0 && point_mass) return 0.0;
    return int_power(averaged_kernel(model, z, a, b), k);
  };
  auto f = [&](double z) {
    return term(z, h, h) - term(z, h, h_prime) - term(z, h_prime, h) + term(z, h_prime, h_prime);
  };
  double d2 = factorial(k) * integrate_against(f, w, h, h_prime, power, opts);
  if (point_mass) d2 += limit_second_moment(k, g, g, model, opts);
  if (d2 < 0.0) {
    if (d2 < -1e-10) throw std::runtime_error("metric_d: negative radicand beyond quadrature tolerance");
    d2 = 0.0;
  }
  return d2;
}

double metric_d(double h, double h_prime, int k, const TestFunction& g,
                const IncrementVarianceModel& model, const GradedQuadrature& opts) {
  return std::sqrt(metric_d_squared(h, h_prime, k, g, model, opts));
}

double bound_lemma_calc(double h, int k, const IncrementVarianceModel& model) {
  const double delta = delta_of(model, k).delta;
  return std::pow(h, 0.5 * delta);
}

double bound_lemma_41(double h, double h_prime) {
  if (!(h > 0.0) || !(h_prime > 0.0)) throw std::invalid_argument("bound_lemma_41: need h, h' > 0");
  return std::sqrt(std::abs(h - h_prime) / (h * h_prime));
}

ScaledIndicatorMetric::ScaledIndicatorMetric(const IncrementVarianceModel& model, int k,
                                             double length, const GradedQuadrature& opts)
    : model_(model), k_(k), length_(length), opts_(opts) {
  check_k(k);
  if (model.kind() != ModelKind::power_law) {
    throw std::invalid_argument("ScaledIndicatorMetric: power_law model required");
  }
  if (!(length > 0.0)) throw std::invalid_argument("ScaledIndicatorMetric: length must be positive");
  singular_power(model, k);
}

double ScaledIndicatorMetric::ratio(double h, double h_prime) {
  const double hi = std::max(h, h_prime);
  return hi > 0.0 ? std::min(h, h_prime) / hi : 1.0;
}

ScaledIndicatorMetric::Profile ScaledIndicatorMetric::profile(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("ScaledIndicatorMetric: ratio outside [0, 1]");
  Profile p;
  p.t = t;
  p.far_plus.assign(kTailTerms + 1, 0.0);
  p.far_minus.assign(kTailTerms + 1, 0.0);
  if (t == 1.0) return p;
  const double r = model_.exponent();
  const double a = k_ * (r - 2.0);
  const double cut = 16.0;
  const double power = t == 0.0 ? singular_power(model_, k_) : 1.0;
  auto f = [&](double z) {
    auto term = [&](double x, double y) { return int_power(averaged_kernel(model_, z, x, y), k_); };
    return term(1.0, 1.0) - term(1.0, t) - term(t, 1.0) + term(t, t);
  };
  const std::vector<double> breaks{0.0, 1.0, -1.0, t, -t, 1.0 - t, t - 1.0};
  p.zeroth = integrate_piecewise(f, breaks, -cut, cut, power, opts_);
  p.first = integrate_piecewise([&](double z) { return std::abs(z) * f(z); }, breaks, -cut, cut, power, opts_);
  const double ck = int_power(0.5 * r * (r - 1.0), k_);
  p.far_plus = metric_far_series(r, k_, 1.0, 1.0, t);
  p.far_minus = metric_far_series(r, k_, -1.0, 1.0, t);
  for (const auto* fn : {&p.far_plus, &p.far_minus}) {
    for (int n = 2; n <= kTailTerms; ++n) {
      p.zeroth += ck * (*fn)[n] * std::pow(cut, a - n + 1.0) / (n - a - 1.0);
      p.first += ck * (*fn)[n] * std::pow(cut, a - n + 2.0) / (n - a - 2.0);
    }
  }
  return p;
}

double ScaledIndicatorMetric::d_squared(double h, double h_prime, const Profile& profile) const {
  if (h < 0.0 || h_prime < 0.0) throw std::invalid_argument("ScaledIndicatorMetric: need h, h' >= 0");
  const double s = std::max(h, h_prime);
  if (s == 0.0 || h == h_prime) return 0.0;
  if (8.0 * s > length_) throw std::invalid_argument("ScaledIndicatorMetric: need 8 max(h, h') <= L");
  const double r = model_.exponent();
  const double a = k_ * (r - 2.0);
  const double L = length_;
  double d2 = L * std::pow(s, a + 1.0) * profile.zeroth - std::pow(s, a + 2.0) * profile.first;
  // Remove the part of the full-line integral outside the support [-L, L]
  // of the weight L - |z|.
  const double ck = int_power(0.5 * r * (r - 1.0), k_);
  // f_n is homogeneous of degree n in (h, h') and symmetric under the swap.
  double tail = 0.0;
  double scaled = 1.0;
  for (int n = 1; n <= kTailTerms; ++n) {
    scaled *= s / L;
    if (n < 2) continue;
    const double weight = scaled * (1.0 / (n - a - 1.0) - 1.0 / (n - a - 2.0));
    tail += (profile.far_plus[n] + profile.far_minus[n]) * weight;
  }
  d2 -= ck * std::pow(L, a + 2.0) * tail;
  d2 *= factorial(k_);
  if (d2 < 0.0) {
    if (d2 < -1e-10) throw std::runtime_error("metric_d: negative radicand beyond quadrature tolerance");
    d2 = 0.0;
  }
  return d2;
}

}  // namespace wickchaos
