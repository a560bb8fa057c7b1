#include "wickchaos/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wickchaos {

namespace {

constexpr double kE = std::numbers::e;

}  // namespace

PsiFamily::PsiFamily(double q) : q_(q) {
  if (!(q > 0.0)) throw std::invalid_argument("PsiFamily: q must be positive");
  if (q < 1.0) {
    x0_ = std::pow(1.0 / q, 1.0 / q);
    K_ = std::expm1(1.0 / q) / x0_;
  }
}

PsiFamily PsiFamily::with_G(double G) const {
  if (!(G > 0.0)) throw std::invalid_argument("PsiFamily: G must be positive");
  PsiFamily copy = *this;
  copy.G_ = G;
  return copy;
}

double PsiFamily::psi(double x) const {
  if (x < 0.0) throw std::domain_error("psi: argument must be nonnegative");
  if (is_infinite()) return kE * std::expm1(std::expm1(x));
  if (q_ < 1.0 && x <= x0_) return K_ * x;
  return std::expm1(std::pow(x, q_));
}

double PsiFamily::psi_inv(double y) const {
  if (y < 0.0) throw std::domain_error("psi_inv: argument must be nonnegative");
  if (is_infinite()) return std::log1p(std::log1p(y / kE));
  if (q_ < 1.0 && y <= K_ * x0_) return y / K_;
  return std::pow(std::log1p(y), 1.0 / q_);
}

double PsiFamily::dpsi(double x) const {
  if (x < 0.0) throw std::domain_error("dpsi: argument must be nonnegative");
  if (is_infinite()) return std::exp(x) * std::exp(std::exp(x));
  if (q_ < 1.0 && x < x0_) return K_;
  if (x == 0.0) return q_ == 1.0 ? 1.0 : 0.0;
  return q_ * std::pow(x, q_ - 1.0) * std::exp(std::pow(x, q_));
}

double PsiFamily::phi(double x) const {
  if (x < 0.0) throw std::domain_error("phi_q: argument must be nonnegative");
  if (is_infinite()) return std::log1p(std::log1p(x / kE));
  if (q_ >= 1.0) return std::pow(std::log1p(x), 1.0 / q_);
  if (!has_G()) throw std::logic_error("phi_q: G_q has not been computed");
  return std::pow(2.0 * std::log1p(x / G_), 1.0 / q_);
}

double PsiFamily::lambda(double y) const {
  if (!(q_ < 1.0)) throw std::invalid_argument("lambda_q: defined for 0 < q < 1");
  if (y < 0.0) throw std::domain_error("lambda_q: argument must be nonnegative");
  if (y < K_) return 0.0;
  const double plateau_end = dpsi(x0_);
  if (y <= plateau_end) return x0_;
  // psi' is increasing beyond x0; solve psi'(x) = y on log scale, where the
  // equation reads log q + (q-1) log x + x^q = log y.
  const double target = std::log(y);
  auto g = [&](double lx) { return std::log(q_) + (q_ - 1.0) * lx + std::exp(q_ * lx) - target; };
  double lo = std::log(x0_);
  double hi = lo + 1.0;
  int guard = 0;
  while (g(hi) < 0.0) {
    lo = hi;
    hi += 1.0;
    if (++guard > 4000) throw std::runtime_error("lambda_q: no bracket found");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::exp(hi);
}

double psi(double q, double x) { return PsiFamily(q).psi(x); }
double psi_inv(double q, double y) { return PsiFamily(q).psi_inv(y); }
double phi_q(const PsiFamily& family, double x) { return family.phi(x); }
double lambda_q(double q, double y) { return PsiFamily(q).lambda(y); }

double find_Gq(double q) {
  const PsiFamily family(q);
  if (!(q < 1.0)) throw std::invalid_argument("find_Gq: defined for 0 < q < 1");
  const double K = family.K();
  std::vector<double> ys;
  const int count = 4000;
  const double lo = std::log(K);
  const double hi = std::log(1e8);
  for (int i = 0; i < count; ++i) ys.push_back(std::exp(lo + (hi - lo) * i / (count - 1)));
  // Just past the plateau, where lambda jumps off x0.
  const double plateau_end = family.dpsi(family.x0());
  ys.push_back(plateau_end);
  ys.push_back(plateau_end * (1.0 + 1e-12));
  std::vector<double> lam(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) lam[i] = family.lambda(ys[i]);

  auto feasible = [&](double G) {
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (lam[i] > std::pow(2.0 * std::log1p(ys[i] / G), 1.0 / q)) return false;
    }
    return true;
  };
  // At y = K the inequality forces G <= K / (e^{1/(2q)} - 1).
  double g_hi = K / std::expm1(0.5 / q);
  if (feasible(g_hi)) return g_hi;
  double g_lo = g_hi;
  while (!feasible(g_lo)) g_lo *= 0.5;
  for (int it = 0; it < 200 && g_hi / g_lo - 1.0 > 1e-13; ++it) {
    const double mid = std::sqrt(g_lo * g_hi);
    (feasible(mid) ? g_lo : g_hi) = mid;
  }
  return g_lo;
}

PsiFamily make_psi_family(double q) {
  PsiFamily family(q);
  if (q < 1.0) family = family.with_G(find_Gq(q));
  return family;
}

YoungReport young_check(const PsiFamily& family, std::span<const double> grid_x,
                        std::span<const double> grid_y) {
  const bool small_q = family.q() < 1.0;
  if (small_q && !family.has_G()) throw std::logic_error("young_check: G_q has not been computed");
  YoungReport report;
  for (double y : grid_y) {
    if (y < 0.0) throw std::invalid_argument("young_check: grids must be nonnegative");
    const double conj = small_q ? y * std::pow(2.0 * std::log1p(y / family.G()), 1.0 / family.q())
                                : y * family.psi_inv(y);
    for (double x : grid_x) {
      if (x < 0.0) throw std::invalid_argument("young_check: grids must be nonnegative");
      const double lhs = x * y;
      const double rhs = family.psi(x) + conj;
      const double violation = (lhs - rhs) / std::max(1.0, lhs);
      if (violation > report.max_violation) {
        report.max_violation = violation;
        report.worst_x = x;
        report.worst_y = y;
      }
    }
  }
  report.pass = report.max_violation <= 1e-10;
  return report;
}

double psi_convexity_violation(const PsiFamily& family, std::span<const double> grid) {
  std::vector<double> xs(grid.begin(), grid.end());
  std::sort(xs.begin(), xs.end());
  double worst = 0.0;
  for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
    const double a = family.psi(xs[i]);
    const double b = family.psi(xs[i + 1]);
    const double c = family.psi(xs[i + 2]);
    if (!std::isfinite(c)) break;
    const double s1 = (b - a) / (xs[i + 1] - xs[i]);
    const double s2 = (c - b) / (xs[i + 2] - xs[i + 1]);
    const double scale = std::max({std::abs(s1), std::abs(s2), 1e-300});
    worst = std::max(worst, (s1 - s2) / scale);
  }
  return worst;
}

double orlicz_norm_empirical(std::span<const double> samples, double q) {
  if (samples.size() < 1000) throw std::invalid_argument("orlicz_norm_empirical: need at least 1000 samples");
  const PsiFamily family(q);
  double max_abs = 0.0;
  for (double s : samples) max_abs = std::max(max_abs, std::abs(s));
  if (max_abs == 0.0) return 0.0;
  const double n = static_cast<double>(samples.size());
  auto excess = [&](double c) {
    double sum = 0.0;
    for (double s : samples) sum += family.psi(std::abs(s) / c);
    return sum / n - 1.0;
  };
  double lo = max_abs / family.psi_inv(n);
  double hi = max_abs / family.psi_inv(1.0 / n);
  for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-13; ++it) {
    const double mid = std::sqrt(lo * hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace wickchaos
