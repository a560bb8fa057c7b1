#include "wickchaos/increment_variance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wickchaos {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// |x|^r - |x - a|^r for a > 0, accurate to full relative precision whenever
// x and x - a lie on the same side of the origin.
double power_difference(double x, double a, double r) {
  const double y = x - a;
  if (x > 0.0 && y > 0.0) return -std::pow(x, r) * std::expm1(r * std::log1p(-a / x));
  if (x < 0.0 && y < 0.0) {
    const double ax = -x;
    return -std::pow(ax, r) * std::expm1(r * std::log1p(a / ax));
  }
  return std::pow(std::abs(x), r) - std::pow(std::abs(y), r);
}

constexpr int kSeriesTerms = 48;

// C(n, i) / ((i + 1)(n - i + 1)): coefficients of E(xU - yV)^n for
// independent uniforms U, V on [0, 1].
const std::array<std::array<double, kSeriesTerms + 1>, kSeriesTerms + 1>& moment_coefficients() {
  static const auto table = [] {
    std::array<std::array<double, kSeriesTerms + 1>, kSeriesTerms + 1> t{};
    for (int n = 0; n <= kSeriesTerms; ++n) {
      double binom = 1.0;
      for (int i = 0; i <= n; ++i) {
        t[n][i] = binom / ((i + 1.0) * (n - i + 1.0));
        binom = binom * (n - i) / (i + 1.0);
      }
    }
    return t;
  }();
  return table;
}

// B_z(h, h') for sigma^2 = |x|^r when |z| >= 8 max(h, h'): expand
// rho(|z| + e) = rho(|z|) (1 + e/|z|)^(r-2) and average the powers of
// e = sign(z)(hU - h'V) exactly.
double power_kernel_far(double z, double h, double hp, double r) {
  const double w = std::abs(z);
  const double s = sign_of(z);
  const double x = h / w;
  const double y = -hp / w;
  const auto& coeff = moment_coefficients();
  std::array<double, kSeriesTerms + 1> xp{};
  std::array<double, kSeriesTerms + 1> yp{};
  xp[0] = yp[0] = 1.0;
  for (int i = 1; i <= kSeriesTerms; ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  double sum = 1.0;
  double binom = 1.0;
  double sign_power = 1.0;
  for (int n = 1; n <= kSeriesTerms; ++n) {
    binom *= (r - 2.0 - (n - 1)) / n;
    sign_power *= s;
    double moment = 0.0;
    for (int i = 0; i <= n; ++i) moment += coeff[n][i] * xp[i] * yp[n - i];
    sum += binom * sign_power * moment;
    // |hU - h'V| <= max(h, h'), so later terms are bounded by this.
    if (std::abs(binom) * std::pow(std::max(x, -y), n) < 1e-18 * std::abs(sum)) break;
  }
  return 0.5 * r * (r - 1.0) * std::pow(w, r - 2.0) * sum;
}

double power_kernel(double z, double h, double hp, double r) {
  if (std::abs(z) >= 8.0 * std::max(h, hp)) return power_kernel_far(z, h, hp, r);
  double numerator = 0.0;
  if (hp <= h) {
    numerator = power_difference(z + h, hp, r) - power_difference(z, hp, r);
  } else {
    numerator = power_difference(z + h, h, r) - power_difference(z + h - hp, h, r);
  }
  return numerator / (2.0 * h * hp);
}

double power_kernel_limit(double z, double h, double r) {
  const double q = r - 1.0;
  double diff = 0.0;
  if (z > 0.0) {
    diff = r * std::pow(z, q) * std::expm1(q * std::log1p(h / z));
  } else if (z + h < 0.0) {
    const double az = -z;
    diff = -r * std::pow(az, q) * std::expm1(q * std::log1p(-h / az));
  } else {
    diff = r * (std::pow(std::abs(z + h), q) * sign_of(z + h) - std::pow(std::abs(z), q) * sign_of(z));
  }
  return diff / (2.0 * h);
}

std::string describe_grid(std::span<const double> grid) {
  std::ostringstream os;
  os << std::setprecision(3) << grid.front() << ".." << grid.back() << " (" << grid.size() << ")";
  return os.str();
}

}  // namespace

IncrementVarianceModel::IncrementVarianceModel(ModelKind kind, double r, double domain_cap)
    : kind_(kind), r_(r), domain_cap_(domain_cap) {
  if (!(domain_cap > 0.0)) throw std::invalid_argument("domain cap M must be positive");
}

IncrementVarianceModel IncrementVarianceModel::power_law(double r, double domain_cap) {
  if (!(r > 1.0 && r < 2.0)) {
    throw std::invalid_argument("power_law exponent must satisfy 1 < r < 2");
  }
  return {ModelKind::power_law, r, domain_cap};
}

IncrementVarianceModel IncrementVarianceModel::quadratic(double domain_cap) {
  return {ModelKind::quadratic, 2.0, domain_cap};
}

IncrementVarianceModel IncrementVarianceModel::linear(double domain_cap) {
  return {ModelKind::linear, 1.0, domain_cap};
}

IncrementVarianceModel IncrementVarianceModel::with_regularity_constant(double c) const {
  IncrementVarianceModel copy = *this;
  copy.regularity_constant_ = c;
  return copy;
}

std::string IncrementVarianceModel::tag() const {
  switch (kind_) {
    case ModelKind::power_law: {
      std::ostringstream os;
      os << "power_law(r=" << r_ << ")";
      return os.str();
    }
    case ModelKind::quadratic:
      return "quadratic";
    case ModelKind::linear:
      return "linear";
  }
  return "unknown";
}

double IncrementVarianceModel::sigma2(double s) const {
  if (s < 0.0) throw std::domain_error("sigma2: argument must be nonnegative");
  return sigma2_abs(s);
}

double IncrementVarianceModel::sigma2_abs(double x) const {
  const double a = std::abs(x);
  switch (kind_) {
    case ModelKind::quadratic:
      return a * a;
    case ModelKind::linear:
      return a;
    case ModelKind::power_law:
      return std::pow(a, r_);
  }
  return 0.0;
}

double IncrementVarianceModel::dsigma2(double x) const {
  switch (kind_) {
    case ModelKind::quadratic:
      return 2.0 * x;
    case ModelKind::linear:
      return sign_of(x);
    case ModelKind::power_law:
      return r_ * std::pow(std::abs(x), r_ - 1.0) * sign_of(x);
  }
  return 0.0;
}

double IncrementVarianceModel::rho(double s) const {
  const double a = std::abs(s);
  switch (kind_) {
    case ModelKind::quadratic:
      return 1.0;
    case ModelKind::linear:
      return a == 0.0 ? kInf : 0.0;
    case ModelKind::power_law:
      return a == 0.0 ? kInf : 0.5 * r_ * (r_ - 1.0) * std::pow(a, r_ - 2.0);
  }
  return 0.0;
}

DeltaExponent delta_of(const IncrementVarianceModel& model, int k) {
  if (model.kind() != ModelKind::power_law) {
    throw std::invalid_argument("delta_of: defined for the power_law model only");
  }
  if (k < 1) throw std::invalid_argument("delta_of: k must be a positive integer");
  const double delta = 1.0 - k * (2.0 - model.exponent());
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::domain_error("delta_of: rho^k is not locally integrable, no admissible delta");
  }
  return {delta, delta < 0.5};
}

double phi_envelope(double x, double delta, int k) {
  return std::pow(std::abs(x), -(1.0 - delta) / k);
}

bool ConditionReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConditionRow& r) { return r.advisory || r.pass; });
}

bool ConditionReport::advisories_clear() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConditionRow& r) { return !r.advisory || r.pass; });
}

const ConditionRow& ConditionReport::row(const std::string& id) const {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const ConditionRow& r) { return r.id == id; });
  if (it == rows.end()) throw std::out_of_range("no condition row " + id);
  return *it;
}

void ConditionReport::write_csv(std::ostream& out) const {
  out << "condition_id,worst_violation,fitted_constant,pass\n";
  out << std::setprecision(12);
  for (const auto& r : rows) {
    out << r.id << ',' << r.worst_violation << ',' << r.fitted_constant << ',' << (r.pass ? 1 : 0) << '\n';
  }
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (count < 2 || !(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log_grid: bad range");
  std::vector<double> grid(count);
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) grid[i] = lo * std::exp(step * i);
  grid.back() = hi;
  return grid;
}

ConditionReport check_hypotheses(const IncrementVarianceModel& model, int k,
                                 std::span<const double> s_grid, std::span<const double> h_grid,
                                 double tol) {
  if (s_grid.empty() || h_grid.empty()) throw std::invalid_argument("check_hypotheses: empty grid");
  if (k < 1) throw std::invalid_argument("check_hypotheses: k must be positive");
  const double cap = model.domain_cap();
  for (double s : s_grid) {
    if (!(s > 0.0 && s <= cap)) throw std::invalid_argument("check_hypotheses: s grid outside (0, M]");
  }
  for (double h : h_grid) {
    if (!(h > 0.0 && h <= cap)) throw std::invalid_argument("check_hypotheses: h grid outside (0, M]");
  }
  std::vector<double> s(s_grid.begin(), s_grid.end());
  std::vector<double> hs(h_grid.begin(), h_grid.end());
  std::sort(s.begin(), s.end());
  std::sort(hs.begin(), hs.end());
  ConditionReport report;
  const std::string sdesc = describe_grid(s);
  const std::string hdesc = describe_grid(hs);

  // Convexity: chord slopes of sigma^2 on [0] + s grid must be nondecreasing.
  {
    std::vector<double> pts{0.0};
    pts.insert(pts.end(), s.begin(), s.end());
    double worst = 0.0;
    for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
      const double s1 = (model.sigma2(pts[i + 1]) - model.sigma2(pts[i])) / (pts[i + 1] - pts[i]);
      const double s2 = (model.sigma2(pts[i + 2]) - model.sigma2(pts[i + 1])) / (pts[i + 2] - pts[i + 1]);
      const double scale = std::max({std::abs(s1), std::abs(s2), 1e-300});
      worst = std::max(worst, (s1 - s2) / scale);
    }
    report.rows.push_back({"convex", sdesc, worst, 0.0, worst <= tol, false});
  }

  // h^2 / sigma^2(h) -> 0 and sigma^2(h) / h -> 0: both ratios must decrease
  // along the grid as h decreases and end strictly below where they start.
  auto trend_row = [&](const std::string& id, auto ratio) {
    double worst = 0.0;
    const double first = ratio(hs.back());
    for (std::size_t i = hs.size() - 1; i > 0; --i) {
      const double larger = ratio(hs[i]);
      const double smaller = ratio(hs[i - 1]);
      worst = std::max(worst, (smaller - larger) / first);
    }
    const double last = ratio(hs.front());
    const double shrink = last / first;
    const bool pass = worst <= tol && shrink < 1.0 - 1e-6;
    report.rows.push_back({id, hdesc, worst, shrink, pass, false});
  };
  trend_row("h2_over_sigma2_to_zero", [&](double h) { return h * h / model.sigma2(h); });
  trend_row("sigma2_over_h_to_zero", [&](double h) { return model.sigma2(h) / h; });

  // Second differences for h <= s/8, bounded by C sigma^2(s)/s^2.
  {
    double fitted = 0.0;
    for (double sv : s) {
      for (double h : hs) {
        if (h > sv / 8.0) continue;
        const double second = 2.0 * b_kernel(model, sv, h, h);
        fitted = std::max(fitted, second * sv * sv / model.sigma2(sv));
      }
    }
    report.rows.push_back({"second_difference_bound", sdesc + " x " + hdesc, 0.0, fitted,
                           std::isfinite(fitted), false});
  }

  // rho is a classical second derivative off the origin: Richardson-extrapolated
  // central differences of sigma^2 agree with the closed-form rho.
  {
    double worst = 0.0;
    bool finite = true;
    for (double sv : s) {
      const double step = 1e-3 * sv;
      auto central = [&](double e) {
        return (model.sigma2(sv + e) + model.sigma2(sv - e) - 2.0 * model.sigma2(sv)) / (e * e);
      };
      const double fd = (4.0 * central(0.5 * step) - central(step)) / 3.0;
      const double exact = 2.0 * model.rho(sv);
      if (!std::isfinite(exact)) finite = false;
      const double scale = std::max(std::abs(exact), model.sigma2(sv) / (sv * sv));
      worst = std::max(worst, std::abs(fd - exact) / scale);
    }
    report.rows.push_back({"second_derivative_exists", sdesc, worst, 0.0, finite && worst <= 1e-6, false});
  }

  double delta = 0.25;
  bool delta_ok = true;
  if (model.kind() == ModelKind::power_law) {
    try {
      delta = delta_of(model, k).delta;
    } catch (const std::domain_error&) {
      delta_ok = false;
      delta = 1.0 - k * (2.0 - model.exponent());
    }
  }
  report.delta = delta;

  // Midpoints of the s grid serve as out-of-sample points for fitted bounds.
  std::vector<double> mids;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) mids.push_back(std::sqrt(s[i] * s[i + 1]));

  // rho(x) <= C_M phi(|x|) on (0, M].
  {
    double fitted = 0.0;
    double worst = 0.0;
    if (delta_ok) {
      for (double x : s) fitted = std::max(fitted, model.rho(x) / phi_envelope(x, delta, k));
      for (double x : mids) {
        const double ratio = model.rho(x) / phi_envelope(x, delta, k);
        if (fitted > 0.0) worst = std::max(worst, (ratio - fitted) / fitted);
      }
    }
    const bool pass = delta_ok && std::isfinite(fitted) && worst <= tol;
    report.rows.push_back({"rho_power_bound", sdesc, worst, fitted, pass, false});
  }

  // |rho(x+h) - rho(x)| <= C_M (|h|/|x|) rho(x) for 4|h| <= |x| <= M.
  {
    auto ratio = [&](double x, double h) {
      const double base = model.rho(x);
      const double diff = std::abs(model.rho(x + h) - base);
      if (diff == 0.0) return 0.0;
      return diff * std::abs(x) / (std::abs(h) * base);
    };
    double fitted = 0.0;
    for (const auto* xs : {&s, &mids}) {
      for (double x : *xs) {
        for (double h : hs) {
          if (4.0 * h > x) continue;
          fitted = std::max({fitted, ratio(x, h), ratio(x, -h)});
        }
      }
    }
    const double worst = std::isfinite(fitted) ? 0.0 : std::numeric_limits<double>::infinity();
    report.rows.push_back({"rho_increment_bound", sdesc + " x " + hdesc, worst, fitted, worst <= tol, false});
  }

  report.rows.push_back({"delta_below_half", "", delta_ok ? std::max(0.0, delta - 0.5) : 1.0, delta,
                         delta_ok && delta < 0.5, true});
  return report;
}

double increment_cross_covariance(const IncrementVarianceModel& model, double x, double x_lo,
                                  double y, double y_lo) {
  if (x_lo > x || y_lo > y) {
    throw std::invalid_argument("increment_cross_covariance: need x' <= x and y' <= y");
  }
  if (x_lo < 0.0 || y_lo < 0.0) {
    throw std::invalid_argument("increment_cross_covariance: points must be nonnegative");
  }
  return 0.5 * (model.sigma2_abs(x - y_lo) + model.sigma2_abs(x_lo - y) - model.sigma2_abs(x - y) -
                model.sigma2_abs(x_lo - y_lo));
}

double b_kernel(const IncrementVarianceModel& model, double z, double h, double h_prime) {
  if (!(h > 0.0) || !(h_prime > 0.0)) throw std::invalid_argument("b_kernel: need h, h' > 0");
  switch (model.kind()) {
    case ModelKind::quadratic:
      return 1.0;
    case ModelKind::linear: {
      // rho is a unit point mass: B is the overlap of [z, z+h] with [0, h'].
      const double overlap = std::min(z + h, h_prime) - std::max(z, 0.0);
      return overlap > 0.0 ? overlap / (h * h_prime) : 0.0;
    }
    case ModelKind::power_law:
      return power_kernel(z, h, h_prime, model.exponent());
  }
  return 0.0;
}

double b_kernel_limit(const IncrementVarianceModel& model, double z, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("b_kernel_limit: need h > 0");
  switch (model.kind()) {
    case ModelKind::quadratic:
      return 1.0;
    case ModelKind::linear:
      return (sign_of(z + h) - sign_of(z)) / (2.0 * h);
    case ModelKind::power_law:
      return power_kernel_limit(z, h, model.exponent());
  }
  return 0.0;
}

double averaged_kernel(const IncrementVarianceModel& model, double z, double h, double h_prime) {
  if (h > 0.0 && h_prime > 0.0) return b_kernel(model, z, h, h_prime);
  if (h > 0.0) return b_kernel_limit(model, z, h);
  if (h_prime > 0.0) return b_kernel_limit(model, -z, h_prime);
  return model.rho(z);
}

}  // namespace wickchaos
