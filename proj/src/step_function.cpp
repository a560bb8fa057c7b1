#include "wickchaos/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wickchaos {

TestFunction::TestFunction(std::vector<double> breakpoints, std::vector<double> levels)
    : breakpoints_(std::move(breakpoints)), levels_(std::move(levels)) {
  if (breakpoints_.empty() && levels_.empty()) return;
  if (breakpoints_.size() != levels_.size() + 1) {
    throw std::invalid_argument("TestFunction: need one more breakpoint than levels");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw std::invalid_argument("TestFunction: breakpoints must increase strictly");
    }
  }
  for (double v : levels_) {
    if (!std::isfinite(v)) throw std::invalid_argument("TestFunction: levels must be finite");
  }
}

TestFunction TestFunction::indicator(double a, double b) {
  if (!(b > a)) throw std::invalid_argument("indicator: need a < b");
  return TestFunction({a, b}, {1.0});
}

double TestFunction::operator()(double x) const {
  if (levels_.empty() || x < breakpoints_.front() || x >= breakpoints_.back()) return 0.0;
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return levels_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

bool TestFunction::is_zero() const {
  return std::all_of(levels_.begin(), levels_.end(), [](double v) { return v == 0.0; });
}

double TestFunction::support_lo() const { return breakpoints_.empty() ? 0.0 : breakpoints_.front(); }
double TestFunction::support_hi() const { return breakpoints_.empty() ? 0.0 : breakpoints_.back(); }

bool TestFunction::is_indicator() const { return levels_.size() == 1 && levels_[0] == 1.0; }

CorrelationWeight::CorrelationWeight(const TestFunction& g, const TestFunction& g_tilde)
    : g_(g), gt_(g_tilde) {
  if (g.is_zero() || g_tilde.is_zero()) return;
  for (double p : g.breakpoints()) {
    for (double q : g_tilde.breakpoints()) knots_.push_back(p - q);
  }
  std::sort(knots_.begin(), knots_.end());
  knots_.erase(std::unique(knots_.begin(), knots_.end()), knots_.end());
}

double CorrelationWeight::operator()(double z) const {
  if (knots_.empty() || z <= knots_.front() || z >= knots_.back()) return 0.0;
  const auto& p = g_.breakpoints();
  const auto& q = gt_.breakpoints();
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double a = g_.levels()[i];
    if (a == 0.0) continue;
    for (std::size_t j = 0; j + 1 < q.size(); ++j) {
      const double b = gt_.levels()[j];
      if (b == 0.0) continue;
      // {y : y + z in [p_i, p_{i+1})} intersected with [q_j, q_{j+1}).
      const double overlap = std::min(p[i + 1] - z, q[j + 1]) - std::max(p[i] - z, q[j]);
      if (overlap > 0.0) sum += a * b * overlap;
    }
  }
  return sum;
}

bool CorrelationWeight::vanishes_near_origin() const {
  if (knots_.empty()) return true;
  if (0.0 <= knots_.front() || 0.0 >= knots_.back()) return true;
  // W is linear between knots, so it vanishes near 0 iff it vanishes at the
  // neighbouring knots and at 0.
  const auto it = std::lower_bound(knots_.begin(), knots_.end(), 0.0);
  const double right = (*it == 0.0 && it + 1 != knots_.end()) ? *(it + 1) : *it;
  const double left = *(it - 1);
  return (*this)(left) == 0.0 && (*this)(0.0) == 0.0 && (*this)(right) == 0.0;
}

}  // namespace wickchaos
