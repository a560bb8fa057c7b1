#include "wickchaos/entropy.hpp"

#include "wickchaos/rng.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

namespace wickchaos {

namespace {

template <class F>
void parallel_for(int count, F&& body) {
  const int workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || count < 2) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::future<void>> tasks;
  for (int w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (int i = w; i < count; i += workers) body(i);
    }));
  }
  for (auto& t : tasks) t.get();
}

void finish_table(MetricTable& table) {
  table.diameter = table.distance.size() ? table.distance.maxCoeff() : 0.0;
}

std::vector<double> voronoi_cells(const std::vector<double>& points, double lo, double hi) {
  const std::size_t n = points.size();
  std::vector<double> cells(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i == 0 ? lo : 0.5 * (points[i - 1] + points[i]);
    const double right = i + 1 == n ? hi : 0.5 * (points[i] + points[i + 1]);
    cells[i] = right - left;
  }
  return cells;
}

struct SortedRow {
  std::vector<double> dist;
  std::vector<double> cumulative;
};

SortedRow sort_row(const MetricTable& table, int row) {
  const int n = table.size();
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return table.distance(row, a) < table.distance(row, b); });
  SortedRow out;
  double acc = 0.0;
  for (int j : order) {
    const double d = table.distance(row, j);
    acc += table.cell_widths[j];
    if (!out.dist.empty() && out.dist.back() == d) {
      out.cumulative.back() = acc;
    } else {
      out.dist.push_back(d);
      out.cumulative.push_back(acc);
    }
  }
  return out;
}

EntropyValue integrate_row(const SortedRow& row, double v, double exponent) {
  auto integrand = [&](double measure) {
    const double l = std::log(1.0 / measure);
    return l > 0.0 ? std::pow(l, exponent) : 0.0;
  };
  EntropyValue out;
  // The row's own distance 0 is the first entry.
  out.truncation_u = row.dist.size() > 1 ? row.dist[1] : 0.0;
  for (std::size_t m = 0; m < row.dist.size(); ++m) {
    const double from = row.dist[m];
    if (from >= v) break;
    // Once the ball is all of T it carries no entropy.
    if (m + 1 == row.dist.size()) break;
    const double to = std::min(row.dist[m + 1], v);
    out.value += (to - from) * integrand(row.cumulative[m]);
  }
  return out;
}

}  // namespace

MetricTable make_metric_table(std::vector<double> points, double lo, double hi,
                              const std::function<double(double, double)>& metric) {
  if (points.empty()) throw std::invalid_argument("make_metric_table: no points");
  if (!std::is_sorted(points.begin(), points.end())) throw std::invalid_argument("make_metric_table: points must be sorted");
  if (points.front() < lo || points.back() > hi) throw std::invalid_argument("make_metric_table: points outside domain");
  MetricTable table;
  const int n = static_cast<int>(points.size());
  table.cell_widths = voronoi_cells(points, lo, hi);
  table.points = std::move(points);
  table.domain_length = hi - lo;
  table.distance = Eigen::MatrixXd::Zero(n, n);
  parallel_for(n, [&](int i) {
    for (int j = i + 1; j < n; ++j) table.distance(i, j) = metric(table.points[i], table.points[j]);
  });
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) table.distance(i, j) = table.distance(j, i);
  }
  finish_table(table);
  return table;
}

MetricTable make_chaos_metric_table(const IncrementVarianceModel& model, int k, const TestFunction& g,
                                    const ChaosTableSpec& spec, const GradedQuadrature& opts) {
  if (spec.count < 3 || !(spec.h_min > 0.0) || !(spec.h0 > spec.h_min)) {
    throw std::invalid_argument("make_chaos_metric_table: bad grid spec");
  }
  const int geo = spec.count - 1;
  const double log_step = std::log(spec.h0 / spec.h_min) / (geo - 1);
  std::vector<double> points{0.0};
  for (int i = 0; i < geo; ++i) points.push_back(spec.h_min * std::exp(log_step * i));
  points.back() = spec.h0;

  const double length = g.support_hi() - g.support_lo();
  const bool scaled = model.kind() == ModelKind::power_law && g.is_indicator() && 8.0 * spec.h0 <= length;
  if (!scaled) {
    auto table = make_metric_table(points, 0.0, spec.h0, [&](double a, double b) {
      return metric_d(a, b, k, g, model, opts);
    });
    table.k = k;
    table.model_tag = model.tag();
    return table;
  }

  const ScaledIndicatorMetric metric(model, k, length, opts);
  // Profiles by lag on the geometric part; lag index geo stands for t = 0.
  std::vector<ScaledIndicatorMetric::Profile> profiles(geo + 1);
  parallel_for(geo + 1, [&](int lag) {
    const double t = lag == geo ? 0.0 : std::exp(-log_step * lag);
    profiles[lag] = metric.profile(lag == 0 ? 1.0 : t);
  });

  MetricTable table;
  const int n = spec.count;
  table.cell_widths = voronoi_cells(points, 0.0, spec.h0);
  table.points = points;
  table.domain_length = spec.h0;
  table.distance = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    table.distance(0, i) = table.distance(i, 0) = std::sqrt(metric.d_squared(points[i], 0.0, profiles[geo]));
    for (int j = i + 1; j < n; ++j) {
      const double d = std::sqrt(metric.d_squared(points[j], points[i], profiles[j - i]));
      table.distance(i, j) = table.distance(j, i) = d;
    }
  }
  table.k = k;
  table.model_tag = model.tag();
  finish_table(table);
  return table;
}

TriangleReport check_triangle(const MetricTable& table, long random_triples, std::uint64_t seed) {
  TriangleReport report;
  const int n = table.size();
  const auto& d = table.distance;
  auto check = [&](int a, int b, int c) {
    report.max_violation = std::max(report.max_violation, d(a, c) - d(a, b) - d(b, c));
    ++report.triples;
  };
  for (int i = 0; i + 2 < n; ++i) {
    check(i, i + 1, i + 2);
    check(i + 1, i, i + 2);
    check(i, i + 2, i + 1);
  }
  if (n > 0) {
    Philox4x32 engine(seed, 0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (long t = 0; t < random_triples; ++t) check(pick(engine), pick(engine), pick(engine));
  }
  return report;
}

double ball_measure(const MetricTable& table, int row, double u) {
  if (row < 0 || row >= table.size()) throw std::out_of_range("ball_measure: row out of range");
  double sum = 0.0;
  for (int j = 0; j < table.size(); ++j) {
    if (table.distance(row, j) <= u) sum += table.cell_widths[j];
  }
  return sum;
}

EntropyValue entropy_integral(const MetricTable& table, int row, double v, double exponent) {
  if (row < 0 || row >= table.size()) throw std::out_of_range("entropy_integral: row out of range");
  if (!(v >= 0.0) || !(exponent > 0.0)) throw std::invalid_argument("entropy_integral: need v >= 0, exponent > 0");
  return integrate_row(sort_row(table, row), v, exponent);
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

MajorizingReport check_majorizing_bound(const MetricTable& table, int k, double delta,
                                        const std::vector<double>& v_grid) {
  if (v_grid.empty()) throw std::invalid_argument("check_majorizing_bound: empty v grid");
  if (table.k != 0 && table.k != k) throw std::invalid_argument("check_majorizing_bound: table built for another k");
  std::vector<double> vs(v_grid);
  std::sort(vs.begin(), vs.end());
  const double exponent = 0.5 * k;
  const int n = table.size();
  std::vector<SortedRow> rows(n);
  parallel_for(n, [&](int i) { rows[i] = sort_row(table, i); });

  MajorizingReport report;
  report.conservative_v_cap = 0.25 * std::pow(table.domain_length, 0.5 * delta);
  report.floor_ok = true;
  for (double v : vs) {
    if (!(v > 0.0 && v < 1.0)) throw std::invalid_argument("check_majorizing_bound: v must lie in (0, 1)");
    MajorizingRow out;
    out.v = v;
    for (int i = 0; i < n; ++i) {
      const EntropyValue e = integrate_row(rows[i], v, exponent);
      if (e.value > out.sup_integral || i == 0) {
        out.sup_integral = e.value;
        out.truncation_u = e.truncation_u;
        out.argmax_row = i;
      }
    }
    out.envelope = v * std::pow(std::log(1.0 / v), exponent);
    out.ratio = out.sup_integral / out.envelope;
    report.fitted_C = std::max(report.fitted_C, out.ratio);
    if (out.truncation_u > 0.1 * v) report.floor_ok = false;
    report.rows.push_back(out);
  }
  report.decreasing = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i - 1].sup_integral > report.rows[i].sup_integral) report.decreasing = false;
  }
  const bool bounded = std::isfinite(report.fitted_C);
  if (!bounded || !report.decreasing) {
    report.status = CheckStatus::fail;
  } else {
    report.status = report.floor_ok ? CheckStatus::pass : CheckStatus::inconclusive;
  }
  return report;
}

void MajorizingReport::write_csv(std::ostream& out) const {
  out << "v,sup_entropy_integral,envelope,fitted_C,truncation_u\n" << std::setprecision(12);
  for (const auto& r : rows) {
    out << r.v << ',' << r.sup_integral << ',' << r.envelope << ',' << fitted_C << ',' << r.truncation_u << '\n';
  }
}

}  // namespace wickchaos
