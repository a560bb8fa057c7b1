#pragma once

#include "wickchaos/chaos.hpp"

#include <Eigen/Dense>

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace wickchaos {

/// Finite sample of an interval T = [0, h0] with pairwise distances.
/// Every point owns the cell of T closer to it than to any other point;
/// cell lengths stand in for Lebesgue measure.
struct MetricTable {
  std::vector<double> points;
  std::vector<double> cell_widths;
  Eigen::MatrixXd distance;
  double domain_length = 0.0;
  double diameter = 0.0;
  int k = 0;
  std::string model_tag;

  int size() const { return static_cast<int>(points.size()); }
};

/// Table for an arbitrary metric on sorted points covering [lo, hi].
MetricTable make_metric_table(std::vector<double> points, double lo, double hi,
                              const std::function<double(double, double)>& metric);

struct ChaosTableSpec {
  double h0 = 0.0625;
  /// Smallest positive grid point, the rest is geometric up to h0.
  double h_min = 1e-45;
  /// Total number of points including h = 0.
  int count = 1024;
};

/// Table of the chaos metric d(h, h') on {0} together with a geometric grid
/// on [h_min, h0].  Uses ScaledIndicatorMetric when the model is a power law
/// and g a single indicator long enough, direct quadrature otherwise.
MetricTable make_chaos_metric_table(const IncrementVarianceModel& model, int k, const TestFunction& g,
                                    const ChaosTableSpec& spec, const GradedQuadrature& opts = {});

struct TriangleReport {
  double max_violation = 0.0;
  long triples = 0;
};

/// Checks d(a, c) <= d(a, b) + d(b, c) on all consecutive triples and on
/// `random_triples` further triples drawn from a fixed seed.
TriangleReport check_triangle(const MetricTable& table, long random_triples = 200000,
                              std::uint64_t seed = 7);

/// Total cell length of the points within distance u of point `row`.
double ball_measure(const MetricTable& table, int row, double u);

struct EntropyValue {
  double value = 0.0;
  /// Smallest positive distance from the row: below it the ball is the
  /// row's own cell (the discretization floor).
  double truncation_u = 0.0;
};

/// int_0^v (log 1 / lambda(B(row, u)))_+^exponent du, exact for the
/// piecewise-constant ball measure of the table.
EntropyValue entropy_integral(const MetricTable& table, int row, double v, double exponent);

struct MajorizingRow {
  double v = 0.0;
  double sup_integral = 0.0;
  double envelope = 0.0;
  double ratio = 0.0;
  double truncation_u = 0.0;
  int argmax_row = 0;
};

enum class CheckStatus { pass = 0, fail = 1, inconclusive = 2 };
const char* to_string(CheckStatus status);

struct MajorizingReport {
  std::vector<MajorizingRow> rows;
  double fitted_C = 0.0;
  bool decreasing = false;
  bool floor_ok = false;
  /// h0^{delta/2} / 4, the conservative upper end of the v range; reported
  /// only, the checked range is the caller's v grid.
  double conservative_v_cap = 0.0;
  CheckStatus status = CheckStatus::fail;

  /// CSV: v,sup_entropy_integral,envelope,fitted_C,truncation_u
  void write_csv(std::ostream& out) const;
};

/// S(v) = sup_h entropy_integral(h, v, k/2) against v (log 1/v)^{k/2} for v
/// on the given grid.  Inconclusive when the discretization floor at the
/// maximizing row exceeds v / 10 for some v.
MajorizingReport check_majorizing_bound(const MetricTable& table, int k, double delta,
                                        const std::vector<double>& v_grid);

}  // namespace wickchaos
