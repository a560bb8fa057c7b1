#pragma once

#include "wickchaos/increment_variance.hpp"
#include "wickchaos/step_function.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace wickchaos {

struct ModelSpec {
  std::string kind = "power_law";
  double r = 1.6;
  double M = 1.0;

  IncrementVarianceModel build() const;
};

struct RangeSpec {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;

  std::vector<double> log_points() const;
};

struct ConditionsSpec {
  RangeSpec s_grid{1e-4, 1.0, 41};
  RangeSpec h_grid{1e-4, 1.0, 41};
  double tol = 1e-9;
};

struct ConvergenceSpec {
  /// Dyadic h values for the L2 rate and the pathwise study.
  std::vector<double> h{0.125, 0.0625, 0.03125, 0.015625, 0.0078125, 0.00390625, 0.001953125,
                        0.0009765625};
  /// Number of largest h values used to fit the pairwise bound constant that is
  /// then checked on the whole grid.
  int fit_levels = 3;
  /// Number of seeds (substreams) of the pathwise Cauchy study.
  int seeds = 20;
  /// Grid step for the pathwise study (may be finer than grid.delta).
  double pathwise_delta = 0.0;
  /// Order of the pathwise study (defaults to k).
  int pathwise_k = 0;
  double pathwise_r = 0.0;
};

struct ExpansionSpec {
  /// "hermite", "square" or "abs".
  std::string f = "abs";
  /// Order of H_k when f = "hermite".
  int order = 2;
  /// Truncation order J of the expansion.
  int J = 2;
  int quadrature_points = 128;
  int trials = 1000;
  /// Dyadic h values (multiples of grid.delta) for the remainder study.
  std::vector<double> h{0.0625, 0.03125, 0.015625, 0.0078125, 0.00390625};
};

struct OrliczSpec {
  std::vector<double> q{0.3, 0.5, 1.0, 2.0, std::numeric_limits<double>::infinity()};
  int gaussian_samples = 1000000;
  double young_max = 50.0;
  int young_count = 201;
};

struct EntropySpec {
  double h0 = 0.0625;
  double h_min = 1e-45;
  int count = 1024;
  RangeSpec v_grid{0.0009765625, 0.25, 9};
  bool halving_study = true;
};

/// Everything one CLI run needs.  Loaded from JSON; missing keys keep the
/// defaults below.
struct ExperimentConfig {
  ModelSpec model;
  int k = 2;
  double delta = 1.0 / 4096.0;
  int n = 4608;
  double g_a = 0.0;
  double g_b = 1.0;
  /// h values (multiples of delta) for the Monte Carlo comparison.
  std::vector<double> h{1.0 / 64.0};
  std::uint64_t seed = 20240611;
  int trials = 10000;
  std::string output_dir = "out";

  ConditionsSpec conditions;
  ConvergenceSpec convergence;
  ExpansionSpec expansion;
  OrliczSpec orlicz;
  EntropySpec entropy;

  TestFunction g() const { return TestFunction::indicator(g_a, g_b); }
  /// Throws std::invalid_argument when an h is not a multiple of delta or
  /// [a, b + max h] is not inside the sampled range.
  void validate() const;
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);
std::string to_json(const ExperimentConfig& config);

}  // namespace wickchaos
