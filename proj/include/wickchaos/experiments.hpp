#pragma once

#include "wickchaos/entropy.hpp"
#include "wickchaos/experiment_config.hpp"
#include "wickchaos/increment_variance.hpp"
#include "wickchaos/orlicz.hpp"

#include <string>
#include <vector>

namespace wickchaos {

/// Sample mean, variance and standard errors of a Monte Carlo sample.
struct SampleSummary {
  double mean = 0.0;
  double variance = 0.0;
  double mean_stderr = 0.0;
  /// Standard error of the sample variance (from the fourth central moment).
  double variance_stderr = 0.0;
  long count = 0;
};
SampleSummary summarize(const std::vector<double>& sample);
double median(std::vector<double> values);

/// Paths for substreams 0 .. trials-1 of seed, fed one at a time to `sink`.
template <class Sink>
void for_each_path(const CirculantSampler& sampler, std::uint64_t seed, int trials, Sink&& sink) {
  for (int t = 0; t < trials; ++t) sink(t, sampler.sample(seed, static_cast<std::uint64_t>(t)));
}

// ---- conditions ----------------------------------------------------------

struct ConditionsResult {
  ConditionReport report;
  CheckStatus status = CheckStatus::fail;
};
ConditionsResult run_conditions(const ExperimentConfig& config);

// ---- convergence ---------------------------------------------------------

struct ConvergenceRow {
  double h = 0.0;
  /// F(h) on the first pathwise seed.
  double pathwise_value = 0.0;
  double d_exact = 0.0;
  double envelope = 0.0;
  double mc_mean = 0.0;
  double mc_stderr = 0.0;
  int trials = 0;
};

struct MonteCarloRow {
  double h = 0.0;
  double exact_variance = 0.0;
  SampleSummary summary;
  double mean_z = 0.0;
  double variance_z = 0.0;
};

struct MetricRow {
  double h = 0.0;
  double h_prime = 0.0;
  double d_exact = 0.0;
  double bound41 = 0.0;
  double boundcalc = 0.0;
};

struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;
  std::vector<MonteCarloRow> monte_carlo;
  std::vector<MetricRow> metric;
  /// log2 d(h_i, 0) - log2 d(h_{i+1}, 0) along the dyadic list.
  std::vector<double> log_decrements;
  double delta = 0.0;
  double fitted_C_calc = 0.0;
  double fitted_C_41 = 0.0;
  int lemma41_violations = 0;
  bool calc_dominated = false;
  bool rate_ok = false;
  /// Pathwise Cauchy study: every F(h_{i+1}) - F(h_i) gap ratio over seeds.
  std::vector<double> gap_ratios;
  double median_gap_ratio = 0.0;
  double max_abs_z = 0.0;
  CheckStatus status = CheckStatus::fail;
};

/// L2 decay of the exact d(h, 0) and envelope fits over convergence.h.
void convergence_l2(const ExperimentConfig& config, ConvergenceResult& out);
/// Monte Carlo mean and variance of the functional for every config.h.
void convergence_monte_carlo(const ExperimentConfig& config, ConvergenceResult& out);
/// Pathwise Cauchy gaps over convergence.seeds substreams.
void convergence_pathwise(const ExperimentConfig& config, ConvergenceResult& out);
ConvergenceResult run_convergence(const ExperimentConfig& config);

// ---- Hermite expansion ---------------------------------------------------

/// c_j = E H_j(eta) f(eta), j = 0..J.  Polynomial f uses Gauss-Hermite
/// quadrature; |x| uses exact absolute moments of the normal law.
std::vector<double> expansion_coefficients(const ExpansionSpec& spec, int J);
/// E f(eta) f(eta') for standard normals with correlation c.
double expansion_correlation(const ExpansionSpec& spec, double c);

struct ExpansionRow {
  double h = 0.0;
  /// Exact E R_J^2 for the continuum integral.
  double tail_exact = 0.0;
  /// Exact E R_J^2 for the grid Riemann sum (Monte Carlo target).
  double tail_discrete = 0.0;
  double mc_second_moment = 0.0;
  double mc_stderr = 0.0;
  double z = 0.0;
  /// sqrt(tail_exact) / (h / sigma(h))^J.
  double normalized_ratio = 0.0;
  /// max |R_J| over the simulated paths.
  double max_abs_remainder = 0.0;
};

struct ExpansionResult {
  std::vector<double> coefficients;
  std::vector<ExpansionRow> rows;
  bool ratio_decreasing = false;
  double max_abs_z = 0.0;
  CheckStatus status = CheckStatus::fail;
};
ExpansionResult run_expansion(const ExperimentConfig& config);

// ---- Orlicz --------------------------------------------------------------

struct OrliczRow {
  double q = 0.0;
  double K = 0.0;
  double x0 = 0.0;
  double G = 0.0;
  double young_max_violation = 0.0;
  double convexity_violation = 0.0;
};

struct OrliczResult {
  std::vector<OrliczRow> rows;
  double gaussian_norm = 0.0;
  double gaussian_oracle = 0.0;
  double chaos_norm = 0.0;
  double chaos_norm_half = 0.0;
  CheckStatus status = CheckStatus::fail;
};
OrliczResult run_orlicz(const ExperimentConfig& config);

// ---- entropy -------------------------------------------------------------

struct EntropyResult {
  MajorizingReport report;
  MajorizingReport halved;
  bool halving_done = false;
  double halving_change = 0.0;
  TriangleReport triangle;
  double diameter = 0.0;
  CheckStatus status = CheckStatus::fail;
};
EntropyResult run_entropy(const ExperimentConfig& config);

// ---- CSV output ----------------------------------------------------------

void write_conditions(const std::string& dir, const ConditionsResult& result);
void write_convergence(const std::string& dir, const ConvergenceResult& result);
void write_expansion(const std::string& dir, const ExpansionResult& result);
void write_orlicz(const std::string& dir, const OrliczResult& result);
void write_entropy(const std::string& dir, const EntropyResult& result);

/// Worst of several statuses: fail over inconclusive over pass.
CheckStatus combine(CheckStatus a, CheckStatus b);

}  // namespace wickchaos
