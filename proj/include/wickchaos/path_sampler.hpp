#pragma once

#include "wickchaos/increment_variance.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wickchaos {

/// Uniform grid x_i = i * step, 0 <= i <= count.
struct SampleGrid {
  double step = 0.0;
  int count = 0;

  double x(int i) const { return i * step; }
  double span() const { return count * step; }
};

/// Values of G at the grid points of one simulated path, G(0) = 0.
struct GaussianPath {
  SampleGrid grid;
  std::vector<double> values;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string model_tag;
};

/// c(j) = E Y_0 Y_j for the increments Y_i = G((i+1)step) - G(i step).
double increment_autocovariance(const IncrementVarianceModel& model, double step, int j);

/// Exact sampler for the increment sequence of a stationary-increment
/// Gaussian process; the embedding is computed once and reused.
class CirculantSampler {
 public:
  CirculantSampler(const IncrementVarianceModel& model, SampleGrid grid, double tol_eig = 1e-10);

  /// Path for substream `stream` of `seed`.
  GaussianPath sample(std::uint64_t seed, std::uint64_t stream = 0) const;

  const SampleGrid& grid() const { return grid_; }
  /// True when the circulant embedding was rejected and the dense
  /// eigen-factorization of the Toeplitz covariance is used instead.
  bool uses_fallback() const { return fallback_; }
  int embedding_size() const { return static_cast<int>(eigenvalues_.size()); }
  const Eigen::VectorXd& embedding_eigenvalues() const { return eigenvalues_; }
  /// min eigenvalue / max eigenvalue of the embedding (negative mass ratio).
  double min_eigenvalue_ratio() const;

 private:
  IncrementVarianceModel model_;
  SampleGrid grid_;
  bool fallback_ = false;
  Eigen::VectorXd eigenvalues_;
  Eigen::VectorXd sqrt_scaled_;
  Eigen::MatrixXd dense_factor_;
};

/// One-shot convenience wrapper around CirculantSampler.
GaussianPath sample_path(const IncrementVarianceModel& model, SampleGrid grid, std::uint64_t seed,
                         std::uint64_t stream = 0);

/// A pair of increments G(x) - G(x_lo) and G(y) - G(y_lo), as grid indices.
struct IncrementProbe {
  int x_lo, x, y_lo, y;
};

struct ProbeResult {
  IncrementProbe probe;
  double exact = 0.0;
  double empirical = 0.0;
  double stderr_ = 0.0;
  double z = 0.0;
};

struct CovarianceCheck {
  std::vector<ProbeResult> probes;
  double max_abs_z = 0.0;
};

/// Empirical covariance of each probe pair over the paths against the
/// closed-form increment covariance (paths are mean zero by construction).
/// Needs at least 100 paths.
CovarianceCheck verify_path_covariance(const std::vector<GaussianPath>& paths,
                                       const IncrementVarianceModel& model,
                                       const std::vector<IncrementProbe>& probes);

/// CSV with header i,x,G.
void write_path_csv(std::ostream& out, const GaussianPath& path);

}  // namespace wickchaos
