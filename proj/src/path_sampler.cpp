#include "wickchaos/path_sampler.hpp"

#include "wickchaos/rng.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wickchaos {

double increment_autocovariance(const IncrementVarianceModel& model, double step, int j) {
  if (!(step > 0.0)) throw std::invalid_argument("increment_autocovariance: step must be positive");
  if (j < 0) throw std::invalid_argument("increment_autocovariance: lag must be nonnegative");
  if (j == 0) return model.sigma2(step);
  // c(j) = step^2 B_{j step}(step, step); this form avoids the cancellation
  // of the three-term second difference at large lags.
  return step * step * b_kernel(model, j * step, step, step);
}

CirculantSampler::CirculantSampler(const IncrementVarianceModel& model, SampleGrid grid,
                                   double tol_eig)
    : model_(model), grid_(grid) {
  if (!(grid.step > 0.0) || grid.count < 1) throw std::invalid_argument("CirculantSampler: bad grid");
  const int n = grid.count;
  int m = 1;
  while (m < 2 * n) m *= 2;

  std::vector<std::complex<double>> row(m);
  for (int j = 0; j <= m / 2; ++j) row[j] = increment_autocovariance(model, grid.step, j);
  for (int j = 1; j < m / 2; ++j) row[m - j] = row[j];
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spectrum;
  fft.fwd(spectrum, row);
  eigenvalues_.resize(m);
  for (int i = 0; i < m; ++i) eigenvalues_[i] = spectrum[i].real();

  const double max_ev = eigenvalues_.maxCoeff();
  const double min_ev = eigenvalues_.minCoeff();
  if (min_ev >= -tol_eig * max_ev) {
    sqrt_scaled_ = (eigenvalues_.cwiseMax(0.0) / m).cwiseSqrt();
    return;
  }

  fallback_ = true;
  Eigen::MatrixXd cov(n, n);
  std::vector<double> c(n);
  for (int j = 0; j < n; ++j) c[j] = increment_autocovariance(model, grid.step, j);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cov(i, j) = c[std::abs(i - j)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  if (ev.minCoeff() < -tol_eig * std::abs(ev.maxCoeff())) {
    std::ostringstream os;
    os << "increment covariance is not positive semidefinite: eigenvalue " << std::setprecision(6)
       << ev.minCoeff();
    throw std::domain_error(os.str());
  }
  dense_factor_ = solver.eigenvectors() * ev.cwiseMax(0.0).cwiseSqrt().asDiagonal();
}

double CirculantSampler::min_eigenvalue_ratio() const {
  return eigenvalues_.minCoeff() / eigenvalues_.maxCoeff();
}

GaussianPath CirculantSampler::sample(std::uint64_t seed, std::uint64_t stream) const {
  const int n = grid_.count;
  Philox4x32 engine(seed, stream);
  std::normal_distribution<double> normal;
  std::vector<double> increments(n);

  if (!fallback_) {
    const int m = static_cast<int>(sqrt_scaled_.size());
    std::vector<std::complex<double>> noise(m);
    for (int i = 0; i < m; ++i) {
      const double re = normal(engine);
      const double im = normal(engine);
      noise[i] = sqrt_scaled_[i] * std::complex<double>(re, im);
    }
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> out;
    fft.fwd(out, noise);
    for (int i = 0; i < n; ++i) increments[i] = out[i].real();
  } else {
    Eigen::VectorXd z(n);
    for (int i = 0; i < n; ++i) z[i] = normal(engine);
    const Eigen::VectorXd y = dense_factor_ * z;
    for (int i = 0; i < n; ++i) increments[i] = y[i];
  }

  GaussianPath path{grid_, std::vector<double>(n + 1, 0.0), seed, stream, model_.tag()};
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    acc += increments[i];
    path.values[i + 1] = acc;
  }
  return path;
}

GaussianPath sample_path(const IncrementVarianceModel& model, SampleGrid grid, std::uint64_t seed,
                         std::uint64_t stream) {
  return CirculantSampler(model, grid).sample(seed, stream);
}

CovarianceCheck verify_path_covariance(const std::vector<GaussianPath>& paths,
                                       const IncrementVarianceModel& model,
                                       const std::vector<IncrementProbe>& probes) {
  if (paths.size() < 100) throw std::invalid_argument("verify_path_covariance: insufficient sample");
  CovarianceCheck check;
  const double count = static_cast<double>(paths.size());
  for (const auto& probe : probes) {
    const SampleGrid& grid = paths.front().grid;
    for (int idx : {probe.x_lo, probe.x, probe.y_lo, probe.y}) {
      if (idx < 0 || idx > grid.count) throw std::out_of_range("verify_path_covariance: probe off grid");
    }
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& path : paths) {
      const double a = path.values[probe.x] - path.values[probe.x_lo];
      const double b = path.values[probe.y] - path.values[probe.y_lo];
      sum += a * b;
      sum_sq += a * b * a * b;
    }
    ProbeResult res;
    res.probe = probe;
    res.exact = increment_cross_covariance(model, grid.x(probe.x), grid.x(probe.x_lo),
                                           grid.x(probe.y), grid.x(probe.y_lo));
    res.empirical = sum / count;
    const double var = (sum_sq - count * res.empirical * res.empirical) / (count - 1.0);
    res.stderr_ = std::sqrt(std::max(var, 0.0) / count);
    res.z = res.stderr_ > 0.0 ? (res.empirical - res.exact) / res.stderr_ : 0.0;
    check.max_abs_z = std::max(check.max_abs_z, std::abs(res.z));
    check.probes.push_back(res);
  }
  return check;
}

void write_path_csv(std::ostream& out, const GaussianPath& path) {
  out << "i,x,G\n" << std::setprecision(17);
  for (int i = 0; i <= path.grid.count; ++i) {
    out << i << ',' << path.grid.x(i) << ',' << path.values[i] << '\n';
  }
}

}  // namespace wickchaos
