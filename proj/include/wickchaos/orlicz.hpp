#pragma once

#include <limits>
#include <span>
#include <vector>

namespace wickchaos {

/// Exponential Young functions psi_q, 0 < q <= infinity:
///   q >= 1     psi(x) = exp(x^q) - 1
///   q = inf    psi(x) = exp(exp(x)) - e
///   0 < q < 1  psi(x) = K_q x on [0, x0], exp(x^q) - 1 beyond,
/// with x0 = (1/q)^{1/q} and K_q = (exp(x0^q) - 1) / x0 (the linear piece
/// makes psi convex near the origin).
class PsiFamily {
 public:
  explicit PsiFamily(double q);

  static constexpr double infinity() { return std::numeric_limits<double>::infinity(); }

  double q() const { return q_; }
  bool is_infinite() const { return q_ == infinity(); }
  /// x0 and K_q; NaN for q >= 1.
  double x0() const { return x0_; }
  double K() const { return K_; }
  /// Young pair constant for q < 1; NaN until with_G or find_Gq sets it.
  double G() const { return G_; }
  bool has_G() const { return G_ == G_; }
  PsiFamily with_G(double G) const;

  double psi(double x) const;
  double psi_inv(double y) const;
  /// Right derivative of psi.
  double dpsi(double x) const;
  double phi(double x) const;
  double lambda(double y) const;

 private:
  double q_;
  double x0_ = std::numeric_limits<double>::quiet_NaN();
  double K_ = std::numeric_limits<double>::quiet_NaN();
  double G_ = std::numeric_limits<double>::quiet_NaN();
};

double psi(double q, double x);
double psi_inv(double q, double y);
/// Phi_q(x): log log(e + x) for q = inf, (log(1 + x))^{1/q} for q >= 1 and
/// (2 log(1 + x / G_q))^{1/q} for q < 1 (throws std::logic_error without G).
double phi_q(const PsiFamily& family, double x);
/// Right-continuous inverse of psi_q' for 0 < q < 1.
double lambda_q(double q, double y);

/// Largest G (to bisection precision) with
///   lambda_q(y) <= (2 log(1 + y / G))^{1/q}
/// for all y on a dense log grid up to 1e8.
double find_Gq(double q);
/// PsiFamily(q) with G set by find_Gq when q < 1.
PsiFamily make_psi_family(double q);

struct YoungReport {
  double max_violation = 0.0;
  double worst_x = 0.0;
  double worst_y = 0.0;
  bool pass = true;
};

/// Sweeps  xy <= psi(x) + y psi^{-1}(y)          (q >= 1)
///         xy <= psi(x) + y (2 log(1 + y/G))^{1/q} (q < 1)
/// over grid_x x grid_y.  Violations are measured relative to
/// max(1, xy) and pass iff <= 1e-10.
YoungReport young_check(const PsiFamily& family, std::span<const double> grid_x,
                        std::span<const double> grid_y);

/// Largest normalized violation of convexity of psi on the grid (slopes of
/// consecutive chords must not decrease).  Points where psi overflows are
/// skipped.
double psi_convexity_violation(const PsiFamily& family, std::span<const double> grid);

/// Luxemburg norm of the empirical law: inf{c > 0 : mean psi(|xi|/c) <= 1}.
/// Needs at least 1000 samples; returns 0 when all samples vanish.
double orlicz_norm_empirical(std::span<const double> samples, double q);

}  // namespace wickchaos
