#pragma once

#include <vector>

#include "cnmf/rng.hpp"

namespace cnmf {

/// Parameters of the inverse Kummer law: density proportional to
///   mu^(-(lambda-gamma)-1) * (1 + mu/delta)^(-gamma) * exp(-beta/mu)
/// on (0, inf). Reduces to InvGamma(lambda, beta) at gamma = 0.
struct InvKummerParams {
  double lambda = 1.0;
  double beta = 1.0;
  double gamma = 0.0;
  double delta = 1.0;

  void validate() const;  // lambda, beta, delta positive; gamma unrestricted
};

/// log of the normalizing denominator delta^(gamma-lambda) Gamma(lambda)
/// U(lambda, lambda+1-gamma, beta/delta).
double inv_kummer_log_norm(const InvKummerParams& p);

double inv_kummer_log_pdf(double mu, const InvKummerParams& p);

/// Overload taking a precomputed inv_kummer_log_norm, for dense evaluation.
double inv_kummer_log_pdf(double mu, const InvKummerParams& p, double log_norm);

/// m-th moment, m < lambda:
///   delta^m Gamma(lambda-m)/Gamma(lambda)
///     * U(lambda-m, lambda-m+1-gamma, beta/delta) / U(lambda, lambda+1-gamma, beta/delta)
double inv_kummer_moment(int m, const InvKummerParams& p);

/// Concentration point mu* of the posterior of a relevance weight as the
/// sample count grows, evaluated in a cancellation-free form:
///   mu* = 2 a eps / (sqrt((y-a+eps)^2 + 8 a eps) - (y-a+eps)).
double concentration_point(double epsilon, double y, double a);

/// Two-branch first-order approximation of mu*, intended for eps << |y-a|:
/// (y-a)/2 above the knee, eps*a*(a-y)/((a-y)^2 + (a+y) eps) below it.
double concentration_point_approx(double epsilon, double y, double a);

/// Tabulated CDF of an inverse Kummer law on a log-spaced grid, refined until
/// the interpolation error between successive refinements is below 1e-6.
/// Test-oracle and quantile machinery; robustness is preferred over speed.
class InvKummerGrid {
 public:
  explicit InvKummerGrid(const InvKummerParams& p, int initial_nodes = 4096);

  double quantile(double u) const;
  double cdf(double mu) const;
  double sample(Rng& rng) const { return quantile(rng.uniform()); }

 private:
  std::vector<double> mu_;
  std::vector<double> cdf_;
};

/// Single draw via a freshly built grid; prefer InvKummerGrid for batches.
double inv_kummer_sample(const InvKummerParams& p, Rng& rng);

}  // namespace cnmf
