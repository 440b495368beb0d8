#include "cnmf/inv_kummer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cnmf/errors.hpp"
#include "cnmf/special.hpp"

namespace cnmf {

void InvKummerParams::validate() const {
  if (!(lambda > 0.0) || !(beta > 0.0) || !(delta > 0.0))
    throw std::domain_error("InvKummerParams: lambda, beta, delta must be positive");
}

double inv_kummer_log_norm(const InvKummerParams& p) {
  p.validate();
  return (p.gamma - p.lambda) * std::log(p.delta) + std::lgamma(p.lambda) +
         log_kummer_u(p.lambda, p.lambda + 1.0 - p.gamma, p.beta / p.delta);
}

double inv_kummer_log_pdf(double mu, const InvKummerParams& p, double log_norm) {
  if (!(mu > 0.0)) throw std::domain_error("inv_kummer_log_pdf: mu must be positive");
  return -(p.lambda - p.gamma + 1.0) * std::log(mu) -
         p.gamma * std::log1p(mu / p.delta) - p.beta / mu - log_norm;
}

double inv_kummer_log_pdf(double mu, const InvKummerParams& p) {
  return inv_kummer_log_pdf(mu, p, inv_kummer_log_norm(p));
}

double inv_kummer_moment(int m, const InvKummerParams& p) {
  p.validate();
  if (m <= 0) throw std::domain_error("inv_kummer_moment: m must be a positive integer");
  if (!(m < p.lambda)) throw std::domain_error("inv_kummer_moment: requires m < lambda");
  const double lm = p.lambda - m;
  const double z = p.beta / p.delta;
  const double log_ratio = log_kummer_u(lm, lm + 1.0 - p.gamma, z) -
                           log_kummer_u(p.lambda, p.lambda + 1.0 - p.gamma, z);
  return std::exp(m * std::log(p.delta) + std::lgamma(lm) - std::lgamma(p.lambda) + log_ratio);
}

double concentration_point(double epsilon, double y, double a) {
  if (!(epsilon > 0.0) || !(a > 0.0) || !(y >= 0.0))
    throw std::domain_error("concentration_point: need epsilon > 0, a > 0, y >= 0");
  const double q = y - a + epsilon;
  const double root = std::sqrt(q * q + 8.0 * a * epsilon);
  // Rationalized when q > 0, where root - q would cancel.
  if (q > 0.0) return (root + q) / 4.0;
  return 2.0 * a * epsilon / (root - q);
}

double concentration_point_approx(double epsilon, double y, double a) {
  if (!(epsilon > 0.0) || !(a > 0.0) || !(y >= 0.0))
    throw std::domain_error("concentration_point_approx: need epsilon > 0, a > 0, y >= 0");
  if (y > a) return 0.5 * (y - a);
  const double d = a - y;
  return epsilon * a * d / (d * d + (a + y) * epsilon);
}

namespace {

// Stationary point of the log density (positive root of
// (lambda+1)/delta x^2 - (gamma-lambda-1+beta/delta) x - beta = 0).
double pdf_mode(const InvKummerParams& p) {
  const double A = (p.lambda + 1.0) / p.delta;
  const double B = p.gamma - p.lambda - 1.0 + p.beta / p.delta;
  const double disc = std::sqrt(B * B + 4.0 * A * p.beta);
  if (B <= 0.0) return 2.0 * p.beta / (disc - B);
  return (B + disc) / (2.0 * A);
}

}  // namespace

InvKummerGrid::InvKummerGrid(const InvKummerParams& p, int initial_nodes) {
  p.validate();
  if (initial_nodes < 16) initial_nodes = 16;

  // Unnormalized log density; the normalizer cancels in the grid CDF.
  const auto core = [&](double mu) {
    return -(p.lambda - p.gamma + 1.0) * std::log(mu) -
           p.gamma * std::log1p(mu / p.delta) - p.beta / mu;
  };

  const double mode = pdf_mode(p);
  const double peak = core(mode);
  double lo = mode, hi = mode;
  for (int it = 0; it < 4000 && core(lo) > peak - 80.0; ++it) lo *= 0.5;
  for (int it = 0; it < 4000 && core(hi) > peak - 80.0; ++it) hi *= 2.0;

  const auto build = [&](int n, std::vector<double>& mu, std::vector<double>& cdf) {
    mu.resize(n);
    cdf.resize(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) mu[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    std::vector<double> pdf(n);
    for (int i = 0; i < n; ++i) pdf[i] = std::exp(core(mu[i]) - peak);
    cdf[0] = 0.0;
    for (int i = 1; i < n; ++i)
      cdf[i] = cdf[i - 1] + 0.5 * (pdf[i] + pdf[i - 1]) * (mu[i] - mu[i - 1]);
    const double total = cdf[n - 1];
    if (!(total > 0.0)) throw ConvergenceError("InvKummerGrid: density mass vanished");
    for (int i = 0; i < n; ++i) cdf[i] /= total;
  };

  build(initial_nodes, mu_, cdf_);
  for (int n = 2 * initial_nodes; n <= (1 << 19); n *= 2) {
    std::vector<double> mu2, cdf2;
    build(n, mu2, cdf2);
    // Error between refinements, measured at the finer nodes.
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
      const double ref = cdf2[i];
      const auto it = std::upper_bound(mu_.begin(), mu_.end(), mu2[i]);
      double coarse;
      if (it == mu_.begin())
        coarse = 0.0;
      else if (it == mu_.end())
        coarse = 1.0;
      else {
        const auto j = static_cast<size_t>(it - mu_.begin());
        const double f = (mu2[i] - mu_[j - 1]) / (mu_[j] - mu_[j - 1]);
        coarse = cdf_[j - 1] + f * (cdf_[j] - cdf_[j - 1]);
      }
      err = std::max(err, std::fabs(ref - coarse));
    }
    mu_.swap(mu2);
    cdf_.swap(cdf2);
    if (err < 1e-6) return;
  }
  throw ConvergenceError("InvKummerGrid: CDF refinement exceeded the node cap");
}

double InvKummerGrid::quantile(double u) const {
  if (!(u >= 0.0) || !(u <= 1.0)) throw std::domain_error("quantile: u must lie in [0, 1]");
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.begin()) return mu_.front();
  if (it == cdf_.end()) return mu_.back();
  const auto j = static_cast<size_t>(it - cdf_.begin());
  const double c0 = cdf_[j - 1], c1 = cdf_[j];
  const double f = c1 > c0 ? (u - c0) / (c1 - c0) : 0.0;
  return mu_[j - 1] + f * (mu_[j] - mu_[j - 1]);
}

double InvKummerGrid::cdf(double mu) const {
  if (mu <= mu_.front()) return 0.0;
  if (mu >= mu_.back()) return 1.0;
  const auto it = std::upper_bound(mu_.begin(), mu_.end(), mu);
  const auto j = static_cast<size_t>(it - mu_.begin());
  const double f = (mu - mu_[j - 1]) / (mu_[j] - mu_[j - 1]);
  return cdf_[j - 1] + f * (cdf_[j] - cdf_[j - 1]);
}

double inv_kummer_sample(const InvKummerParams& p, Rng& rng) {
  return InvKummerGrid(p).sample(rng);
}

}  // namespace cnmf
