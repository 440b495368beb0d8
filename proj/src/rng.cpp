#include "cnmf/rng.hpp"

#include <cmath>
#include <stdexcept>

#include "cnmf/errors.hpp"

namespace cnmf {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double Rng::uniform() {
  double u;
  do {
    u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  } while (u <= 0.0);
  return u;
}

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double Rng::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::domain_error("gamma: shape and rate must be positive");
  if (shape < 1.0) {
    // Boost: if G ~ Gamma(shape+1, 1) and U uniform, G * U^(1/shape) ~ Gamma(shape, 1).
    const double g = gamma(shape + 1.0, 1.0);
    const double u = uniform();
    return g * std::exp(std::log(u) / shape) / rate;
  }
  // Marsaglia-Tsang squeeze.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v / rate;
  }
}

double Rng::inv_gamma(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0))
    throw std::domain_error("inv_gamma: shape and scale must be positive");
  return scale / gamma(shape, 1.0);
}

double Rng::beta(double a, double b) {
  const double x = gamma(a, 1.0);
  const double y = gamma(b, 1.0);
  const double s = x + y;
  if (s <= 0.0) throw ConvergenceError("beta: both gamma draws underflowed");
  return x / s;
}

namespace {

// Inversion by pmf recurrence; valid for n <= 512 and p <= 1/2.
long long binomial_inversion(long long n, double p, double u) {
  const double q = 1.0 - p;
  const double r = p / q;
  double pdf = std::pow(q, static_cast<double>(n));
  double cdf = pdf;
  long long k = 0;
  while (u > cdf && k < n) {
    pdf *= r * static_cast<double>(n - k) / static_cast<double>(k + 1);
    ++k;
    cdf += pdf;
  }
  return k;
}

}  // namespace

long long Rng::binomial(long long n, double p) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (!(p >= 0.0) || !(p <= 1.0))
    throw std::domain_error("binomial: p must lie in [0, 1]");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  if (p > 0.5) return n - binomial(n, 1.0 - p);
  long long total = 0;
  long long remaining = n;
  while (remaining > 0) {
    const long long chunk = remaining > 512 ? 512 : remaining;
    total += binomial_inversion(chunk, p, uniform());
    remaining -= chunk;
  }
  return total;
}

long long Rng::poisson(double mean) {
  if (!(mean >= 0.0)) throw std::domain_error("poisson: mean must be nonnegative");
  if (mean == 0.0) return 0;
  if (mean < 30.0) {
    // Knuth product-of-uniforms; e^-mean stays far from underflow here.
    const double limit = std::exp(-mean);
    long long k = 0;
    double prod = uniform();
    while (prod > limit) {
      ++k;
      prod *= uniform();
    }
    return k;
  }
  // Hormann's transformed rejection with squeeze (PTRS), valid for mean >= 10.
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  for (;;) {
    const double u = uniform() - 0.5;
    const double v = uniform();
    const double us = 0.5 - std::fabs(u);
    const double kd = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<long long>(kd);
    if (kd < 0.0 || (us < 0.013 && v > us)) continue;
    const double k = kd;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * log_mean - mean - std::lgamma(k + 1.0)) {
      return static_cast<long long>(kd);
    }
  }
}

Eigen::VectorXd Rng::dirichlet(const Eigen::VectorXd& conc) {
  const Eigen::Index n = conc.size();
  if (n < 1) throw std::domain_error("dirichlet: empty concentration vector");
  Eigen::VectorXd out(n);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    out[i] = gamma(conc[i], 1.0);
    sum += out[i];
  }
  if (sum <= 0.0) throw ConvergenceError("dirichlet: all gamma draws underflowed to zero");
  out /= sum;
  return out;
}

Eigen::VectorXi Rng::multinomial(long long n, const Eigen::VectorXd& probs) {
  if (n < 0) throw std::domain_error("multinomial: n must be nonnegative");
  const Eigen::Index k = probs.size();
  if (k < 1) throw std::domain_error("multinomial: empty probability vector");
  const double total = probs.sum();
  if (std::fabs(total - 1.0) > 1e-9)
    throw std::domain_error("multinomial: probabilities must sum to 1 within 1e-9");
  for (Eigen::Index i = 0; i < k; ++i)
    if (probs[i] < 0.0) throw std::domain_error("multinomial: negative probability");

  Eigen::VectorXi out = Eigen::VectorXi::Zero(k);
  if (n == 0) return out;
  long long remaining = n;
  double rest = total;
  for (Eigen::Index i = 0; i + 1 < k && remaining > 0; ++i) {
    double pc = rest > 0.0 ? probs[i] / rest : 1.0;
    if (pc > 1.0) pc = 1.0;
    const long long draw = binomial(remaining, pc);
    out[i] = static_cast<int>(draw);
    remaining -= draw;
    rest -= probs[i];
  }
  out[k - 1] += static_cast<int>(remaining);
  return out;
}

}  // namespace cnmf
