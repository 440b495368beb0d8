#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace cnmf {

/// Splitmix step used everywhere a derived seed is needed (per-chain seeds,
/// per-replicate seeds). Pure function of the input word.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic pseudorandom generator: identical seeds produce identical
/// draw sequences. All distribution transforms are implemented here rather
/// than taken from <random> so that the sequence does not depend on the
/// standard library version.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  /// Uniform draw on the open interval (0, 1).
  double uniform();

  /// Standard normal via Box-Muller.
  double normal();

  /// Gamma(shape, rate), mean shape/rate. Marsaglia-Tsang for shape >= 1;
  /// for shape < 1 uses the boosted draw Gamma(shape+1) * U^(1/shape).
  double gamma(double shape, double rate);

  /// InvGamma(shape, scale), mean scale/(shape-1) for shape > 1.
  double inv_gamma(double shape, double scale);

  double beta(double a, double b);

  long long poisson(double mean);

  /// Binomial(n, p). Inversion on chunks of at most 512 trials, mirroring
  /// p > 1/2, so the pmf recurrence never underflows.
  long long binomial(long long n, double p);

  /// Dirichlet draw; exact floating-point zeros are left in place.
  Eigen::VectorXd dirichlet(const Eigen::VectorXd& conc);

  /// Multinomial over probs (must sum to 1 within 1e-9); counts sum to n.
  Eigen::VectorXi multinomial(long long n, const Eigen::VectorXd& probs);

  std::uint64_t next_raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cnmf
