#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "cnmf/rng.hpp"
#include "cnmf/sampler.hpp"
#include "cnmf/types.hpp"

namespace cnmf {

/// Fixed-truncation spike-and-slab stick-breaking baseline for Poisson
/// factorization. Loadings factor multiplicatively as theta_kj =
/// vartheta_kj * mu_k, and the spike probability increases with the factor
/// index through the cumulative stick weights.
struct CuspConfig {
  int K = 20;            // truncation
  double a = 1.0;        // individual-loading gamma shape
  double alpha = 0.5;    // signature Dirichlet concentration
  double alpha_pi = 5.0; // stick-breaking Beta(1, alpha_pi) concentration
  double mu_inf = 0.01;  // spike location
  double a0 = 1.0;       // slab Gamma(a0, b0)
  double b0 = 1.0;

  void validate() const;
};

struct CuspState {
  Eigen::MatrixXd R;         // I x K
  Eigen::MatrixXd vartheta;  // K x J individual loadings
  Eigen::VectorXd mu;        // K column relevances (== mu_inf when spiked)
  Eigen::VectorXd v;         // K sticks, v[K-1] == 1
  Eigen::VectorXd phi;       // K stick weights, sums to 1
  Eigen::VectorXi Z;         // K spike-allocation indicators, values in 1..K
  LatentCounts Y;

  /// Effective loading matrix theta_kj = vartheta_kj mu_k.
  Eigen::MatrixXd theta() const;
  /// Factor k (0-based) sits in the spike iff Z[k] <= k+1.
  bool spiked(int k) const { return Z[k] <= k + 1; }
  int active_count() const;
};

// The seven sweep updates, exposed individually so tests can force states.
void cusp_step_latent(CuspState& state, const CountMatrix& data, Rng& rng);
void cusp_step_individual_loadings(CuspState& state, const CuspConfig& config, Rng& rng);
void cusp_step_signatures(CuspState& state, const CuspConfig& config, Rng& rng);
/// Two-branch categorical update of Z_k in the log domain: spike branch
/// phi_l mu_inf^(sum Y) exp(-mu_inf sum vartheta) for l <= k, slab branch
/// phi_l b0^a0/Gamma(a0) * Gamma(a0 + sum Y)/(b0 + sum vartheta)^(a0 + sum Y)
/// for l > k.
void cusp_step_spike_allocation(CuspState& state, const CuspConfig& config, Rng& rng);
void cusp_step_sticks(CuspState& state, const CuspConfig& config, Rng& rng);
void cusp_recompute_weights(CuspState& state);
/// mu_k = mu_inf when spiked, else Gamma(a0 + sum_ij Y_ijk, b0 + sum_j vartheta_kj).
void cusp_step_relevance(CuspState& state, const CuspConfig& config, Rng& rng);

/// All seven updates in order.
void cusp_sweep(CuspState& state, const CountMatrix& data, const CuspConfig& config, Rng& rng);

CuspState cusp_init(const CountMatrix& data, const CuspConfig& config, Rng& rng);

struct CuspSamples {
  std::vector<Eigen::MatrixXd> R;
  std::vector<Eigen::MatrixXd> Theta;  // effective loadings
  std::vector<Eigen::VectorXd> mu;
  std::vector<Eigen::VectorXi> Z;
  std::vector<double> log_lik;  // Poisson log-likelihood trace, all iterations
  CuspConfig config;
  SamplerConfig sampler_config;
  std::uint64_t chain_seed = 0;

  int retained() const { return static_cast<int>(mu.size()); }
  /// Majority vote of the per-draw active counts #{k : Z_k > k}.
  int k_star_majority() const;
  /// Per-factor posterior spike probabilities.
  Eigen::VectorXd spike_probability() const;
  /// Alternative report: #{k : spike probability < cut}.
  int k_star_spike_prob(double cut = 0.05) const;
  Eigen::VectorXd mu_mean() const;
  Eigen::MatrixXd R_mean() const;
  Eigen::MatrixXd Theta_mean() const;
};

CuspSamples run_cusp_chain(const CountMatrix& data, const CuspConfig& config,
                           const SamplerConfig& sampler_config, std::uint64_t chain_seed);

}  // namespace cnmf
