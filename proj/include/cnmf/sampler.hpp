#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cnmf/model.hpp"
#include "cnmf/rng.hpp"

namespace cnmf {

struct SamplerConfig {
  int n_iter = 12000;
  int burn_in = 10000;
  int n_chains = 1;
  std::uint64_t seed = 0;
  int thin = 1;
  bool rematch_enabled = true;  // catalog mode only

  void validate() const;
};

/// Retained post-burn-in draws plus the per-iteration log-posterior trace.
struct PosteriorSamples {
  std::vector<Eigen::MatrixXd> R;      // I x Ktot per draw
  std::vector<Eigen::MatrixXd> Theta;  // Ktot x J per draw
  std::vector<Eigen::VectorXd> mu;     // Ktot per draw
  std::vector<double> log_post;        // length n_iter
  SamplerConfig sampler_config;
  std::uint64_t chain_seed = 0;
  int K_pre = 0;  // width of the catalog block (0 in unsupervised runs)

  int retained() const { return static_cast<int>(mu.size()); }
  double mean_retained_log_post() const;
  Eigen::VectorXd mu_mean() const;
  Eigen::MatrixXd R_mean() const;
  Eigen::MatrixXd Theta_mean() const;
};

// Per-factor conditional draws; the sweep steps below loop these over k.
Eigen::VectorXd sample_signature_column(const Eigen::VectorXd& channel_counts,
                                        const Eigen::VectorXd& prior_base, Rng& rng);
double sample_loading(double shape, long long y_jk, double mu_k, Rng& rng);
double sample_relevance(double shape, int J, double theta_sum, const ModelConfig& config,
                        Rng& rng);

/// Multinomial reallocation of every cell's count across factors,
/// q_ijk = r_ik theta_kj / Q_ij; cells with X_ij = 0 are zeroed directly.
void gibbs_step_latent(ChainState& state, const CountMatrix& data, Rng& rng);

/// Dirichlet update of every signature column from its prior base
/// (beta_k s_k for catalog factors, alpha otherwise) plus channel counts.
void gibbs_step_signatures(ChainState& state, const ModelConfig& config, Rng& rng);

/// theta_kj ~ Gamma(s + Y_jk, s/mu_k + 1).
void gibbs_step_loadings(ChainState& state, const ModelConfig& config, Rng& rng);

/// mu_k ~ InvGamma(2sJ+1, eps s J + s sum_j theta_kj), or the fixed-strength
/// variant InvGamma(a0 + sJ, b0 + s sum_j theta_kj).
void gibbs_step_relevance(ChainState& state, const ModelConfig& config, Rng& rng);

/// Draws (mu, R, Theta) from the prior and runs one latent step.
ChainState init_from_prior(const CountMatrix& data, const ModelConfig& config, Rng& rng);

using InitOverride = std::function<void(ChainState&, std::uint64_t chain_seed)>;

/// One full chain: prior initialization, sweeps in the order latent ->
/// signatures -> loadings -> relevance, log-posterior recorded every
/// iteration, post-burn-in thinned retention. In catalog mode with
/// rematch_enabled, applies one Hungarian relabeling of the non-compressed
/// catalog columns at iteration floor(2 burn_in / 3). The init_override hook
/// lets tests replace the initial state.
PosteriorSamples run_chain(const CountMatrix& data, const ModelConfig& config,
                           const SamplerConfig& sampler_config, std::uint64_t chain_seed,
                           const InitOverride& init_override = {});

struct InferenceResult {
  PosteriorSamples selected;
  int selected_chain = 0;
  std::vector<std::uint64_t> chain_seeds;
  std::vector<double> chain_mean_log_post;  // NaN for chains that aborted
  std::vector<std::string> chain_errors;    // empty string for healthy chains
};

/// Runs n_chains chains with per-chain seeds splitmix64(seed + chain index),
/// in parallel, and returns the chain whose retained-draw mean log-posterior
/// is highest (ties to the lowest chain index). Throws ConvergenceError with
/// every diagnostic if all chains abort.
InferenceResult run_inference(const CountMatrix& data, const ModelConfig& config,
                              const SamplerConfig& sampler_config,
                              const InitOverride& init_override = {});

struct ElicitResult {
  double beta = 0.0;
  double median_cos = 0.0;
  bool degenerate = false;
};

/// Concentration elicitation for a catalog column: picks the grid beta whose
/// median cosine similarity between Dirichlet(beta s) draws and s is closest
/// to target_cos (ties to the smaller beta). A one-hot s is flagged
/// degenerate and maps to the smallest grid value.
ElicitResult elicit_beta(const Eigen::VectorXd& s, double target_cos, int n_draws,
                         const std::vector<double>& grid, Rng& rng);

/// 60 log-spaced values from 10 to 5000.
std::vector<double> default_beta_grid();

/// Worker count for chain/replicate parallelism; the CNMF_THREADS
/// environment variable overrides the hardware default.
int default_thread_count();

}  // namespace cnmf
