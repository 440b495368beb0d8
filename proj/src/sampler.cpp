#include "cnmf/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "cnmf/errors.hpp"
#include "cnmf/selection.hpp"
#include "hungarian_impl.hpp"

namespace cnmf {

void SamplerConfig::validate() const {
  if (n_iter < 1) throw std::invalid_argument("SamplerConfig: n_iter must be positive");
  if (burn_in < 0 || burn_in >= n_iter)
    throw std::invalid_argument("SamplerConfig: need 0 <= burn_in < n_iter");
  if (thin < 1) throw std::invalid_argument("SamplerConfig: thin must be >= 1");
  if (n_chains < 1) throw std::invalid_argument("SamplerConfig: n_chains must be >= 1");
}

double PosteriorSamples::mean_retained_log_post() const {
  const int n = static_cast<int>(log_post.size());
  const int start = sampler_config.burn_in;
  double sum = 0.0;
  int count = 0;
  for (int it = start; it < n; ++it) {
    sum += log_post[it];
    ++count;
  }
  return count > 0 ? sum / count : -std::numeric_limits<double>::infinity();
}

Eigen::VectorXd PosteriorSamples::mu_mean() const {
  if (mu.empty()) throw std::logic_error("PosteriorSamples: no retained draws");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(mu[0].size());
  for (const auto& m : mu) out += m;
  return out / static_cast<double>(mu.size());
}

Eigen::MatrixXd PosteriorSamples::R_mean() const {
  if (R.empty()) throw std::logic_error("PosteriorSamples: no retained draws");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(R[0].rows(), R[0].cols());
  for (const auto& m : R) out += m;
  return out / static_cast<double>(R.size());
}

Eigen::MatrixXd PosteriorSamples::Theta_mean() const {
  if (Theta.empty()) throw std::logic_error("PosteriorSamples: no retained draws");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(Theta[0].rows(), Theta[0].cols());
  for (const auto& m : Theta) out += m;
  return out / static_cast<double>(Theta.size());
}

Eigen::VectorXd sample_signature_column(const Eigen::VectorXd& channel_counts,
                                        const Eigen::VectorXd& prior_base, Rng& rng) {
  if (channel_counts.size() != prior_base.size())
    throw std::invalid_argument("sample_signature_column: size mismatch");
  return rng.dirichlet(prior_base + channel_counts);
}

double sample_loading(double shape, long long y_jk, double mu_k, Rng& rng) {
  return rng.gamma(shape + static_cast<double>(y_jk), shape / mu_k + 1.0);
}

double sample_relevance(double shape, int J, double theta_sum, const ModelConfig& config,
                        Rng& rng) {
  if (config.fixed_strength) {
    return rng.inv_gamma(config.fixed_strength->a0 + shape * J,
                         config.fixed_strength->b0 + shape * theta_sum);
  }
  return rng.inv_gamma(2.0 * shape * J + 1.0,
                       config.epsilon * shape * J + shape * theta_sum);
}

void gibbs_step_latent(ChainState& state, const CountMatrix& data, Rng& rng) {
  const int I = data.I(), J = data.J();
  const int K = static_cast<int>(state.R.cols());
  Eigen::VectorXd q(K);
  for (int j = 0; j < J; ++j) {
    for (int i = 0; i < I; ++i) {
      const int x = data.counts(i, j);
      if (x == 0) {
        for (int k = 0; k < K; ++k) state.Y.at(i, j, k) = 0;
        continue;
      }
      double total = 0.0;
      for (int k = 0; k < K; ++k) {
        q[k] = state.R(i, k) * state.Theta(k, j);
        total += q[k];
      }
      if (!(total > 0.0))
        throw std::logic_error("gibbs_step_latent: X_ij > 0 where Q_ij = 0");
      q /= total;
      const Eigen::VectorXi draw = rng.multinomial(x, q);
      for (int k = 0; k < K; ++k) state.Y.at(i, j, k) = draw[k];
    }
  }
}

void gibbs_step_signatures(ChainState& state, const ModelConfig& config, Rng& rng) {
  const int I = static_cast<int>(state.R.rows());
  const int Ktot = static_cast<int>(state.R.cols());
  const Eigen::MatrixXd counts = state.Y.channel_factor_sums();
  Eigen::VectorXd base(I);
  for (int k = 0; k < Ktot; ++k) {
    if (config.factor_is_pre(k))
      base = config.informative->beta[k] * config.informative->S.col(k);
    else
      base.setConstant(config.alpha);
    state.R.col(k) = sample_signature_column(counts.col(k), base, rng);
  }
}

void gibbs_step_loadings(ChainState& state, const ModelConfig& config, Rng& rng) {
  const int J = static_cast<int>(state.Theta.cols());
  const int Ktot = static_cast<int>(state.Theta.rows());
  for (int k = 0; k < Ktot; ++k) {
    const double s = config.loading_shape(k);
    for (int j = 0; j < J; ++j) {
      state.Theta(k, j) = sample_loading(s, state.Y.sample_factor_sum(j, k), state.mu[k], rng);
    }
  }
}

void gibbs_step_relevance(ChainState& state, const ModelConfig& config, Rng& rng) {
  const int J = static_cast<int>(state.Theta.cols());
  const int Ktot = static_cast<int>(state.Theta.rows());
  for (int k = 0; k < Ktot; ++k) {
    state.mu[k] = sample_relevance(config.loading_shape(k), J, state.Theta.row(k).sum(),
                                   config, rng);
  }
}

ChainState init_from_prior(const CountMatrix& data, const ModelConfig& config, Rng& rng) {
  const int I = data.I(), J = data.J();
  const int Ktot = config.total_factors();
  ChainState state;
  state.R.resize(I, Ktot);
  state.Theta.resize(Ktot, J);
  state.mu.resize(Ktot);
  state.Y = LatentCounts(I, J, Ktot);

  Eigen::VectorXd base(I);
  for (int k = 0; k < Ktot; ++k) {
    const double s = config.loading_shape(k);
    if (config.fixed_strength)
      state.mu[k] = rng.inv_gamma(config.fixed_strength->a0, config.fixed_strength->b0);
    else
      state.mu[k] = rng.inv_gamma(s * J + 1.0, config.epsilon * s * J);
    if (config.factor_is_pre(k))
      base = config.informative->beta[k] * config.informative->S.col(k);
    else
      base.setConstant(config.alpha);
    state.R.col(k) = rng.dirichlet(base);
    for (int j = 0; j < J; ++j) state.Theta(k, j) = rng.gamma(s, s / state.mu[k]);
  }
  gibbs_step_latent(state, data, rng);
  return state;
}

namespace {

// Hungarian relabeling of the catalog block: non-compressed columns
// (mu_k > 5 eps) are reassigned to the catalog slot they resemble most;
// compressed columns fill the remaining slots, preserving order. The whole
// per-factor block (R column, Theta row, mu, Y slice) moves together.
void rematch_catalog_block(ChainState& state, const ModelConfig& config) {
  const int Kpre = config.pre_factors();
  if (Kpre == 0) return;
  std::vector<int> active;
  for (int k = 0; k < Kpre; ++k)
    if (state.mu[k] > 5.0 * config.epsilon) active.push_back(k);
  if (active.empty()) return;

  std::vector<std::vector<double>> cost(active.size(), std::vector<double>(Kpre, 0.0));
  for (size_t r = 0; r < active.size(); ++r) {
    for (int c = 0; c < Kpre; ++c) {
      cost[r][c] = -cosine_similarity(state.R.col(active[r]), config.informative->S.col(c));
    }
  }
  const std::vector<int> slot_of = detail::min_cost_assignment(cost);

  std::vector<int> perm(static_cast<size_t>(config.total_factors()));
  std::vector<char> slot_taken(Kpre, 0);
  std::vector<char> col_moved(Kpre, 0);
  std::fill(perm.begin(), perm.end(), -1);
  for (size_t r = 0; r < active.size(); ++r) {
    perm[slot_of[r]] = active[r];
    slot_taken[slot_of[r]] = 1;
    col_moved[active[r]] = 1;
  }
  int next_col = 0;
  for (int slot = 0; slot < Kpre; ++slot) {
    if (slot_taken[slot]) continue;
    while (col_moved[next_col]) ++next_col;
    perm[slot] = next_col;
    col_moved[next_col] = 1;
  }
  for (int k = Kpre; k < config.total_factors(); ++k) perm[k] = k;

  bool identity = true;
  for (size_t k = 0; k < perm.size(); ++k)
    if (perm[k] != static_cast<int>(k)) identity = false;
  if (identity) return;

  Eigen::MatrixXd R = state.R;
  Eigen::MatrixXd Theta = state.Theta;
  Eigen::VectorXd mu = state.mu;
  for (size_t k = 0; k < perm.size(); ++k) {
    state.R.col(k) = R.col(perm[k]);
    state.Theta.row(k) = Theta.row(perm[k]);
    state.mu[k] = mu[perm[k]];
  }
  state.Y.permute_factors(perm);
}

}  // namespace

PosteriorSamples run_chain(const CountMatrix& data, const ModelConfig& config,
                           const SamplerConfig& sampler_config, std::uint64_t chain_seed,
                           const InitOverride& init_override) {
  data.validate();
  config.validate(data.I());
  sampler_config.validate();

  Rng rng(chain_seed);
  ChainState state = init_from_prior(data, config, rng);
  if (init_override) init_override(state, chain_seed);

  PosteriorSamples out;
  out.sampler_config = sampler_config;
  out.chain_seed = chain_seed;
  out.K_pre = config.pre_factors();
  out.log_post.reserve(sampler_config.n_iter);
  const int n_keep =
      (sampler_config.n_iter - sampler_config.burn_in) / sampler_config.thin;
  out.R.reserve(n_keep);
  out.Theta.reserve(n_keep);
  out.mu.reserve(n_keep);

  const int rematch_iter =
      (config.pre_factors() > 0 && sampler_config.rematch_enabled)
          ? (2 * sampler_config.burn_in) / 3
          : -1;

  for (int iter = 0; iter < sampler_config.n_iter; ++iter) {
    gibbs_step_latent(state, data, rng);
    gibbs_step_signatures(state, config, rng);
    gibbs_step_loadings(state, config, rng);
    gibbs_step_relevance(state, config, rng);
    state.iteration = iter + 1;

    const double lp = log_posterior(state, data, config);
    if (!std::isfinite(lp))
      throw ConvergenceError("run_chain: non-finite log-posterior at iteration " +
                             std::to_string(iter + 1) + " (seed " +
                             std::to_string(chain_seed) + ")");
    out.log_post.push_back(lp);

    if (iter == rematch_iter) rematch_catalog_block(state, config);

    const int since_burn = iter - sampler_config.burn_in;
    if (since_burn >= 0 && (since_burn + 1) % sampler_config.thin == 0 &&
        out.retained() < n_keep) {
      out.R.push_back(state.R);
      out.Theta.push_back(state.Theta);
      out.mu.push_back(state.mu);
    }
  }
  return out;
}

InferenceResult run_inference(const CountMatrix& data, const ModelConfig& config,
                              const SamplerConfig& sampler_config,
                              const InitOverride& init_override) {
  sampler_config.validate();
  const int n_chains = sampler_config.n_chains;

  InferenceResult result;
  result.chain_seeds.resize(n_chains);
  result.chain_mean_log_post.assign(n_chains, std::numeric_limits<double>::quiet_NaN());
  result.chain_errors.assign(n_chains, "");
  // Documented derivation: chain c runs with splitmix64(seed + c).
  for (int c = 0; c < n_chains; ++c)
    result.chain_seeds[c] = splitmix64(sampler_config.seed + static_cast<std::uint64_t>(c));

  std::vector<PosteriorSamples> chains(n_chains);
  std::vector<char> ok(n_chains, 0);

  const int workers = std::min(n_chains, default_thread_count());
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int c = next.fetch_add(1);
      if (c >= n_chains) return;
      try {
        chains[c] = run_chain(data, config, sampler_config, result.chain_seeds[c],
                              init_override);
        ok[c] = 1;
      } catch (const std::exception& e) {
        result.chain_errors[c] = e.what();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int best = -1;
  double best_lp = -std::numeric_limits<double>::infinity();
  for (int c = 0; c < n_chains; ++c) {
    if (!ok[c]) continue;
    const double lp = chains[c].mean_retained_log_post();
    result.chain_mean_log_post[c] = lp;
    if (std::isfinite(lp) && lp > best_lp) {
      best_lp = lp;
      best = c;
    }
  }
  if (best < 0) {
    std::string msg = "run_inference: all chains failed:";
    for (int c = 0; c < n_chains; ++c)
      msg += "\n  chain " + std::to_string(c) + ": " +
             (result.chain_errors[c].empty() ? "non-finite selection statistic"
                                             : result.chain_errors[c]);
    throw ConvergenceError(msg);
  }
  result.selected = std::move(chains[best]);
  result.selected_chain = best;
  return result;
}

ElicitResult elicit_beta(const Eigen::VectorXd& s, double target_cos, int n_draws,
                         const std::vector<double>& grid, Rng& rng) {
  if (s.size() < 1 || std::fabs(s.sum() - 1.0) > 1e-6 || (s.array() < 0.0).any())
    throw std::domain_error("elicit_beta: s must be a probability vector");
  if (!(target_cos > 0.0) || !(target_cos < 1.0))
    throw std::domain_error("elicit_beta: target_cos must lie in (0, 1)");
  if (n_draws < 1 || grid.empty())
    throw std::domain_error("elicit_beta: need draws and a nonempty grid");

  ElicitResult res;
  if (s.maxCoeff() >= 1.0) {
    // One-hot signature: every draw has cosine 1, the target is unreachable.
    res.beta = *std::min_element(grid.begin(), grid.end());
    res.median_cos = 1.0;
    res.degenerate = true;
    return res;
  }

  const Eigen::VectorXd sn = s / s.norm();
  double best_gap = std::numeric_limits<double>::infinity();
  std::vector<double> cos(n_draws);
  for (const double beta : grid) {
    const Eigen::VectorXd conc = beta * s;
    for (int d = 0; d < n_draws; ++d) {
      const Eigen::VectorXd draw = rng.dirichlet(conc);
      cos[d] = draw.dot(sn) / draw.norm();
    }
    std::sort(cos.begin(), cos.end());
    const double median = n_draws % 2 == 1
                              ? cos[n_draws / 2]
                              : 0.5 * (cos[n_draws / 2 - 1] + cos[n_draws / 2]);
    const double gap = std::fabs(median - target_cos);
    if (gap < best_gap || (gap == best_gap && beta < res.beta)) {
      best_gap = gap;
      res.beta = beta;
      res.median_cos = median;
    }
  }
  return res;
}

std::vector<double> default_beta_grid() {
  std::vector<double> grid(60);
  const double lo = std::log(10.0), hi = std::log(5000.0);
  for (size_t i = 0; i < grid.size(); ++i)
    grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / (grid.size() - 1));
  return grid;
}

int default_thread_count() {
  if (const char* env = std::getenv("CNMF_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace cnmf
