#include "cnmf/cusp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cnmf/errors.hpp"

namespace cnmf {

void CuspConfig::validate() const {
  if (K < 1) throw std::invalid_argument("CuspConfig: K must be >= 1");
  if (!(a > 0.0) || !(alpha > 0.0) || !(alpha_pi > 0.0) || !(mu_inf > 0.0) ||
      !(a0 > 0.0) || !(b0 > 0.0))
    throw std::domain_error("CuspConfig: all parameters must be positive");
}

Eigen::MatrixXd CuspState::theta() const {
  return vartheta.array().colwise() * mu.array();
}

int CuspState::active_count() const {
  int n = 0;
  for (int k = 0; k < Z.size(); ++k)
    if (!spiked(k)) ++n;
  return n;
}

void cusp_step_latent(CuspState& state, const CountMatrix& data, Rng& rng) {
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
        q[k] = state.R(i, k) * state.vartheta(k, j) * state.mu[k];
        total += q[k];
      }
      if (!(total > 0.0))
        throw std::logic_error("cusp_step_latent: X_ij > 0 where the rate is zero");
      q /= total;
      const Eigen::VectorXi draw = rng.multinomial(x, q);
      for (int k = 0; k < K; ++k) state.Y.at(i, j, k) = draw[k];
    }
  }
}

void cusp_step_individual_loadings(CuspState& state, const CuspConfig& config, Rng& rng) {
  const int J = static_cast<int>(state.vartheta.cols());
  const int K = static_cast<int>(state.vartheta.rows());
  for (int k = 0; k < K; ++k)
    for (int j = 0; j < J; ++j)
      state.vartheta(k, j) = rng.gamma(
          config.a + static_cast<double>(state.Y.sample_factor_sum(j, k)),
          config.a + state.mu[k]);
}

void cusp_step_signatures(CuspState& state, const CuspConfig& config, Rng& rng) {
  const int I = static_cast<int>(state.R.rows());
  const int K = static_cast<int>(state.R.cols());
  const Eigen::MatrixXd counts = state.Y.channel_factor_sums();
  const Eigen::VectorXd base = Eigen::VectorXd::Constant(I, config.alpha);
  for (int k = 0; k < K; ++k)
    state.R.col(k) = rng.dirichlet(base + counts.col(k));
}

void cusp_step_spike_allocation(CuspState& state, const CuspConfig& config, Rng& rng) {
  const int K = static_cast<int>(state.R.cols());
  const double log_mu_inf = std::log(config.mu_inf);
  const double slab_const = config.a0 * std::log(config.b0) - std::lgamma(config.a0);
  Eigen::VectorXd logw(K);
  for (int k = 0; k < K; ++k) {
    double sy = 0.0;
    double sv = 0.0;
    for (int j = 0; j < state.vartheta.cols(); ++j) {
      sy += static_cast<double>(state.Y.sample_factor_sum(j, k));
      sv += state.vartheta(k, j);
    }
    for (int l = 0; l < K; ++l) {
      const double log_phi = state.phi[l] > 0.0
                                 ? std::log(state.phi[l])
                                 : -std::numeric_limits<double>::infinity();
      if (l <= k) {
        logw[l] = log_phi + sy * log_mu_inf - config.mu_inf * sv;
      } else {
        logw[l] = log_phi + slab_const + std::lgamma(config.a0 + sy) -
                  (config.a0 + sy) * std::log(config.b0 + sv);
      }
    }
    const double m = logw.maxCoeff();
    if (!std::isfinite(m))
      throw ConvergenceError("cusp_step_spike_allocation: degenerate weights");
    double total = 0.0;
    for (int l = 0; l < K; ++l) {
      logw[l] = std::exp(logw[l] - m);
      total += logw[l];
    }
    const double u = rng.uniform() * total;
    double acc = 0.0;
    int pick = K - 1;
    for (int l = 0; l < K; ++l) {
      acc += logw[l];
      if (u <= acc) {
        pick = l;
        break;
      }
    }
    state.Z[k] = pick + 1;  // 1-based, matching the spike rule Z_k <= k
  }
}

void cusp_step_sticks(CuspState& state, const CuspConfig& config, Rng& rng) {
  const int K = static_cast<int>(state.v.size());
  for (int l = 0; l < K - 1; ++l) {
    int eq = 0, gt = 0;
    for (int k = 0; k < K; ++k) {
      if (state.Z[k] == l + 1) ++eq;
      if (state.Z[k] > l + 1) ++gt;
    }
    state.v[l] = rng.beta(1.0 + eq, config.alpha_pi + gt);
  }
  state.v[K - 1] = 1.0;
}

void cusp_recompute_weights(CuspState& state) {
  const int K = static_cast<int>(state.v.size());
  double remaining = 1.0;
  for (int l = 0; l < K; ++l) {
    state.phi[l] = state.v[l] * remaining;
    remaining *= (1.0 - state.v[l]);
  }
}

void cusp_step_relevance(CuspState& state, const CuspConfig& config, Rng& rng) {
  const int K = static_cast<int>(state.mu.size());
  for (int k = 0; k < K; ++k) {
    if (state.spiked(k)) {
      state.mu[k] = config.mu_inf;
      continue;
    }
    double sy = 0.0, sv = 0.0;
    for (int j = 0; j < state.vartheta.cols(); ++j) {
      sy += static_cast<double>(state.Y.sample_factor_sum(j, k));
      sv += state.vartheta(k, j);
    }
    state.mu[k] = rng.gamma(config.a0 + sy, config.b0 + sv);
  }
}

void cusp_sweep(CuspState& state, const CountMatrix& data, const CuspConfig& config,
                Rng& rng) {
  cusp_step_latent(state, data, rng);
  cusp_step_individual_loadings(state, config, rng);
  cusp_step_signatures(state, config, rng);
  cusp_step_spike_allocation(state, config, rng);
  cusp_step_sticks(state, config, rng);
  cusp_recompute_weights(state);
  cusp_step_relevance(state, config, rng);
}

CuspState cusp_init(const CountMatrix& data, const CuspConfig& config, Rng& rng) {
  config.validate();
  const int I = data.I(), J = data.J(), K = config.K;
  CuspState state;
  state.R.resize(I, K);
  state.vartheta.resize(K, J);
  state.mu.resize(K);
  state.v.resize(K);
  state.phi.resize(K);
  state.Z.resize(K);
  state.Y = LatentCounts(I, J, K);

  const Eigen::VectorXd base = Eigen::VectorXd::Constant(I, config.alpha);
  for (int l = 0; l < K - 1; ++l) state.v[l] = rng.beta(1.0, config.alpha_pi);
  state.v[K - 1] = 1.0;
  cusp_recompute_weights(state);
  for (int k = 0; k < K; ++k) {
    const double u = rng.uniform();
    double acc = 0.0;
    int pick = K - 1;
    for (int l = 0; l < K; ++l) {
      acc += state.phi[l];
      if (u <= acc) {
        pick = l;
        break;
      }
    }
    state.Z[k] = pick + 1;
    state.mu[k] = state.spiked(k) ? config.mu_inf : rng.gamma(config.a0, config.b0);
    state.R.col(k) = rng.dirichlet(base);
    for (int j = 0; j < J; ++j) state.vartheta(k, j) = rng.gamma(config.a, config.a);
  }
  cusp_step_latent(state, data, rng);
  return state;
}

namespace {

double poisson_log_lik(const CuspState& state, const CountMatrix& data) {
  const Eigen::MatrixXd q = state.R * state.theta();
  double ll = 0.0;
  for (int j = 0; j < data.J(); ++j) {
    for (int i = 0; i < data.I(); ++i) {
      const int x = data.counts(i, j);
      if (x > 0) {
        if (q(i, j) <= 0.0) return -std::numeric_limits<double>::infinity();
        ll += -q(i, j) + x * std::log(q(i, j));
      } else {
        ll -= q(i, j);
      }
    }
  }
  return ll;
}

}  // namespace

CuspSamples run_cusp_chain(const CountMatrix& data, const CuspConfig& config,
                           const SamplerConfig& sampler_config, std::uint64_t chain_seed) {
  data.validate();
  config.validate();
  sampler_config.validate();

  Rng rng(chain_seed);
  CuspState state = cusp_init(data, config, rng);

  CuspSamples out;
  out.config = config;
  out.sampler_config = sampler_config;
  out.chain_seed = chain_seed;
  const int n_keep = (sampler_config.n_iter - sampler_config.burn_in) / sampler_config.thin;

  for (int iter = 0; iter < sampler_config.n_iter; ++iter) {
    cusp_sweep(state, data, config, rng);
    const double ll = poisson_log_lik(state, data);
    if (!std::isfinite(ll))
      throw ConvergenceError("run_cusp_chain: non-finite log-likelihood at iteration " +
                             std::to_string(iter + 1));
    out.log_lik.push_back(ll);
    const int since_burn = iter - sampler_config.burn_in;
    if (since_burn >= 0 && (since_burn + 1) % sampler_config.thin == 0 &&
        out.retained() < n_keep) {
      out.R.push_back(state.R);
      out.Theta.push_back(state.theta());
      out.mu.push_back(state.mu);
      out.Z.push_back(state.Z);
    }
  }
  return out;
}

int CuspSamples::k_star_majority() const {
  if (Z.empty()) throw std::logic_error("CuspSamples: no retained draws");
  std::vector<int> counts;
  for (const auto& z : Z) {
    int active = 0;
    for (int k = 0; k < z.size(); ++k)
      if (z[k] > k + 1) ++active;
    if (static_cast<size_t>(active) >= counts.size()) counts.resize(active + 1, 0);
    ++counts[active];
  }
  return static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

Eigen::VectorXd CuspSamples::spike_probability() const {
  if (Z.empty()) throw std::logic_error("CuspSamples: no retained draws");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(Z[0].size());
  for (const auto& z : Z)
    for (int k = 0; k < z.size(); ++k)
      if (z[k] <= k + 1) p[k] += 1.0;
  return p / static_cast<double>(Z.size());
}

int CuspSamples::k_star_spike_prob(double cut) const {
  const Eigen::VectorXd p = spike_probability();
  int n = 0;
  for (int k = 0; k < p.size(); ++k)
    if (p[k] < cut) ++n;
  return n;
}

Eigen::VectorXd CuspSamples::mu_mean() const {
  if (mu.empty()) throw std::logic_error("CuspSamples: no retained draws");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(mu[0].size());
  for (const auto& m : mu) out += m;
  return out / static_cast<double>(mu.size());
}

Eigen::MatrixXd CuspSamples::R_mean() const {
  if (R.empty()) throw std::logic_error("CuspSamples: no retained draws");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(R[0].rows(), R[0].cols());
  for (const auto& m : R) out += m;
  return out / static_cast<double>(R.size());
}

Eigen::MatrixXd CuspSamples::Theta_mean() const {
  if (Theta.empty()) throw std::logic_error("CuspSamples: no retained draws");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(Theta[0].rows(), Theta[0].cols());
  for (const auto& m : Theta) out += m;
  return out / static_cast<double>(Theta.size());
}

}  // namespace cnmf
