#include "cnmf/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cnmf/special.hpp"

namespace cnmf {

void InformativePriorConfig::validate(int I) const {
  if (S.rows() != I)
    throw std::invalid_argument("informative prior: catalog channel count does not match data");
  if (S.cols() < 1) throw std::invalid_argument("informative prior: empty catalog");
  if (labels.size() != static_cast<size_t>(S.cols()))
    throw std::invalid_argument("informative prior: label count mismatch");
  if (beta.size() != S.cols())
    throw std::invalid_argument("informative prior: beta count mismatch");
  if ((beta.array() <= 0.0).any())
    throw std::domain_error("informative prior: beta entries must be positive");
  if (!(b > 0.0)) throw std::domain_error("informative prior: b must be positive");
}

void ModelConfig::validate(int I) const {
  if (K < 0 || total_factors() < 1)
    throw std::invalid_argument("ModelConfig: need at least one factor");
  if (!(epsilon > 0.0) || !(a > 0.0) || !(alpha > 0.0))
    throw std::domain_error("ModelConfig: epsilon, a, alpha must be positive");
  if (fixed_strength && (!(fixed_strength->a0 > 0.0) || !(fixed_strength->b0 > 0.0)))
    throw std::domain_error("ModelConfig: fixed-strength a0, b0 must be positive");
  if (informative) informative->validate(I);
}

double log_posterior(const ChainState& state, const CountMatrix& data,
                     const ModelConfig& config) {
  const int I = data.I(), J = data.J();
  const int Ktot = config.total_factors();
  const int Kpre = config.pre_factors();
  if (state.R.rows() != I || state.R.cols() != Ktot || state.Theta.rows() != Ktot ||
      state.Theta.cols() != J || state.mu.size() != Ktot)
    throw std::invalid_argument("log_posterior: state inconsistent with data/config");

  const Eigen::MatrixXd q = state.R * state.Theta;
  double lp = 0.0;
  for (int j = 0; j < J; ++j) {
    for (int i = 0; i < I; ++i) {
      const double qij = q(i, j);
      const int x = data.counts(i, j);
      if (x > 0) {
        if (qij <= 0.0) return -std::numeric_limits<double>::infinity();
        lp += -qij + x * std::log(qij);
      } else {
        lp -= qij;
      }
    }
  }

  for (int k = 0; k < Ktot; ++k) {
    for (int i = 0; i < I; ++i) {
      const double r = state.R(i, k);
      if (r <= 0.0) continue;  // exact zeros contribute nothing
      const double conc =
          k < Kpre ? config.informative->beta[k] * config.informative->S(i, k) : config.alpha;
      lp += (conc - 1.0) * std::log(r);
    }
  }

  for (int k = 0; k < Ktot; ++k) {
    const double s = config.loading_shape(k);
    const double mu = state.mu[k];
    if (!(mu > 0.0)) return -std::numeric_limits<double>::infinity();
    const double log_mu = std::log(mu);
    for (int j = 0; j < J; ++j) {
      const double th = state.Theta(k, j);
      if (!(th > 0.0)) return -std::numeric_limits<double>::infinity();
      lp += (s - 1.0) * std::log(th) - s * th / mu;
    }
    lp -= J * s * log_mu;

    double s0, b0;
    if (config.fixed_strength) {
      s0 = config.fixed_strength->a0;
      b0 = config.fixed_strength->b0;
    } else {
      s0 = s * J + 1.0;
      b0 = config.epsilon * s * J;
    }
    lp += -(s0 + 1.0) * log_mu - b0 / mu;
  }
  return lp;
}

InvKummerParams posterior_mu_params(double ybar_k, int J, const ModelConfig& config,
                                    double shape) {
  if (!(ybar_k >= 0.0)) throw std::domain_error("posterior_mu_params: Ybar must be >= 0");
  if (J < 1) throw std::domain_error("posterior_mu_params: J must be positive");
  InvKummerParams p;
  p.delta = shape;
  if (config.fixed_strength) {
    p.lambda = config.fixed_strength->a0 + J * shape;
    p.beta = config.fixed_strength->b0;
  } else {
    p.lambda = 2.0 * shape * J + 1.0;
    p.beta = config.epsilon * shape * J;
  }
  p.gamma = J * ybar_k + J * shape;
  return p;
}

InvKummerParams posterior_mu_params(double ybar_k, int J, const ModelConfig& config) {
  return posterior_mu_params(ybar_k, J, config, config.a);
}

double expected_loading(double a, double epsilon, int J, double ybar_k, long long y_jk) {
  if (!(a > 0.0) || !(epsilon > 0.0) || J < 1 || !(ybar_k >= 0.0) || y_jk < 0)
    throw std::domain_error("expected_loading: invalid arguments");
  const double lam = 2.0 * a * J + 1.0;
  const double z = epsilon * J;
  const double log_num = log_kummer_u(lam, J * (a - ybar_k) + 1.0, z);
  const double log_den = log_kummer_u(lam, J * (a - ybar_k) + 2.0, z);
  return (a + static_cast<double>(y_jk)) * std::exp(log_num - log_den);
}

double marginal_latent_pmf(long long y, double mu_k, double a, double alpha, int I) {
  if (y < 0) throw std::domain_error("marginal_latent_pmf: y must be nonnegative");
  if (!(mu_k > 0.0) || !(a > 0.0) || !(alpha > 0.0))
    throw std::domain_error("marginal_latent_pmf: parameters must be positive");
  if (I < 2) throw std::domain_error("marginal_latent_pmf: requires I >= 2");
  const double yd = static_cast<double>(y);
  double log_p = yd * (std::log(mu_k) - std::log(a));
  log_p += std::lgamma(a + yd) - std::lgamma(a);
  log_p += std::lgamma(alpha + yd) - std::lgamma(alpha);
  log_p -= std::lgamma(yd + 1.0);
  log_p -= std::lgamma(alpha * I + yd) - std::lgamma(alpha * I);
  log_p += log_gauss_2f1(yd + a, yd + alpha, yd + alpha * I, -mu_k / a);
  return std::exp(log_p);
}

}  // namespace cnmf
