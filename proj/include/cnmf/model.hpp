#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "cnmf/inv_kummer.hpp"
#include "cnmf/types.hpp"

namespace cnmf {

/// InvGamma(a0, b0) hyperprior on the relevance weights whose strength does
/// not grow with the sample count; kept as a comparison mode.
struct FixedStrengthHyperprior {
  double a0 = 11.0;
  double b0 = 0.01;
};

/// Catalog-anchored prior block: columns of S are known signatures, beta the
/// per-signature Dirichlet concentrations, b the gamma shape of the catalog
/// loadings.
struct InformativePriorConfig {
  Eigen::MatrixXd S;                // I x K_pre, column stochastic
  std::vector<std::string> labels;  // K_pre names
  Eigen::VectorXd beta;             // K_pre, positive
  double b = 1.0;

  int K_pre() const { return static_cast<int>(S.cols()); }
  void validate(int I) const;
};

struct ModelConfig {
  int K = 20;  // number of de-novo factors (K_new when a catalog prior is set)
  double epsilon = 0.001;
  double a = 1.0;
  double alpha = 0.5;
  std::optional<FixedStrengthHyperprior> fixed_strength;
  std::optional<InformativePriorConfig> informative;

  int pre_factors() const { return informative ? informative->K_pre() : 0; }
  int total_factors() const { return K + pre_factors(); }
  bool factor_is_pre(int k) const { return k < pre_factors(); }
  /// Gamma shape governing the loadings of factor k (b for catalog factors).
  double loading_shape(int k) const {
    return factor_is_pre(k) ? informative->b : a;
  }
  void validate(int I) const;
};

/// Full Gibbs state over the (catalog | de novo) factor blocks. In
/// informative mode the first K_pre columns of R are the study-specific
/// catalog signatures, the first K_pre rows of Theta their loadings, and the
/// first K_pre entries of mu their relevance weights.
struct ChainState {
  Eigen::MatrixXd R;      // I x Ktot
  Eigen::MatrixXd Theta;  // Ktot x J
  Eigen::VectorXd mu;     // Ktot
  LatentCounts Y;
  int iteration = 0;
};

/// Unnormalized log joint of the hierarchical model, collapsed over Y:
///   sum_ij [ -Q_ij + X_ij log Q_ij ]                        (Poisson)
/// + sum_ik (c_ik - 1) log r_ik                              (Dirichlet, c = alpha or beta_k s_ik)
/// + sum_kj [ (s_k - 1) log theta_kj - s_k theta_kj / mu_k ] - J sum_k s_k log mu_k   (gamma)
/// + sum_k [ -(s0_k + 1) log mu_k - b0_k / mu_k ]            (inverse gamma)
/// with Q = R Theta. Dropped additive constants: log X_ij! from the
/// likelihood, the Dirichlet normalizers (fixed given alpha/beta), the gamma
/// normalizers s log s - log Gamma(s), and the inverse-gamma normalizers
/// s0 log b0 - log Gamma(s0). Entries with r_ik exactly zero contribute zero
/// to the Dirichlet term. Returns -inf when some X_ij > 0 has Q_ij = 0.
double log_posterior(const ChainState& state, const CountMatrix& data,
                     const ModelConfig& config);

/// Parameters of the conditional law of a relevance weight given the latent
/// counts: compressive mode gives (2sJ+1, eps s J, J Ybar + s J, s), the
/// fixed-strength mode (a0 + J s, b0, J s + J Ybar, s), where s is the
/// loading shape of the factor (config.a unless overridden).
InvKummerParams posterior_mu_params(double ybar_k, int J, const ModelConfig& config);
InvKummerParams posterior_mu_params(double ybar_k, int J, const ModelConfig& config,
                                    double shape);

/// Conditional mean of a loading given the latent counts,
///   (a + Y_jk) U(2aJ+1, J(a-Ybar)+1, eps J) / U(2aJ+1, J(a-Ybar)+2, eps J),
/// evaluated through log-domain U differences.
double expected_loading(double a, double epsilon, int J, double ybar_k, long long y_jk);

/// Marginal pmf of one latent count given its relevance weight,
///   (mu/a)^y (a)_y (alpha)_y / (y! (alpha I)_y)
///     * 2F1(y+a, y+alpha; y+alpha I; -mu/a),
/// requiring I >= 2. The mean of this law is mu/I.
double marginal_latent_pmf(long long y, double mu_k, double a, double alpha, int I);

}  // namespace cnmf
