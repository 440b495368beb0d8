#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cnmf/model.hpp"
#include "cnmf/sampler.hpp"

namespace cnmf {

/// Rank estimate by thresholding posterior mean relevance weights at C*eps
/// (strict inequality). Active factors are listed in descending mean order.
struct RankEstimate {
  int K_star = 0;
  std::vector<int> active;
  Eigen::VectorXd mu_mean;
};

RankEstimate estimate_rank(const std::vector<Eigen::VectorXd>& mu_draws, double epsilon,
                           double C = 5.0);

/// <u,v> / (|u||v|); throws on a zero vector.
double cosine_similarity(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// One-to-one matching of estimated to reference columns maximizing total
/// cosine similarity; the smaller side is implicitly padded with zero
/// columns. est_for_ref[c] is the estimated column placed against reference
/// slot c (slots >= reference count are zero pads holding surplus estimates),
/// -1 marks a reference column matched to a pad.
struct MatchResult {
  int width = 0;                  // max(#estimated, #reference)
  std::vector<int> est_for_ref;   // length width
  std::vector<int> ref_of_est;    // length #estimated; -1 for padded
  double total_similarity = 0.0;  // over genuine pairs only
};

MatchResult hungarian_match(const Eigen::MatrixXd& estimated, const Eigen::MatrixXd& reference);

/// Precision/sensitivity at a cosine cutoff, max-based (not one-to-one):
/// precision = share of estimated columns within cutoff of some truth column,
/// sensitivity = share of truth columns within cutoff of some estimate.
struct MetricsReport {
  double precision = 0.0;
  double sensitivity = 0.0;
  double f1 = 0.0;
  double rmse_counts = 0.0;
  double rmse_lambda = 0.0;
  double rmse_R = 0.0;
  double rmse_Theta = 0.0;
  double cutoff = 0.9;
  bool empty_estimate = false;
};

MetricsReport precision_sensitivity(const Eigen::MatrixXd& estimated,
                                    const Eigen::MatrixXd& truth, double cutoff);

struct TruthBundle {
  Eigen::MatrixXd R0;       // I x K0
  Eigen::MatrixXd Theta0;   // K0 x J
  Eigen::MatrixXd Lambda0;  // I x J
};

/// RMSE suite: counts and Lambda0 against lambda_hat = R_hat Theta_hat,
/// and R/Theta after Hungarian alignment with zero padding.
MetricsReport rmse_suite(const Eigen::MatrixXi& X, const Eigen::MatrixXd& R_hat,
                         const Eigen::MatrixXd& Theta_hat, const TruthBundle& truth);

/// Effective sample size via autocovariances with Geyer's initial monotone
/// positive sequence truncation. A constant trace is flagged degenerate and
/// reports ESS = n.
struct EssResult {
  double ess = 0.0;
  bool degenerate = false;
};

EssResult effective_sample_size(const std::vector<double>& trace);

/// Posterior location of a relevance weight as a function of the average
/// assigned count: mean from the moment formula, 10th/90th percentiles from
/// the grid CDF of the inverse Kummer posterior.
struct ElbowRow {
  double ybar = 0.0;
  double mean = 0.0;
  double q10 = 0.0;
  double q90 = 0.0;
};

std::vector<ElbowRow> elbow_curve(const ModelConfig& config, int J,
                                  const std::vector<double>& ybar_grid);

/// Posterior summary of a fit: rank estimate, posterior means restricted to
/// the active factors, equal-tailed 90% credible intervals, and best-match
/// catalog labels when a reference is supplied.
struct FitSummary {
  int K_star = 0;
  std::vector<int> active;  // descending mean relevance
  Eigen::VectorXd mu_mean;  // all factors
  Eigen::VectorXd mu_q05, mu_q95;
  std::vector<std::string> factor_labels;  // all factors
  Eigen::MatrixXd R_hat;                   // I x K_star
  Eigen::MatrixXd Theta_hat;               // K_star x J
  Eigen::MatrixXd R_lower, R_upper;        // I x K_star
  Eigen::MatrixXd Theta_lower, Theta_upper;
  std::vector<std::string> match_label;  // per active factor, empty if no reference
  std::vector<double> match_cosine;
  double threshold_C = 5.0;
  double epsilon = 0.001;
};

FitSummary summarize_fit(const PosteriorSamples& samples, const ModelConfig& config,
                         double threshold_C, const Eigen::MatrixXd* reference = nullptr,
                         const std::vector<std::string>* reference_labels = nullptr);

}  // namespace cnmf
