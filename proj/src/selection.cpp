#include "cnmf/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cnmf/errors.hpp"
#include "cnmf/inv_kummer.hpp"
#include "hungarian_impl.hpp"

namespace cnmf {

RankEstimate estimate_rank(const std::vector<Eigen::VectorXd>& mu_draws, double epsilon,
                           double C) {
  if (mu_draws.empty()) throw std::invalid_argument("estimate_rank: no draws");
  if (!(C > 1.0)) throw std::domain_error("estimate_rank: C must exceed 1");
  if (!(epsilon > 0.0)) throw std::domain_error("estimate_rank: epsilon must be positive");

  RankEstimate out;
  out.mu_mean = Eigen::VectorXd::Zero(mu_draws[0].size());
  for (const auto& m : mu_draws) out.mu_mean += m;
  out.mu_mean /= static_cast<double>(mu_draws.size());

  const double cut = C * epsilon;
  for (int k = 0; k < out.mu_mean.size(); ++k)
    if (out.mu_mean[k] > cut) out.active.push_back(k);
  std::sort(out.active.begin(), out.active.end(),
            [&](int a, int b) { return out.mu_mean[a] > out.mu_mean[b]; });
  out.K_star = static_cast<int>(out.active.size());
  return out;
}

double cosine_similarity(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  if (u.size() != v.size()) throw std::invalid_argument("cosine_similarity: size mismatch");
  const double nu = u.norm(), nv = v.norm();
  if (!(nu > 0.0) || !(nv > 0.0))
    throw std::domain_error("cosine_similarity: zero vector");
  return u.dot(v) / (nu * nv);
}

MatchResult hungarian_match(const Eigen::MatrixXd& estimated, const Eigen::MatrixXd& reference) {
  if (estimated.cols() < 1 || reference.cols() < 1)
    throw std::invalid_argument("hungarian_match: both inputs must be nonempty");
  if (estimated.rows() != reference.rows())
    throw std::invalid_argument("hungarian_match: channel dimensions differ");

  const int ke = static_cast<int>(estimated.cols());
  const int kr = static_cast<int>(reference.cols());
  const int width = std::max(ke, kr);

  // Square cost matrix; pads contribute zero similarity.
  std::vector<std::vector<double>> cost(width, std::vector<double>(width, 0.0));
  for (int e = 0; e < ke; ++e)
    for (int r = 0; r < kr; ++r) {
      const double ne = estimated.col(e).norm(), nr = reference.col(r).norm();
      const double sim = (ne > 0.0 && nr > 0.0)
                             ? estimated.col(e).dot(reference.col(r)) / (ne * nr)
                             : 0.0;
      cost[e][r] = -sim;
    }
  const std::vector<int> col_of_row = detail::min_cost_assignment(cost);

  MatchResult out;
  out.width = width;
  out.est_for_ref.assign(width, -1);
  out.ref_of_est.assign(ke, -1);
  for (int e = 0; e < ke; ++e) {
    const int slot = col_of_row[e];
    out.est_for_ref[slot] = e;
    if (slot < kr) {
      out.ref_of_est[e] = slot;
      out.total_similarity -= cost[e][slot];
    }
  }
  return out;
}

MetricsReport precision_sensitivity(const Eigen::MatrixXd& estimated,
                                    const Eigen::MatrixXd& truth, double cutoff) {
  MetricsReport rep;
  rep.cutoff = cutoff;
  const int ke = static_cast<int>(estimated.cols());
  const int kt = static_cast<int>(truth.cols());
  if (kt < 1) throw std::invalid_argument("precision_sensitivity: empty truth");

  if (ke == 0) {
    rep.empty_estimate = true;
    return rep;  // precision and sensitivity defined as 0
  }

  int hits_est = 0;
  for (int e = 0; e < ke; ++e) {
    double best = -1.0;
    for (int t = 0; t < kt; ++t)
      best = std::max(best, cosine_similarity(estimated.col(e), truth.col(t)));
    if (best >= cutoff) ++hits_est;
  }
  int hits_truth = 0;
  for (int t = 0; t < kt; ++t) {
    double best = -1.0;
    for (int e = 0; e < ke; ++e)
      best = std::max(best, cosine_similarity(estimated.col(e), truth.col(t)));
    if (best >= cutoff) ++hits_truth;
  }
  rep.precision = static_cast<double>(hits_est) / ke;
  rep.sensitivity = static_cast<double>(hits_truth) / kt;
  rep.f1 = (rep.precision + rep.sensitivity) > 0.0
               ? 2.0 * rep.precision * rep.sensitivity / (rep.precision + rep.sensitivity)
               : 0.0;
  return rep;
}

namespace {

double matrix_rmse(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("rmse: dimension mismatch");
  return std::sqrt((a - b).squaredNorm() / static_cast<double>(a.size()));
}

}  // namespace

MetricsReport rmse_suite(const Eigen::MatrixXi& X, const Eigen::MatrixXd& R_hat,
                         const Eigen::MatrixXd& Theta_hat, const TruthBundle& truth) {
  MetricsReport rep;
  if (R_hat.cols() != Theta_hat.rows())
    throw std::invalid_argument("rmse_suite: R_hat and Theta_hat are inconsistent");
  if (truth.R0.rows() != R_hat.rows() || truth.Lambda0.rows() != X.rows() ||
      truth.Lambda0.cols() != X.cols() || truth.R0.cols() != truth.Theta0.rows())
    throw std::invalid_argument("rmse_suite: truth bundle dimensions are inconsistent");

  const Eigen::MatrixXd lambda_hat = R_hat * Theta_hat;
  rep.rmse_counts = matrix_rmse(X.cast<double>(), lambda_hat);
  rep.rmse_lambda = matrix_rmse(truth.Lambda0, lambda_hat);

  // Align columns to the truth, then pad the smaller side with zeros.
  const MatchResult match = hungarian_match(R_hat, truth.R0);
  const int width = match.width;
  const int I = static_cast<int>(R_hat.rows());
  const int J = static_cast<int>(Theta_hat.cols());
  Eigen::MatrixXd R_al = Eigen::MatrixXd::Zero(I, width);
  Eigen::MatrixXd T_al = Eigen::MatrixXd::Zero(width, J);
  Eigen::MatrixXd R0_p = Eigen::MatrixXd::Zero(I, width);
  Eigen::MatrixXd T0_p = Eigen::MatrixXd::Zero(width, J);
  R0_p.leftCols(truth.R0.cols()) = truth.R0;
  T0_p.topRows(truth.Theta0.rows()) = truth.Theta0;
  for (int slot = 0; slot < width; ++slot) {
    const int e = match.est_for_ref[slot];
    if (e < 0) continue;
    R_al.col(slot) = R_hat.col(e);
    T_al.row(slot) = Theta_hat.row(e);
  }
  rep.rmse_R = matrix_rmse(R0_p, R_al);
  rep.rmse_Theta = matrix_rmse(T0_p, T_al);
  return rep;
}

EssResult effective_sample_size(const std::vector<double>& trace) {
  const int n = static_cast<int>(trace.size());
  if (n < 2) throw std::invalid_argument("effective_sample_size: trace too short");

  const double mean = std::accumulate(trace.begin(), trace.end(), 0.0) / n;
  std::vector<double> centered(n);
  for (int i = 0; i < n; ++i) centered[i] = trace[i] - mean;

  const auto autocov = [&](int lag) {
    double s = 0.0;
    for (int i = 0; i + lag < n; ++i) s += centered[i] * centered[i + lag];
    return s / n;
  };

  const double g0 = autocov(0);
  const double scale = std::fabs(mean) + 1.0;
  if (!(g0 > 1e-28 * scale * scale)) return {static_cast<double>(n), true};

  // Geyer: sum pair autocovariances while positive, enforce monotonicity.
  double sigma2 = -g0;
  double prev_pair = std::numeric_limits<double>::infinity();
  for (int m = 0; 2 * m < n - 1; ++m) {
    double pair = autocov(2 * m);
    if (2 * m + 1 < n) pair += autocov(2 * m + 1);
    if (pair <= 0.0) break;
    pair = std::min(pair, prev_pair);
    prev_pair = pair;
    sigma2 += 2.0 * pair;
  }
  if (!(sigma2 > 0.0)) return {static_cast<double>(n), true};
  return {n * g0 / sigma2, false};
}

std::vector<ElbowRow> elbow_curve(const ModelConfig& config, int J,
                                  const std::vector<double>& ybar_grid) {
  std::vector<ElbowRow> rows;
  rows.reserve(ybar_grid.size());
  for (const double ybar : ybar_grid) {
    const InvKummerParams p = posterior_mu_params(ybar, J, config);
    ElbowRow row;
    row.ybar = ybar;
    row.mean = inv_kummer_moment(1, p);
    const InvKummerGrid grid(p);
    row.q10 = grid.quantile(0.10);
    row.q90 = grid.quantile(0.90);
    rows.push_back(row);
  }
  return rows;
}

namespace {

double sample_quantile(std::vector<double>& values, double q) {
  std::sort(values.begin(), values.end());
  const double pos = q * (values.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(pos));
  const size_t hi = static_cast<size_t>(std::ceil(pos));
  const double f = pos - lo;
  return values[lo] + f * (values[hi] - values[lo]);
}

}  // namespace

FitSummary summarize_fit(const PosteriorSamples& samples, const ModelConfig& config,
                         double threshold_C, const Eigen::MatrixXd* reference,
                         const std::vector<std::string>* reference_labels) {
  if (samples.retained() == 0) throw std::logic_error("summarize_fit: no retained draws");
  FitSummary out;
  out.threshold_C = threshold_C;
  out.epsilon = config.epsilon;

  const RankEstimate rank = estimate_rank(samples.mu, config.epsilon, threshold_C);
  out.K_star = rank.K_star;
  out.active = rank.active;
  out.mu_mean = rank.mu_mean;

  const int Ktot = static_cast<int>(out.mu_mean.size());
  const int n = samples.retained();
  const int I = static_cast<int>(samples.R[0].rows());
  const int J = static_cast<int>(samples.Theta[0].cols());

  out.factor_labels.resize(Ktot);
  for (int k = 0; k < Ktot; ++k) {
    if (k < samples.K_pre && config.informative)
      out.factor_labels[k] = config.informative->labels[k];
    else
      out.factor_labels[k] = "Novel" + std::to_string(k - samples.K_pre + 1);
  }

  out.mu_q05.resize(Ktot);
  out.mu_q95.resize(Ktot);
  std::vector<double> buf(n);
  for (int k = 0; k < Ktot; ++k) {
    for (int d = 0; d < n; ++d) buf[d] = samples.mu[d][k];
    out.mu_q05[k] = sample_quantile(buf, 0.05);
    out.mu_q95[k] = sample_quantile(buf, 0.95);
  }

  const int Ks = out.K_star;
  out.R_hat.resize(I, Ks);
  out.Theta_hat.resize(Ks, J);
  out.R_lower.resize(I, Ks);
  out.R_upper.resize(I, Ks);
  out.Theta_lower.resize(Ks, J);
  out.Theta_upper.resize(Ks, J);
  for (int a = 0; a < Ks; ++a) {
    const int k = out.active[a];
    for (int i = 0; i < I; ++i) {
      double mean = 0.0;
      for (int d = 0; d < n; ++d) {
        buf[d] = samples.R[d](i, k);
        mean += buf[d];
      }
      out.R_hat(i, a) = mean / n;
      out.R_lower(i, a) = sample_quantile(buf, 0.05);
      out.R_upper(i, a) = sample_quantile(buf, 0.95);
    }
    for (int j = 0; j < J; ++j) {
      double mean = 0.0;
      for (int d = 0; d < n; ++d) {
        buf[d] = samples.Theta[d](k, j);
        mean += buf[d];
      }
      out.Theta_hat(a, j) = mean / n;
      out.Theta_lower(a, j) = sample_quantile(buf, 0.05);
      out.Theta_upper(a, j) = sample_quantile(buf, 0.95);
    }
  }

  if (reference != nullptr && reference->cols() > 0) {
    out.match_label.resize(Ks);
    out.match_cosine.resize(Ks);
    for (int a = 0; a < Ks; ++a) {
      double best = -1.0;
      int best_idx = 0;
      for (int r = 0; r < reference->cols(); ++r) {
        const double sim = cosine_similarity(out.R_hat.col(a), reference->col(r));
        if (sim > best) {
          best = sim;
          best_idx = r;
        }
      }
      out.match_cosine[a] = best;
      out.match_label[a] = reference_labels != nullptr
                               ? (*reference_labels)[best_idx]
                               : "ref" + std::to_string(best_idx + 1);
    }
  }
  return out;
}

}  // namespace cnmf
