#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "cnmf/rng.hpp"
#include "cnmf/types.hpp"

namespace cnmf {

/// Generative settings for synthetic count matrices. Counts are negative
/// binomial with mean lambda0 and variance lambda0 (1 + tau lambda0); tau = 0
/// is an exact Poisson branch. Loadings factor as w_k * xi_kj with
/// w_k ~ Gamma(loading_scale_shape, loading_scale_rate) and
/// xi_kj ~ Gamma(loading_indiv_shape, loading_indiv_rate).
struct SimulationSpec {
  double tau = 0.0;
  int J = 50;
  int I = 96;
  std::optional<Eigen::MatrixXd> pre_signatures;  // I x K0_pre, column stochastic
  std::vector<std::string> pre_labels;
  int K_new0 = 2;
  double dirichlet_new = 0.25;
  double loading_scale_shape = 100.0;
  double loading_scale_rate = 1.0;
  double loading_indiv_shape = 0.5;
  double loading_indiv_rate = 0.5;
  std::uint64_t seed = 0;
  std::vector<std::string> channel_labels;  // optional; generated when empty

  int K0() const {
    return (pre_signatures ? static_cast<int>(pre_signatures->cols()) : 0) + K_new0;
  }
  void validate() const;

  /// Indel-style profile: 83 channels, Dirichlet(0.05) de-novo signatures,
  /// w_k ~ Gamma(50, 1).
  void apply_indel_regime();
};

struct SimulatedDataset {
  CountMatrix X;
  Eigen::MatrixXd R0;       // I x K0, pre columns first
  Eigen::MatrixXd Theta0;   // K0 x J
  Eigen::MatrixXd Lambda0;  // I x J
  std::vector<std::string> factor_labels;
};

SimulatedDataset simulate_dataset(const SimulationSpec& spec, Rng& rng);

/// Bundled synthetic reference catalog (column-stochastic stand-ins for a
/// curated signature database): 96 channels by 8 profiles.
struct ReferenceCatalog {
  Eigen::MatrixXd S;
  std::vector<std::string> names;
  std::vector<std::string> channel_labels;
};

const ReferenceCatalog& reference_catalog();

/// The standard 96 trinucleotide substitution channel labels.
std::vector<std::string> sbs_channel_labels();

/// Simple labels for the 83 indel channels.
std::vector<std::string> indel_channel_labels();

namespace detail {
extern const char* const kRefCatalogNames[8];
extern const char* const kRefChannelLabels[96];
extern const double kRefCatalog[96][8];
}  // namespace detail

}  // namespace cnmf
