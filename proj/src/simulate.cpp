#include "cnmf/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "cnmf/errors.hpp"

namespace cnmf {

void SimulationSpec::validate() const {
  if (!(tau >= 0.0)) throw std::domain_error("SimulationSpec: tau must be >= 0");
  if (J < 1 || I < 1) throw std::domain_error("SimulationSpec: I and J must be positive");
  if (K_new0 < 0 || K0() < 1)
    throw std::domain_error("SimulationSpec: need at least one true signature");
  if (!(dirichlet_new > 0.0) || !(loading_scale_shape > 0.0) ||
      !(loading_scale_rate > 0.0) || !(loading_indiv_shape > 0.0) ||
      !(loading_indiv_rate > 0.0))
    throw std::domain_error("SimulationSpec: generative parameters must be positive");
  if (pre_signatures && pre_signatures->rows() != I)
    throw std::invalid_argument("SimulationSpec: pre_signatures channel count != I");
  if (!channel_labels.empty() && channel_labels.size() != static_cast<size_t>(I))
    throw std::invalid_argument("SimulationSpec: channel label count != I");
}

void SimulationSpec::apply_indel_regime() {
  I = 83;
  dirichlet_new = 0.05;
  loading_scale_shape = 50.0;
  loading_scale_rate = 1.0;
  channel_labels = indel_channel_labels();
}

SimulatedDataset simulate_dataset(const SimulationSpec& spec, Rng& rng) {
  spec.validate();
  const int I = spec.I, J = spec.J;
  const int K_pre = spec.pre_signatures ? static_cast<int>(spec.pre_signatures->cols()) : 0;
  const int K0 = spec.K0();

  SimulatedDataset out;
  out.R0.resize(I, K0);
  out.Theta0.resize(K0, J);
  out.factor_labels.reserve(K0);

  for (int k = 0; k < K_pre; ++k) {
    out.R0.col(k) = spec.pre_signatures->col(k);
    out.factor_labels.push_back(k < static_cast<int>(spec.pre_labels.size())
                                    ? spec.pre_labels[k]
                                    : "pre" + std::to_string(k + 1));
  }
  const Eigen::VectorXd base = Eigen::VectorXd::Constant(I, spec.dirichlet_new);
  for (int k = K_pre; k < K0; ++k) {
    out.R0.col(k) = rng.dirichlet(base);
    out.factor_labels.push_back("new" + std::to_string(k - K_pre + 1));
  }

  for (int k = 0; k < K0; ++k) {
    const double w = rng.gamma(spec.loading_scale_shape, spec.loading_scale_rate);
    for (int j = 0; j < J; ++j)
      out.Theta0(k, j) = w * rng.gamma(spec.loading_indiv_shape, spec.loading_indiv_rate);
  }

  out.Lambda0 = out.R0 * out.Theta0;

  Eigen::MatrixXi counts(I, J);
  for (int j = 0; j < J; ++j) {
    for (int i = 0; i < I; ++i) {
      const double lam = out.Lambda0(i, j);
      if (lam <= 0.0) {
        counts(i, j) = 0;
      } else if (spec.tau == 0.0) {
        counts(i, j) = static_cast<int>(rng.poisson(lam));
      } else {
        // Gamma-Poisson mixture matching mean lam, variance lam (1 + tau lam).
        const double rate = rng.gamma(1.0 / spec.tau, 1.0 / (spec.tau * lam));
        counts(i, j) = rate > 0.0 ? static_cast<int>(rng.poisson(rate)) : 0;
      }
    }
  }

  out.X.counts = std::move(counts);
  out.X.channel_labels = spec.channel_labels;
  if (out.X.channel_labels.empty()) {
    if (I == 96)
      out.X.channel_labels = sbs_channel_labels();
    else if (I == 83)
      out.X.channel_labels = indel_channel_labels();
    else
      for (int i = 0; i < I; ++i) out.X.channel_labels.push_back("ch" + std::to_string(i + 1));
  }
  for (int j = 0; j < J; ++j) out.X.sample_labels.push_back("S" + std::to_string(j + 1));
  out.X.validate();
  return out;
}

std::vector<std::string> sbs_channel_labels() {
  static const char* subs[6] = {"C>A", "C>G", "C>T", "T>A", "T>C", "T>G"};
  static const char bases[4] = {'A', 'C', 'G', 'T'};
  std::vector<std::string> out;
  out.reserve(96);
  for (const char* sub : subs)
    for (const char b5 : bases)
      for (const char b3 : bases)
        out.push_back(std::string(1, b5) + "[" + sub + "]" + std::string(1, b3));
  return out;
}

std::vector<std::string> indel_channel_labels() {
  std::vector<std::string> out;
  out.reserve(83);
  for (int i = 1; i <= 83; ++i) {
    std::string n = std::to_string(i);
    if (n.size() < 2) n = "0" + n;
    out.push_back("indel" + n);
  }
  return out;
}

const ReferenceCatalog& reference_catalog() {
  static const ReferenceCatalog cat = [] {
    ReferenceCatalog c;
    c.S.resize(96, 8);
    for (int i = 0; i < 96; ++i)
      for (int k = 0; k < 8; ++k) c.S(i, k) = detail::kRefCatalog[i][k];
    for (int k = 0; k < 8; ++k) c.names.emplace_back(detail::kRefCatalogNames[k]);
    for (int i = 0; i < 96; ++i) c.channel_labels.emplace_back(detail::kRefChannelLabels[i]);
    return c;
  }();
  return cat;
}

}  // namespace cnmf
