#include "cnmf/types.hpp"

#include <cmath>
#include <stdexcept>

#include "cnmf/errors.hpp"

namespace cnmf {

void CountMatrix::validate() const {
  if (counts.rows() < 1 || counts.cols() < 1)
    throw DataFormatError("CountMatrix: need at least one channel and one sample");
  if (channel_labels.size() != static_cast<size_t>(counts.rows()) ||
      sample_labels.size() != static_cast<size_t>(counts.cols()))
    throw DataFormatError("CountMatrix: label lists do not match matrix dimensions");
  if ((counts.array() < 0).any())
    throw DataFormatError("CountMatrix: negative count entry");
}

CountMatrix CountMatrix::from_counts(Eigen::MatrixXi x) {
  CountMatrix cm;
  cm.counts = std::move(x);
  cm.channel_labels.reserve(cm.counts.rows());
  cm.sample_labels.reserve(cm.counts.cols());
  for (Eigen::Index i = 0; i < cm.counts.rows(); ++i)
    cm.channel_labels.push_back("ch" + std::to_string(i + 1));
  for (Eigen::Index j = 0; j < cm.counts.cols(); ++j)
    cm.sample_labels.push_back("S" + std::to_string(j + 1));
  cm.validate();
  return cm;
}

void enforce_column_stochastic(Eigen::MatrixXd& S, double check_tol, double renorm_tol) {
  for (Eigen::Index k = 0; k < S.cols(); ++k) {
    if ((S.col(k).array() < 0.0).any())
      throw DataFormatError("signature column " + std::to_string(k + 1) + " has a negative entry");
    const double sum = S.col(k).sum();
    const double gap = std::fabs(sum - 1.0);
    if (gap <= check_tol) continue;
    if (gap <= renorm_tol && sum > 0.0) {
      S.col(k) /= sum;
      continue;
    }
    throw DataFormatError("signature column " + std::to_string(k + 1) +
                          " sums to " + std::to_string(sum) + ", outside tolerance");
  }
}

long long LatentCounts::sample_factor_sum(int j, int k) const {
  long long s = 0;
  for (int i = 0; i < I_; ++i) s += at(i, j, k);
  return s;
}

double LatentCounts::factor_mean(int k) const {
  long long s = 0;
  for (int j = 0; j < J_; ++j) s += sample_factor_sum(j, k);
  return static_cast<double>(s) / J_;
}

Eigen::MatrixXd LatentCounts::channel_factor_sums() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(I_, K_);
  for (int i = 0; i < I_; ++i)
    for (int j = 0; j < J_; ++j)
      for (int k = 0; k < K_; ++k) out(i, k) += at(i, j, k);
  return out;
}

Eigen::MatrixXd LatentCounts::sample_factor_sums() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(K_, J_);
  for (int i = 0; i < I_; ++i)
    for (int j = 0; j < J_; ++j)
      for (int k = 0; k < K_; ++k) out(k, j) += at(i, j, k);
  return out;
}

void LatentCounts::check_consistent(const Eigen::MatrixXi& x) const {
  if (x.rows() != I_ || x.cols() != J_)
    throw std::invalid_argument("LatentCounts: dimension mismatch with count matrix");
  for (int i = 0; i < I_; ++i)
    for (int j = 0; j < J_; ++j) {
      int s = 0;
      for (int k = 0; k < K_; ++k) s += at(i, j, k);
      if (s != x(i, j))
        throw std::logic_error("LatentCounts: slice sums do not reproduce the count matrix");
    }
}

void LatentCounts::permute_factors(const std::vector<int>& perm) {
  if (perm.size() != static_cast<size_t>(K_))
    throw std::invalid_argument("permute_factors: permutation size mismatch");
  std::vector<int> fresh(y_.size());
  for (int i = 0; i < I_; ++i)
    for (int j = 0; j < J_; ++j)
      for (int k = 0; k < K_; ++k)
        fresh[idx(i, j, k)] = y_[idx(i, j, perm[k])];
  y_.swap(fresh);
}

}  // namespace cnmf
