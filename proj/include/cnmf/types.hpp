#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace cnmf {

/// Observed mutation counts: I channels by J samples, nonnegative integers.
struct CountMatrix {
  Eigen::MatrixXi counts;
  std::vector<std::string> channel_labels;
  std::vector<std::string> sample_labels;

  int I() const { return static_cast<int>(counts.rows()); }
  int J() const { return static_cast<int>(counts.cols()); }

  /// Checks dims >= 1, labels matching dims, entries >= 0.
  void validate() const;

  static CountMatrix from_counts(Eigen::MatrixXi x);  // generates default labels
};

/// Checks every column of S sums to 1 within check_tol; columns off by at
/// most renorm_tol are renormalized in place, anything worse throws
/// DataFormatError. Negative entries always throw.
void enforce_column_stochastic(Eigen::MatrixXd& S, double check_tol = 1e-9,
                               double renorm_tol = 1e-6);

/// Latent allocation tensor Y, I x J x K with sum_k Y(i,j,k) = X(i,j).
/// Aggregates are computed on demand rather than cached.
class LatentCounts {
 public:
  LatentCounts() = default;
  LatentCounts(int I, int J, int K) : I_(I), J_(J), K_(K), y_(size_t(I) * J * K, 0) {}

  int I() const { return I_; }
  int J() const { return J_; }
  int K() const { return K_; }

  int& at(int i, int j, int k) { return y_[idx(i, j, k)]; }
  int at(int i, int j, int k) const { return y_[idx(i, j, k)]; }

  /// Y_jk = sum_i Y_ijk
  long long sample_factor_sum(int j, int k) const;
  /// Ybar_k = (1/J) sum_j Y_jk
  double factor_mean(int k) const;
  /// I x K matrix of sum_j Y_ijk (the Dirichlet update statistics)
  Eigen::MatrixXd channel_factor_sums() const;
  /// K x J matrix of Y_jk
  Eigen::MatrixXd sample_factor_sums() const;

  void set_zero() { std::fill(y_.begin(), y_.end(), 0); }

  /// Verifies sum_k Y_ijk == X_ij for every cell.
  void check_consistent(const Eigen::MatrixXi& x) const;

  /// Reorders the factor slices by perm (slice k comes from perm[k]).
  void permute_factors(const std::vector<int>& perm);

 private:
  size_t idx(int i, int j, int k) const {
    return (size_t(i) * J_ + j) * K_ + k;
  }
  int I_ = 0, J_ = 0, K_ = 0;
  std::vector<int> y_;
};

}  // namespace cnmf
