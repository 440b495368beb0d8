#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cnmf/sampler.hpp"
#include "cnmf/types.hpp"

namespace cnmf {

/// Shortest round-trip decimal rendering (17 significant digits).
std::string format_double(double v);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex characters.
std::string fnv1a64_hex_file(const std::string& path);

/// Counts CSV layout: header "channel,<sample ids...>", one row per channel,
/// integer entries. Parse errors carry 1-based line numbers.
void write_counts_csv(const std::string& path, const CountMatrix& data);
CountMatrix read_counts_csv(const std::string& path);

/// Generic labeled real matrix, written with 17 significant digits.
struct LabeledMatrix {
  std::string corner;  // header cell above the row labels
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Eigen::MatrixXd values;
};

void write_matrix_csv(const std::string& path, const LabeledMatrix& m);
LabeledMatrix read_matrix_csv(const std::string& path);

/// Catalog CSV: first column channel label, one column per signature.
/// Columns must be stochastic within 1e-9; off by at most 1e-6 are
/// renormalized, anything worse raises DataFormatError.
struct SignatureFile {
  Eigen::MatrixXd S;
  std::vector<std::string> names;
  std::vector<std::string> channel_labels;
};

SignatureFile read_signature_csv(const std::string& path);
void write_signature_csv(const std::string& path, const SignatureFile& sig);

/// Column-per-series trace CSV with a header row.
void write_trace_csv(const std::string& path, const std::vector<std::string>& names,
                     const std::vector<std::vector<double>>& columns);

/// Reads the first numeric column of a CSV (header row optional).
std::vector<double> read_single_trace_csv(const std::string& path);

/// Retained draws in a compact native-endian binary container, so the
/// diagnostics command can recover per-entry traces from a finished fit.
struct FitDraws {
  int K_pre = 0;
  std::vector<Eigen::MatrixXd> R;
  std::vector<Eigen::MatrixXd> Theta;
  std::vector<Eigen::VectorXd> mu;
};

void write_draws_bin(const std::string& path, const PosteriorSamples& samples);
FitDraws read_draws_bin(const std::string& path);

}  // namespace cnmf
