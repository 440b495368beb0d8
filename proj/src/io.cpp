#include "cnmf/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "cnmf/errors.hpp"

namespace cnmf {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  throw DataFormatError(path + ":" + std::to_string(line) + ": " + msg);
}

double parse_real(const std::string& path, int line, const std::string& tok) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0')
    fail(path, line, "cannot parse real value '" + tok + "'");
  return v;
}

int parse_count(const std::string& path, int line, const std::string& tok) {
  char* end = nullptr;
  const long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0')
    fail(path, line, "cannot parse integer count '" + tok + "'");
  if (v < 0) fail(path, line, "negative count '" + tok + "'");
  return static_cast<int>(v);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataFormatError("cannot open '" + path + "' for writing");
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DataFormatError("cannot open '" + path + "' for reading");
  return f;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fnv1a64_hex_file(const std::string& path) {
  std::ifstream f = open_in(path);
  std::uint64_t h = 1469598103934665603ULL;
  char chunk[4096];
  while (f.read(chunk, sizeof(chunk)) || f.gcount() > 0) {
    for (std::streamsize i = 0; i < f.gcount(); ++i) {
      h ^= static_cast<unsigned char>(chunk[i]);
      h *= 1099511628211ULL;
    }
    if (!f) break;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_counts_csv(const std::string& path, const CountMatrix& data) {
  data.validate();
  std::ofstream f = open_out(path);
  f << "channel";
  for (const auto& s : data.sample_labels) f << ',' << s;
  f << '\n';
  for (int i = 0; i < data.I(); ++i) {
    f << data.channel_labels[i];
    for (int j = 0; j < data.J(); ++j) f << ',' << data.counts(i, j);
    f << '\n';
  }
}

CountMatrix read_counts_csv(const std::string& path) {
  std::ifstream f = open_in(path);
  std::string line;
  if (!std::getline(f, line)) fail(path, 1, "empty file");
  const std::vector<std::string> header = split_csv_line(line);
  if (header.size() < 2) fail(path, 1, "header must name at least one sample");

  CountMatrix out;
  out.sample_labels.assign(header.begin() + 1, header.end());
  const size_t ncol = header.size();
  std::vector<std::vector<int>> rows;
  int lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> tok = split_csv_line(line);
    if (tok.size() != ncol)
      fail(path, lineno, "expected " + std::to_string(ncol) + " fields, found " +
                             std::to_string(tok.size()));
    out.channel_labels.push_back(tok[0]);
    std::vector<int> row(ncol - 1);
    for (size_t j = 1; j < ncol; ++j) row[j - 1] = parse_count(path, lineno, tok[j]);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(path, lineno, "no data rows");
  out.counts.resize(static_cast<int>(rows.size()), static_cast<int>(ncol - 1));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j + 1 < ncol; ++j) out.counts(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  out.validate();
  return out;
}

void write_matrix_csv(const std::string& path, const LabeledMatrix& m) {
  if (m.row_labels.size() != static_cast<size_t>(m.values.rows()) ||
      m.col_labels.size() != static_cast<size_t>(m.values.cols()))
    throw std::invalid_argument("write_matrix_csv: label sizes do not match values");
  std::ofstream f = open_out(path);
  f << m.corner;
  for (const auto& c : m.col_labels) f << ',' << c;
  f << '\n';
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
    f << m.row_labels[i];
    for (Eigen::Index j = 0; j < m.values.cols(); ++j)
      f << ',' << format_double(m.values(i, j));
    f << '\n';
  }
}

LabeledMatrix read_matrix_csv(const std::string& path) {
  std::ifstream f = open_in(path);
  std::string line;
  if (!std::getline(f, line)) fail(path, 1, "empty file");
  const std::vector<std::string> header = split_csv_line(line);
  if (header.size() < 2) fail(path, 1, "header must name at least one column");

  LabeledMatrix out;
  out.corner = header[0];
  out.col_labels.assign(header.begin() + 1, header.end());
  const size_t ncol = header.size();
  std::vector<std::vector<double>> rows;
  int lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> tok = split_csv_line(line);
    if (tok.size() != ncol)
      fail(path, lineno, "expected " + std::to_string(ncol) + " fields, found " +
                             std::to_string(tok.size()));
    out.row_labels.push_back(tok[0]);
    std::vector<double> row(ncol - 1);
    for (size_t j = 1; j < ncol; ++j) row[j - 1] = parse_real(path, lineno, tok[j]);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(path, lineno, "no data rows");
  out.values.resize(static_cast<int>(rows.size()), static_cast<int>(ncol - 1));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j + 1 < ncol; ++j)
      out.values(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return out;
}

SignatureFile read_signature_csv(const std::string& path) {
  const LabeledMatrix m = read_matrix_csv(path);
  SignatureFile out;
  out.S = m.values;
  out.names = m.col_labels;
  out.channel_labels = m.row_labels;
  try {
    enforce_column_stochastic(out.S);
  } catch (const DataFormatError& e) {
    throw DataFormatError(path + ": " + e.what());
  }
  return out;
}

void write_signature_csv(const std::string& path, const SignatureFile& sig) {
  LabeledMatrix m;
  m.corner = "channel";
  m.row_labels = sig.channel_labels;
  m.col_labels = sig.names;
  m.values = sig.S;
  write_matrix_csv(path, m);
}

void write_trace_csv(const std::string& path, const std::vector<std::string>& names,
                     const std::vector<std::vector<double>>& columns) {
  if (names.size() != columns.size())
    throw std::invalid_argument("write_trace_csv: names/columns mismatch");
  std::ofstream f = open_out(path);
  f << "iteration";
  for (const auto& n : names) f << ',' << n;
  f << '\n';
  const size_t rows = columns.empty() ? 0 : columns[0].size();
  for (const auto& c : columns)
    if (c.size() != rows) throw std::invalid_argument("write_trace_csv: ragged columns");
  for (size_t r = 0; r < rows; ++r) {
    f << (r + 1);
    for (const auto& c : columns) f << ',' << format_double(c[r]);
    f << '\n';
  }
}

std::vector<double> read_single_trace_csv(const std::string& path) {
  std::ifstream f = open_in(path);
  std::vector<double> out;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> tok = split_csv_line(line);
    const std::string& cell = tok.size() > 1 ? tok[1] : tok[0];
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0') {
      if (lineno == 1) continue;  // header row
      fail(path, lineno, "cannot parse trace value '" + cell + "'");
    } else {
      out.push_back(v);
    }
  }
  if (out.empty()) throw DataFormatError(path + ": no numeric trace values");
  return out;
}

namespace {

constexpr char kDrawsMagic[8] = {'C', 'N', 'M', 'F', 'D', 'R', 'W', '1'};

void put_i32(std::ofstream& f, std::int32_t v) {
  f.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

std::int32_t get_i32(std::ifstream& f, const std::string& path) {
  std::int32_t v = 0;
  if (!f.read(reinterpret_cast<char*>(&v), sizeof(v)))
    throw DataFormatError(path + ": truncated draws file");
  return v;
}

}  // namespace

void write_draws_bin(const std::string& path, const PosteriorSamples& samples) {
  if (samples.retained() == 0) throw std::logic_error("write_draws_bin: no retained draws");
  std::ofstream f = open_out(path);
  f.write(kDrawsMagic, sizeof(kDrawsMagic));
  const int n = samples.retained();
  const int I = static_cast<int>(samples.R[0].rows());
  const int K = static_cast<int>(samples.R[0].cols());
  const int J = static_cast<int>(samples.Theta[0].cols());
  put_i32(f, samples.K_pre);
  put_i32(f, n);
  put_i32(f, I);
  put_i32(f, K);
  put_i32(f, J);
  for (const auto& m : samples.R)
    f.write(reinterpret_cast<const char*>(m.data()), sizeof(double) * m.size());
  for (const auto& m : samples.Theta)
    f.write(reinterpret_cast<const char*>(m.data()), sizeof(double) * m.size());
  for (const auto& v : samples.mu)
    f.write(reinterpret_cast<const char*>(v.data()), sizeof(double) * v.size());
}

FitDraws read_draws_bin(const std::string& path) {
  std::ifstream f = open_in(path);
  char magic[8];
  if (!f.read(magic, sizeof(magic)) || std::memcmp(magic, kDrawsMagic, 8) != 0)
    throw DataFormatError(path + ": not a draws file");
  FitDraws out;
  out.K_pre = get_i32(f, path);
  const int n = get_i32(f, path);
  const int I = get_i32(f, path);
  const int K = get_i32(f, path);
  const int J = get_i32(f, path);
  if (n < 1 || I < 1 || K < 1 || J < 1) throw DataFormatError(path + ": bad dimensions");
  const auto read_block = [&](Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXd m(rows, cols);
    if (!f.read(reinterpret_cast<char*>(m.data()), sizeof(double) * m.size()))
      throw DataFormatError(path + ": truncated draws file");
    return m;
  };
  out.R.reserve(n);
  out.Theta.reserve(n);
  out.mu.reserve(n);
  for (int d = 0; d < n; ++d) out.R.push_back(read_block(I, K));
  for (int d = 0; d < n; ++d) out.Theta.push_back(read_block(K, J));
  for (int d = 0; d < n; ++d) {
    Eigen::VectorXd v(K);
    if (!f.read(reinterpret_cast<char*>(v.data()), sizeof(double) * v.size()))
      throw DataFormatError(path + ": truncated draws file");
    out.mu.push_back(std::move(v));
  }
  return out;
}

}  // namespace cnmf
