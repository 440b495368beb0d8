#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "cnmf/errors.hpp"
#include "cnmf/io.hpp"
#include "cnmf/rng.hpp"
#include "cnmf/sampler.hpp"
#include "cnmf/simulate.hpp"

using namespace cnmf;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("cnmf_io_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("counts CSV round trip is exact") {
  TempDir tmp;
  SimulationSpec spec;
  spec.J = 9;
  spec.K_new0 = 2;
  spec.seed = 1;
  Rng rng(1);
  const CountMatrix data = simulate_dataset(spec, rng).X;
  write_counts_csv(tmp.file("c.csv"), data);
  const CountMatrix back = read_counts_csv(tmp.file("c.csv"));
  CHECK(back.counts == data.counts);
  CHECK(back.channel_labels == data.channel_labels);
  CHECK(back.sample_labels == data.sample_labels);
}

TEST_CASE("real matrix CSV round trip is bit-exact") {
  TempDir tmp;
  Rng rng(2);
  LabeledMatrix m;
  m.corner = "row";
  m.values.resize(4, 3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j)
      m.values(i, j) = (rng.uniform() - 0.5) * std::pow(10.0, 40.0 * (rng.uniform() - 0.5));
  m.values(0, 0) = 1.0 / 3.0;
  m.values(1, 1) = 5e-324;  // smallest subnormal
  for (int i = 0; i < 4; ++i) m.row_labels.push_back("r" + std::to_string(i));
  for (int j = 0; j < 3; ++j) m.col_labels.push_back("c" + std::to_string(j));
  write_matrix_csv(tmp.file("m.csv"), m);
  const LabeledMatrix back = read_matrix_csv(tmp.file("m.csv"));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) CHECK(back.values(i, j) == m.values(i, j));
}

TEST_CASE("malformed counts report line numbers") {
  TempDir tmp;
  {
    std::ofstream f(tmp.file("bad.csv"));
    f << "channel,S1,S2\nA,1,2\nB,3\n";
  }
  CHECK_THROWS_WITH_AS(read_counts_csv(tmp.file("bad.csv")),
                       doctest::Contains(":3:"), DataFormatError);
  {
    std::ofstream f(tmp.file("frac.csv"));
    f << "channel,S1\nA,1.5\n";
  }
  CHECK_THROWS_WITH_AS(read_counts_csv(tmp.file("frac.csv")),
                       doctest::Contains(":2:"), DataFormatError);
  {
    std::ofstream f(tmp.file("neg.csv"));
    f << "channel,S1\nA,-3\n";
  }
  CHECK_THROWS_AS(read_counts_csv(tmp.file("neg.csv")), DataFormatError);
}

TEST_CASE("signature columns renormalize within tolerance only") {
  TempDir tmp;
  {
    std::ofstream f(tmp.file("ok.csv"));
    f << "channel,SigA\nc1,0.4000001\nc2,0.6\n";  // off by 1e-7 < 1e-6
  }
  const SignatureFile ok = read_signature_csv(tmp.file("ok.csv"));
  CHECK(ok.S.col(0).sum() == doctest::Approx(1.0).epsilon(1e-12));
  {
    std::ofstream f(tmp.file("bad.csv"));
    f << "channel,SigA\nc1,0.41\nc2,0.6\n";  // off by 1e-2
  }
  CHECK_THROWS_AS(read_signature_csv(tmp.file("bad.csv")), DataFormatError);
}

TEST_CASE("draws container round trip") {
  TempDir tmp;
  SimulationSpec spec;
  spec.J = 6;
  spec.K_new0 = 2;
  spec.I = 10;
  spec.seed = 3;
  Rng rng(3);
  const CountMatrix data = simulate_dataset(spec, rng).X;
  ModelConfig cfg;
  cfg.K = 3;
  SamplerConfig scfg;
  scfg.n_iter = 30;
  scfg.burn_in = 10;
  const PosteriorSamples samples = run_chain(data, cfg, scfg, 4);
  write_draws_bin(tmp.file("d.bin"), samples);
  const FitDraws back = read_draws_bin(tmp.file("d.bin"));
  REQUIRE(back.mu.size() == samples.mu.size());
  CHECK(back.K_pre == 0);
  for (size_t d = 0; d < back.mu.size(); ++d) {
    CHECK(back.R[d] == samples.R[d]);
    CHECK(back.Theta[d] == samples.Theta[d]);
    CHECK(back.mu[d] == samples.mu[d]);
  }
}

TEST_CASE("trace CSV reads the second column and skips headers") {
  TempDir tmp;
  write_trace_csv(tmp.file("t.csv"), {"x"}, {{1.5, 2.5, -3.0}});
  const std::vector<double> back = read_single_trace_csv(tmp.file("t.csv"));
  CHECK(back == std::vector<double>{1.5, 2.5, -3.0});
}

TEST_CASE("digest is stable and content sensitive") {
  TempDir tmp;
  {
    std::ofstream f(tmp.file("a.txt"));
    f << "hello";
  }
  {
    std::ofstream f(tmp.file("b.txt"));
    f << "hellp";
  }
  const std::string da = fnv1a64_hex_file(tmp.file("a.txt"));
  CHECK(da == fnv1a64_hex_file(tmp.file("a.txt")));
  CHECK(da != fnv1a64_hex_file(tmp.file("b.txt")));
  CHECK(da.size() == 16);
}

TEST_SUITE_END();
