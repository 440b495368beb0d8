#include <doctest.h>

#include <cmath>

#include "cnmf/cusp.hpp"
#include "cnmf/simulate.hpp"

using namespace cnmf;

namespace {

CountMatrix small_data(std::uint64_t seed) {
  SimulationSpec spec;
  spec.J = 12;
  spec.K_new0 = 2;
  spec.I = 20;
  spec.seed = seed;
  Rng rng(seed);
  return simulate_dataset(spec, rng).X;
}

}  // namespace

TEST_SUITE_BEGIN("cusp");

TEST_CASE("forcing every indicator into the spike pins all relevances") {
  const CountMatrix data = small_data(1);
  CuspConfig cfg;
  cfg.K = 6;
  Rng rng(2);
  CuspState s = cusp_init(data, cfg, rng);
  // sweep with the spike-allocation step replaced by a forced assignment
  cusp_step_latent(s, data, rng);
  cusp_step_individual_loadings(s, cfg, rng);
  cusp_step_signatures(s, cfg, rng);
  s.Z.setConstant(1);  // Z_k = 1 <= k for every k
  cusp_step_sticks(s, cfg, rng);
  cusp_recompute_weights(s);
  cusp_step_relevance(s, cfg, rng);
  for (int k = 0; k < cfg.K; ++k) CHECK(s.mu[k] == cfg.mu_inf);
}

TEST_CASE("K = 1 forces the spike deterministically") {
  const CountMatrix data = small_data(3);
  CuspConfig cfg;
  cfg.K = 1;
  Rng rng(4);
  CuspState s = cusp_init(data, cfg, rng);
  for (int it = 0; it < 20; ++it) {
    cusp_sweep(s, data, cfg, rng);
    CHECK(s.Z[0] == 1);
    CHECK(s.spiked(0));
    CHECK(s.mu[0] == cfg.mu_inf);
  }
}

TEST_CASE("stick weights always sum to one") {
  const CountMatrix data = small_data(5);
  CuspConfig cfg;
  cfg.K = 8;
  Rng rng(6);
  CuspState s = cusp_init(data, cfg, rng);
  for (int it = 0; it < 50; ++it) {
    cusp_sweep(s, data, cfg, rng);
    CHECK(std::fabs(s.phi.sum() - 1.0) < 1e-12);
    CHECK(s.v[cfg.K - 1] == 1.0);
  }
}

TEST_CASE("spiked factors carry exactly mu_inf in every retained draw") {
  const CountMatrix data = small_data(7);
  CuspConfig cfg;
  cfg.K = 6;
  SamplerConfig scfg;
  scfg.n_iter = 200;
  scfg.burn_in = 100;
  const CuspSamples out = run_cusp_chain(data, cfg, scfg, 8);
  REQUIRE(out.retained() > 0);
  for (int d = 0; d < out.retained(); ++d)
    for (int k = 0; k < cfg.K; ++k)
      if (out.Z[d][k] <= k + 1) CHECK(out.mu[d][k] == cfg.mu_inf);
}

TEST_CASE("slab-matching spike smoke run keeps invariants") {
  const CountMatrix data = small_data(9);
  CuspConfig cfg;
  cfg.K = 5;
  cfg.mu_inf = 1.0;
  cfg.a0 = 50.0;  // slab Gamma(50, 50): mean 1, concentrated at the spike
  cfg.b0 = 50.0;
  SamplerConfig scfg;
  scfg.n_iter = 150;
  scfg.burn_in = 100;
  const CuspSamples out = run_cusp_chain(data, cfg, scfg, 10);
  CHECK(out.retained() == 50);
  for (const auto& m : out.mu) CHECK((m.array() > 0.0).all());
}

TEST_CASE("recovers the active count on clean synthetic data") {
  // tau = 0, K0 = 2 true signatures, truncation 10, J = 100
  int hits = 0;
  const int reps = 10;
  for (int rep = 0; rep < reps; ++rep) {
    SimulationSpec spec;
    spec.J = 100;
    spec.K_new0 = 2;
    spec.seed = 1000 + rep;
    Rng rng(spec.seed);
    const SimulatedDataset ds = simulate_dataset(spec, rng);
    CuspConfig cfg;
    cfg.K = 10;
    SamplerConfig scfg;
    scfg.n_iter = 800;
    scfg.burn_in = 600;
    const CuspSamples out = run_cusp_chain(ds.X, cfg, scfg, 2000 + rep);
    if (out.k_star_majority() == 2) ++hits;
  }
  CHECK(hits >= 7);
}

TEST_SUITE_END();
