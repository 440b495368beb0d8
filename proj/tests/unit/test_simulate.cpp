#include <doctest.h>

#include <cmath>

#include "cnmf/rng.hpp"
#include "cnmf/simulate.hpp"

using namespace cnmf;

TEST_SUITE_BEGIN("simulate");

TEST_CASE("poisson branch: standardized residuals of 1e5 cells") {
  SimulationSpec spec;
  spec.tau = 0.0;
  spec.I = 96;
  spec.J = 1042;  // ~1e5 cells
  spec.K_new0 = 3;
  spec.seed = 1;
  Rng rng(spec.seed);
  const SimulatedDataset ds = simulate_dataset(spec, rng);

  double z_num = 0.0, var_sum = 0.0;
  double v_num = 0.0, v_den = 0.0;
  for (int i = 0; i < spec.I; ++i)
    for (int j = 0; j < spec.J; ++j) {
      const double lam = ds.Lambda0(i, j);
      const double d = ds.X.counts(i, j) - lam;
      z_num += d;
      var_sum += lam;
      v_num += d * d - lam;
      v_den += 2.0 * lam * lam + lam;  // Var((X-lam)^2) for Poisson
    }
  CHECK(std::fabs(z_num) < 3.0 * std::sqrt(var_sum));          // mean check
  CHECK(std::fabs(v_num) < 4.0 * std::sqrt(v_den));            // variance check
}

TEST_CASE("overdispersed branch: variance inflation near 1 + tau lambda") {
  SimulationSpec spec;
  spec.tau = 0.15;
  spec.I = 96;
  spec.J = 700;
  spec.K_new0 = 3;
  spec.loading_scale_shape = 300.0;  // push lambda up so the quadratic term shows
  spec.seed = 2;
  Rng rng(spec.seed);
  const SimulatedDataset ds = simulate_dataset(spec, rng);

  double num = 0.0, den = 0.0;
  for (int i = 0; i < spec.I; ++i)
    for (int j = 0; j < spec.J; ++j) {
      const double lam = ds.Lambda0(i, j);
      const double d = ds.X.counts(i, j) - lam;
      num += d * d;
      den += lam * (1.0 + spec.tau * lam);
    }
  CHECK(num / den == doctest::Approx(1.0).epsilon(0.10));
}

TEST_CASE("fixed seed reproduces the dataset exactly") {
  SimulationSpec spec;
  spec.J = 20;
  spec.K_new0 = 2;
  spec.seed = 3;
  Rng r1(spec.seed), r2(spec.seed);
  const SimulatedDataset a = simulate_dataset(spec, r1);
  const SimulatedDataset b = simulate_dataset(spec, r2);
  CHECK(a.X.counts == b.X.counts);
  CHECK(a.R0 == b.R0);
  CHECK(a.Theta0 == b.Theta0);
}

TEST_CASE("ground truth structure") {
  SimulationSpec spec;
  spec.J = 15;
  spec.K_new0 = 2;
  spec.pre_signatures = reference_catalog().S.leftCols(3);
  spec.seed = 4;
  Rng rng(spec.seed);
  const SimulatedDataset ds = simulate_dataset(spec, rng);
  CHECK(ds.R0.cols() == 5);
  for (int k = 0; k < ds.R0.cols(); ++k)
    CHECK(std::fabs(ds.R0.col(k).sum() - 1.0) < 1e-9);
  CHECK((ds.Lambda0 - ds.R0 * ds.Theta0).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((ds.Theta0.array() > 0.0).all());
}

TEST_CASE("mean loading scale matches the generative shapes") {
  // E(theta) = E(w) E(xi) = loading_scale_shape * 1
  SimulationSpec spec;
  spec.J = 50;
  spec.K_new0 = 3;
  double sum = 0.0;
  int n = 0;
  for (int rep = 0; rep < 100; ++rep) {
    spec.seed = 100 + rep;
    Rng rng(spec.seed);
    const SimulatedDataset ds = simulate_dataset(spec, rng);
    sum += ds.Theta0.sum();
    n += static_cast<int>(ds.Theta0.size());
  }
  CHECK(sum / n == doctest::Approx(100.0).epsilon(0.10));
}

TEST_CASE("indel regime sparsity fraction") {
  SimulationSpec spec;
  spec.apply_indel_regime();
  spec.J = 100;
  spec.K_new0 = 6;
  double frac = 0.0;
  const int reps = 5;
  for (int rep = 0; rep < reps; ++rep) {
    spec.seed = 50 + rep;
    Rng rng(spec.seed);
    const SimulatedDataset ds = simulate_dataset(spec, rng);
    CHECK(ds.X.I() == 83);
    frac += (ds.X.counts.array() == 0).cast<double>().sum() /
            static_cast<double>(ds.X.counts.size());
  }
  frac /= reps;
  CHECK(frac > 0.55);
  CHECK(frac < 0.75);
}

TEST_CASE("bundled catalog is column stochastic with matching labels") {
  const ReferenceCatalog& cat = reference_catalog();
  CHECK(cat.S.rows() == 96);
  CHECK(cat.S.cols() == 8);
  CHECK(cat.names.size() == 8);
  CHECK(cat.channel_labels.size() == 96);
  for (int k = 0; k < 8; ++k) CHECK(std::fabs(cat.S.col(k).sum() - 1.0) < 1e-9);
  CHECK(cat.channel_labels == sbs_channel_labels());
}

TEST_SUITE_END();
