#include <doctest.h>

#include <cmath>
#include <vector>

#include "cnmf/rng.hpp"

using namespace cnmf;

TEST_SUITE_BEGIN("rng");

TEST_CASE("identical seeds produce identical sequences") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.uniform() == b.uniform());
    CHECK(a.gamma(0.7, 2.0) == b.gamma(0.7, 2.0));
    CHECK(a.poisson(12.5) == b.poisson(12.5));
  }
}

TEST_CASE("gamma mean: shape 1 rate 2") {
  Rng rng(1);
  const int n = 100000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.gamma(1.0, 2.0);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double sd = std::sqrt(sq / n - mean * mean);
  CHECK(std::fabs(mean - 0.5) < 3.0 * sd / std::sqrt(double(n)));
}

TEST_CASE("gamma small shape via boosted draw") {
  Rng rng(2);
  const int n = 200000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rng.gamma(0.5, 0.5);
  // mean 1, variance 2
  CHECK(std::fabs(sum / n - 1.0) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("inverse gamma mean") {
  Rng rng(3);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rng.inv_gamma(5.0, 3.002);
  CHECK(sum / n == doctest::Approx(3.002 / 4.0).epsilon(0.02));
}

TEST_CASE("dirichlet coordinate means at alpha 0.5, I 96") {
  Rng rng(4);
  const int n = 10000, I = 96;
  const Eigen::VectorXd conc = Eigen::VectorXd::Constant(I, 0.5);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(I);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd d = rng.dirichlet(conc);
    CHECK(std::fabs(d.sum() - 1.0) < 1e-12);
    mean += d;
  }
  mean /= n;
  // per-coordinate variance of Dirichlet(0.5,...) coordinates
  const double se = std::sqrt((1.0 / 96) * (1 - 1.0 / 96) / (0.5 * 96 + 1) / n);
  for (int c = 0; c < I; ++c) CHECK(std::fabs(mean[c] - 1.0 / 96) < 4.0 * se);
}

TEST_CASE("multinomial zero trials") {
  Rng rng(5);
  Eigen::VectorXd p(3);
  p << 0.2, 0.5, 0.3;
  CHECK(rng.multinomial(0, p).sum() == 0);
}

TEST_CASE("multinomial counts sum to n and match proportions") {
  Rng rng(6);
  Eigen::VectorXd p(4);
  p << 0.1, 0.2, 0.3, 0.4;
  Eigen::VectorXd freq = Eigen::VectorXd::Zero(4);
  const int reps = 2000, n = 50;
  for (int r = 0; r < reps; ++r) {
    const Eigen::VectorXi draw = rng.multinomial(n, p);
    CHECK(draw.sum() == n);
    freq += draw.cast<double>();
  }
  freq /= double(reps) * n;
  for (int k = 0; k < 4; ++k)
    CHECK(std::fabs(freq[k] - p[k]) < 4.0 * std::sqrt(p[k] * (1 - p[k]) / (reps * n)));
}

TEST_CASE("multinomial tolerates zero probabilities") {
  Rng rng(7);
  Eigen::VectorXd p(3);
  p << 0.0, 1.0, 0.0;
  const Eigen::VectorXi draw = rng.multinomial(10, p);
  CHECK(draw[0] == 0);
  CHECK(draw[1] == 10);
  CHECK(draw[2] == 0);
}

TEST_CASE("binomial large n avoids underflow") {
  Rng rng(8);
  const long long n = 100000;
  const long long x = rng.binomial(n, 0.75);
  CHECK(std::fabs(double(x) / n - 0.75) < 4.0 * std::sqrt(0.75 * 0.25 / n));
  CHECK(rng.binomial(50, 0.0) == 0);
  CHECK(rng.binomial(50, 1.0) == 50);
}

TEST_CASE("poisson mean and variance, both regimes") {
  Rng rng(9);
  for (const double lam : {3.5, 80.0}) {
    const int n = 100000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = double(rng.poisson(lam));
      sum += x;
      sq += x * x;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(std::fabs(mean - lam) < 4.0 * std::sqrt(lam / n));
    CHECK(var == doctest::Approx(lam).epsilon(0.05));
  }
}

TEST_CASE("domain errors") {
  Rng rng(10);
  CHECK_THROWS_AS(rng.gamma(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rng.gamma(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(rng.poisson(-0.1), std::domain_error);
  Eigen::VectorXd bad(2);
  bad << 0.5, 0.6;
  CHECK_THROWS_AS(rng.multinomial(3, bad), std::domain_error);
}

TEST_SUITE_END();
