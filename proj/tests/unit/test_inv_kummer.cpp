#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "cnmf/inv_kummer.hpp"
#include "cnmf/rng.hpp"
#include "quadrature_oracle.hpp"

using namespace cnmf;

namespace {

double density_mode_hint(const InvKummerParams& p) {
  // crude: scan log-spaced grid for the max of the unnormalized density
  double best = 1.0, best_val = -1e300;
  for (double x = 1e-8; x < 1e8; x *= 1.5) {
    const double v = -(p.lambda - p.gamma + 1.0) * std::log(x) -
                     p.gamma * std::log1p(x / p.delta) - p.beta / x;
    if (v > best_val) {
      best_val = v;
      best = x;
    }
  }
  return best;
}

double quad_moment(const InvKummerParams& p, int m) {
  const double log_norm = inv_kummer_log_norm(p);
  const auto log_f = [&](double mu) {
    return inv_kummer_log_pdf(mu, p, log_norm) + m * std::log(mu);
  };
  return testoracle::integrate_positive_density(log_f, density_mode_hint(p));
}

double quad_mass(const InvKummerParams& p) { return quad_moment(p, 0); }

}  // namespace

TEST_SUITE_BEGIN("inv_kummer");

TEST_CASE("gamma = 0 reduces to inverse gamma: pdf value") {
  const InvKummerParams p{2.0, 1.0, 0.0, 1.0};
  CHECK(inv_kummer_log_pdf(1.0, p) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("density integrates to one") {
  CHECK(quad_mass({3.0, 0.5, 2.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-6));
  // posterior-shaped parameters: a=1, J=10, eps=0.001, Ybar=4
  CHECK(quad_mass({21.0, 0.01, 50.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("moment formula vs quadrature") {
  const InvKummerParams p1{3.0, 0.5, 2.0, 1.0};
  CHECK(inv_kummer_moment(1, p1) == doctest::Approx(quad_moment(p1, 1)).epsilon(1e-6));
  const InvKummerParams p2{5.0, 1.0, 4.0, 2.0};
  CHECK(inv_kummer_moment(2, p2) == doctest::Approx(quad_moment(p2, 2)).epsilon(1e-6));
}

TEST_CASE("gamma = 0 moment is the inverse-gamma mean") {
  CHECK(inv_kummer_moment(1, {3.0, 2.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("moment domain error when m >= lambda") {
  CHECK_THROWS_AS(inv_kummer_moment(3, InvKummerParams{3.0, 1.0, 0.0, 1.0}),
                  std::domain_error);
  CHECK_THROWS_AS(inv_kummer_moment(0, InvKummerParams{3.0, 1.0, 0.0, 1.0}),
                  std::domain_error);
}

TEST_CASE("mean is nondecreasing in gamma for lambda > 2") {
  const double grid[4] = {0.0, 1.0, 5.0, 20.0};
  double prev = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double m = inv_kummer_moment(1, {4.0, 1.5, grid[i], 1.0});
    if (i > 0) CHECK(m >= prev);
    prev = m;
  }
}

TEST_CASE("pdf domain errors") {
  CHECK_THROWS_AS(inv_kummer_log_pdf(0.0, InvKummerParams{2, 1, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(inv_kummer_log_pdf(1.0, InvKummerParams{-2, 1, 0, 1}), std::domain_error);
}

TEST_CASE("concentration point values") {
  // direct high-precision evaluation of the closed form
  CHECK(concentration_point(0.001, 5, 1) ==
        doctest::Approx(2.0007499062968472).epsilon(1e-12));
  CHECK(concentration_point(0.001, 0, 1) ==
        doctest::Approx(0.00099900298904480390).epsilon(1e-12));
}

TEST_CASE("concentration point is monotone in y") {
  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double y = 12.0 * i / 100.0;
    const double v = concentration_point(0.01, y, 1.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("approximation branches") {
  CHECK(concentration_point_approx(0.001, 5, 1) == doctest::Approx(2.0));
  CHECK(std::fabs(concentration_point_approx(0.001, 5, 1) -
                  concentration_point(0.001, 5, 1)) < 1e-3);
  CHECK(concentration_point_approx(0.001, 0, 1) ==
        doctest::Approx(0.001 / 1.001).epsilon(1e-12));
  const double approx = concentration_point_approx(0.001, 0.5, 1);
  CHECK(approx == doctest::Approx(0.0005 / 0.2515).epsilon(1e-9));
  CHECK(std::fabs(approx - concentration_point(0.001, 0.5, 1)) /
            concentration_point(0.001, 0.5, 1) <
        0.05);
}

TEST_CASE("approximation within 5% whenever eps << |y - a|") {
  for (const double y : {0.0, 0.3, 0.7, 2.0, 5.0, 40.0}) {
    const double a = 1.0;
    const double eps = std::min(0.001, std::fabs(y - a) / 150.0);
    if (eps <= 0.0) continue;
    const double exact = concentration_point(eps, y, a);
    const double approx = concentration_point_approx(eps, y, a);
    CHECK(std::fabs(exact - approx) / exact < 0.05);
  }
}

TEST_CASE("grid sampler mean matches the moment formula") {
  const InvKummerParams p{3.0, 0.5, 2.0, 1.0};
  const InvKummerGrid grid(p);
  Rng rng(11);
  const int n = 100000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = grid.sample(rng);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double sd = std::sqrt(sq / n - mean * mean);
  CHECK(std::fabs(mean - inv_kummer_moment(1, p)) < 3.0 * sd / std::sqrt(double(n)));
}

TEST_CASE("gamma = 0 sampler agrees with the inverse-gamma law (KS)") {
  const InvKummerParams p{3.0, 2.0, 0.0, 1.0};
  const InvKummerGrid grid(p);
  Rng rng(12);
  const int n = 10000;
  std::vector<double> draws(n);
  for (int i = 0; i < n; ++i) draws[i] = grid.sample(rng);
  std::sort(draws.begin(), draws.end());
  // InvGamma(3,2) CDF = Q(3, 2/x) upper regularized gamma; compute via series
  const auto upper_q = [](double s, double x) {
    // regularized upper incomplete gamma for small integer s
    double term = std::exp(-x);
    double sum = term;  // k = 0
    for (int k = 1; k < s; ++k) {
      term *= x / k;
      sum += term;
    }
    return sum;
  };
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double cdf = upper_q(3, 2.0 / draws[i]);
    ks = std::max(ks, std::fabs(cdf - (i + 1.0) / n));
    ks = std::max(ks, std::fabs(cdf - double(i) / n));
  }
  CHECK(ks < 1.628 / std::sqrt(double(n)));  // 1% critical value
}

TEST_CASE("fixed seed gives identical draws") {
  const InvKummerParams p{21.0, 0.01, 50.0, 1.0};
  Rng r1(77), r2(77);
  CHECK(inv_kummer_sample(p, r1) == inv_kummer_sample(p, r2));
}

TEST_SUITE_END();
