#pragma once

// Test-only quadrature oracle, independent of the library's special-function
// path: composite Simpson on the log axis with interval doubling.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace testoracle {

// Integrates exp(log_f(mu)) over (0, inf) via mu = e^x, refining until the
// relative change is below rel_tol.
inline double integrate_positive_density(const std::function<double(double)>& log_f,
                                         double mode_hint, double rel_tol = 1e-9) {
  const double x_mode = std::log(mode_hint);
  double shift = log_f(mode_hint) + x_mode;
  double x_lo = x_mode, x_hi = x_mode;
  const auto g_log = [&](double x) { return log_f(std::exp(x)) + x; };
  while (g_log(x_lo) > shift - 45.0) x_lo -= 0.5;
  while (g_log(x_hi) > shift - 45.0) x_hi += 0.5;

  const auto simpson = [&](int n) {
    // n even panels over [x_lo, x_hi]
    const double h = (x_hi - x_lo) / n;
    double acc = std::exp(g_log(x_lo) - shift) + std::exp(g_log(x_hi) - shift);
    for (int i = 1; i < n; ++i)
      acc += std::exp(g_log(x_lo + i * h) - shift) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
  };

  double prev = simpson(64);
  for (int n = 128; n <= (1 << 22); n *= 2) {
    const double cur = simpson(n);
    if (std::fabs(cur - prev) <= rel_tol * std::fabs(cur)) return cur * std::exp(shift);
    prev = cur;
  }
  throw std::runtime_error("test oracle: quadrature did not converge");
}

}  // namespace testoracle
