#include "cnmf/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cnmf/errors.hpp"

namespace cnmf {

namespace {

constexpr double kLogTol = 1e-12;   // doubling stops when |delta log| is below this
constexpr double kTailCut = 200.0;  // integrand drop (in log units) defining the bounds

// 32-point Gauss-Legendre rule on [-1, 1]; positive abscissas and weights.
constexpr int kGlHalf = 16;
constexpr double kGlX[kGlHalf] = {
    0.0483076656877383162, 0.1444719615827964934, 0.2392873622521370745,
    0.3318686022821276497, 0.4213512761306353454, 0.5068999089322293900,
    0.5877157572407623290, 0.6630442669302152009, 0.7321821187402896804,
    0.7944837959679424069, 0.8493676137325699701, 0.8963211557660521240,
    0.9349060759377396892, 0.9647622555875064307, 0.9856115115452683354,
    0.9972638618494815635};
constexpr double kGlW[kGlHalf] = {
    0.0965400885147278006, 0.0956387200792748594, 0.0938443990808045654,
    0.0911738786957638847, 0.0876520930044038111, 0.0833119242269467552,
    0.0781938957870703065, 0.0723457941088485062, 0.0658222227763618468,
    0.0586840934785355471, 0.0509980592623761762, 0.0428358980222266807,
    0.0342738629130214331, 0.0253920653092620595, 0.0162743947309056706,
    0.0070186100094700966};

// Streaming log-sum-exp accumulator.
class LogSum {
 public:
  void add(double term) {
    if (std::isinf(term) && term < 0.0) return;
    if (term > max_) {
      sum_ = sum_ * std::exp(max_ - term) + 1.0;
      max_ = term;
    } else {
      sum_ += std::exp(term - max_);
    }
  }
  double value() const {
    if (sum_ <= 0.0) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(sum_);
  }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
};

// Integrand of the U integral after t = e^u - 1, in log form.
struct KummerIntegrand {
  double a, b, z;
  double operator()(double u) const {
    const double t = std::expm1(u);
    if (t <= 0.0) return (a == 1.0) ? (b - a) * u : (a > 1.0 ? -std::numeric_limits<double>::infinity()
                                                             : std::numeric_limits<double>::infinity());
    if (!std::isfinite(t)) return -std::numeric_limits<double>::infinity();
    return (a - 1.0) * std::log(t) + (b - a) * u - z * t;
  }
};

// Positive root of z t^2 - (b-2-z) t - (a-1) = 0, the stationary point of the
// integrand in t-space; written to avoid cancellation for either sign of the
// linear coefficient.
double kummer_peak_t(double a, double b, double z) {
  const double B = b - 2.0 - z;
  const double C = a - 1.0;
  if (C <= 0.0) {
    // Integrand peaks at the origin unless the (1+t) factor grows first.
    const double disc = B * B + 4.0 * z * C;
    if (B > 0.0 && disc >= 0.0) return (B + std::sqrt(disc)) / (2.0 * z);
    return 1e-8;
  }
  const double disc = std::sqrt(B * B + 4.0 * z * C);
  if (B <= 0.0) return 2.0 * C / (disc - B);
  return (B + disc) / (2.0 * z);
}

template <typename F>
double composite_gl_log(const F& f, double lo, double hi, int panels) {
  LogSum acc;
  const double width = (hi - lo) / panels;
  const double log_half_width = std::log(width / 2.0);
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    for (int i = 0; i < kGlHalf; ++i) {
      const double dx = 0.5 * width * kGlX[i];
      const double lw = log_half_width + std::log(kGlW[i]);
      acc.add(lw + f(mid + dx));
      acc.add(lw + f(mid - dx));
    }
  }
  return acc.value();
}

template <typename F>
double refine_gl_log(const F& f, double lo, double hi, const char* what) {
  double prev = composite_gl_log(f, lo, hi, 8);
  for (int panels = 16; panels <= (1 << 15); panels *= 2) {
    const double cur = composite_gl_log(f, lo, hi, panels);
    if (std::fabs(cur - prev) < kLogTol) return cur;
    prev = cur;
  }
  throw ConvergenceError(std::string(what) + ": quadrature did not converge");
}

double log_add(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace

double log_kummer_u(double a, double b, double z) {
  if (!(a > 0.0)) throw std::domain_error("log_kummer_u: a must be positive");
  if (!(z > 0.0)) throw std::domain_error("log_kummer_u: z must be positive");

  if (a < 1.0) {
    // The t^(a-1) factor is singular at the origin. Split at t = 1 and map
    // t = s^(1/a) on the inner piece, which turns t^(a-1) dt into ds / a.
    const auto inner = [&](double s) {
      const double t = std::pow(s, 1.0 / a);
      return -std::log(a) + (b - a - 1.0) * std::log1p(t) - z * t;
    };
    const double log_inner = refine_gl_log(inner, 0.0, 1.0, "log_kummer_u");

    const KummerIntegrand g{a, b, z};
    const double u_lo = M_LN2;  // t = 1
    double u_hi = 2.0 * u_lo;
    const double ref = g(u_lo);
    while (g(u_hi) > ref - kTailCut) u_hi *= 2.0;
    const double log_outer = refine_gl_log(g, u_lo, u_hi, "log_kummer_u");

    return log_add(log_inner, log_outer) - std::lgamma(a);
  }

  const KummerIntegrand f{a, b, z};
  const double t_peak = kummer_peak_t(a, b, z);
  const double u_peak = std::log1p(t_peak);
  const double g_peak = f(u_peak);

  // Right bound: g decays superexponentially, so step out then bisect back.
  double u_hi = u_peak + std::max(1.0, u_peak);
  while (f(u_hi) > g_peak - kTailCut) u_hi *= 2.0;
  {
    double lo_br = u_peak, hi_br = u_hi;
    for (int it = 0; it < 80 && hi_br - lo_br > 1e-3 * hi_br; ++it) {
      const double mid = 0.5 * (lo_br + hi_br);
      if (f(mid) > g_peak - kTailCut)
        lo_br = mid;
      else
        hi_br = mid;
    }
    u_hi = hi_br;
  }

  // Left bound: for a > 1 the integrand vanishes at the origin.
  double u_lo = 0.0;
  if (a > 1.0) {
    double u = u_peak * 0.5;
    while (u > 1e-300 && f(u) > g_peak - kTailCut) u *= 0.5;
    double lo_br = u, hi_br = std::min(2.0 * u, u_peak);
    for (int it = 0; it < 80 && hi_br - lo_br > 1e-3 * hi_br; ++it) {
      const double mid = 0.5 * (lo_br + hi_br);
      if (f(mid) > g_peak - kTailCut)
        hi_br = mid;
      else
        lo_br = mid;
    }
    u_lo = lo_br;
  }

  return refine_gl_log(f, u_lo, u_hi, "log_kummer_u") - std::lgamma(a);
}

namespace {

double log_cosh(double x) {
  const double ax = std::fabs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - M_LN2;
}

// log(1 + e^t) without overflow; exact to double precision for t <= 40.
double log1p_exp(double t) {
  if (t > 40.0) return t;
  return std::log1p(std::exp(t));
}

// One tanh-sinh pass at step h over the Euler integrand of 2F1.
double tanh_sinh_log(double a, double b, double c, double z, double h) {
  const double log_pi_4 = std::log(M_PI / 4.0);
  const auto term_at = [&](double tau) {
    const double s = 0.5 * M_PI * std::sinh(tau);
    const double log_x = -log1p_exp(-2.0 * s);
    const double log_1mx = -log1p_exp(2.0 * s);
    double phi = (b - 1.0) * log_x + (c - b - 1.0) * log_1mx;
    phi -= a * std::log1p(-std::exp(log_x) * z);
    return std::log(h) + log_pi_4 + log_cosh(tau) - 2.0 * log_cosh(s) + phi;
  };

  LogSum acc;
  double max_seen = term_at(0.0);
  acc.add(max_seen);
  for (const double dir : {1.0, -1.0}) {
    int drops = 0;
    for (int j = 1; j < 100000; ++j) {
      const double t = term_at(dir * j * h);
      acc.add(t);
      max_seen = std::max(max_seen, t);
      if (t < max_seen - 750.0) {
        if (++drops >= 2) break;
      } else {
        drops = 0;
      }
    }
  }
  return acc.value();
}

}  // namespace

double log_gauss_2f1(double a, double b, double c, double z) {
  if (!(b > 0.0) || !(c > b)) throw std::domain_error("log_gauss_2f1: need c > b > 0");
  if (z > 0.0) throw std::domain_error("log_gauss_2f1: only z <= 0 is supported");
  if (z == 0.0) return 0.0;

  // log 2F1 = log integral - log B(b, c-b)
  const double log_inv_beta = std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b);
  double prev = tanh_sinh_log(a, b, c, z, 0.5);
  for (int level = 1; level <= 12; ++level) {
    const double cur = tanh_sinh_log(a, b, c, z, 0.5 / (1 << level));
    if (std::fabs(cur - prev) < kLogTol) return cur + log_inv_beta;
    prev = cur;
  }
  throw ConvergenceError("log_gauss_2f1: quadrature did not converge");
}

}  // namespace cnmf
