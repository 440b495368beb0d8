#pragma once

namespace cnmf {

/// log of the confluent hypergeometric function of the second kind,
///   U(a, b, z) = 1/Gamma(a) * int_0^inf t^(a-1) (1+t)^(b-a-1) e^(-zt) dt,
/// for a > 0, z > 0 and any real b. Evaluated entirely in the log domain by
/// adaptive Gauss-Legendre quadrature after the substitution t = e^u - 1,
/// doubling panel counts until the log result changes by less than 1e-12.
/// Handles the large-parameter regimes produced by the Gibbs posteriors
/// (a of order 1e4, b strongly negative) without overflow.
double log_kummer_u(double a, double b, double z);

/// log of the Gauss hypergeometric function 2F1(a, b; c; z) via the Euler
/// integral, requiring c > b > 0 and z <= 0 (the only regime the model
/// needs). Uses tanh-sinh quadrature in the log domain, which absorbs the
/// integrable endpoint singularities when b < 1 or c - b < 1.
double log_gauss_2f1(double a, double b, double c, double z);

}  // namespace cnmf
