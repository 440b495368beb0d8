"""Compressive Bayesian Poisson NMF: automatic-rank factorization of count
matrices with Gibbs-sampled posteriors, a catalog-anchored informative prior,
and the inverse-Kummer special-function machinery behind the theory."""

from ._core import (
    ConvergenceError,
    DataFormatError,
    InvKummerParams,
    Rng,
    __version__,
    concentration_point,
    concentration_point_approx,
    cosine_similarity,
    effective_sample_size,
    elbow_curve,
    elicit_beta,
    expected_loading,
    fit,
    fit_cusp,
    hungarian_match,
    inv_kummer_log_pdf,
    inv_kummer_moment,
    inv_kummer_sample,
    log_gauss_2f1,
    log_kummer_u,
    marginal_latent_pmf,
    posterior_mu_params,
    precision_sensitivity,
    reference_catalog,
    simulate,
)

__all__ = [
    "ConvergenceError",
    "DataFormatError",
    "InvKummerParams",
    "Rng",
    "__version__",
    "concentration_point",
    "concentration_point_approx",
    "cosine_similarity",
    "effective_sample_size",
    "elbow_curve",
    "elicit_beta",
    "expected_loading",
    "fit",
    "fit_cusp",
    "hungarian_match",
    "inv_kummer_log_pdf",
    "inv_kummer_moment",
    "inv_kummer_sample",
    "log_gauss_2f1",
    "log_kummer_u",
    "marginal_latent_pmf",
    "posterior_mu_params",
    "precision_sensitivity",
    "reference_catalog",
    "simulate",
]
