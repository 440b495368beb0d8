// pybind11 surface: the main operations (special functions, inverse Kummer,
// simulation, inference, selection, diagnostics) exposed over numpy arrays.

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cnmf/cusp.hpp"
#include "cnmf/errors.hpp"
#include "cnmf/inv_kummer.hpp"
#include "cnmf/model.hpp"
#include "cnmf/rng.hpp"
#include "cnmf/sampler.hpp"
#include "cnmf/selection.hpp"
#include "cnmf/simulate.hpp"
#include "cnmf/special.hpp"
#include "cnmf/version.hpp"

namespace py = pybind11;
using namespace cnmf;

namespace {

ModelConfig make_model_config(int K, double epsilon, double a, double alpha,
                              std::optional<std::pair<double, double>> fixed_strength,
                              std::optional<Eigen::MatrixXd> catalog,
                              std::optional<std::vector<std::string>> catalog_labels,
                              std::optional<Eigen::VectorXd> catalog_beta, double b) {
  ModelConfig cfg;
  cfg.K = K;
  cfg.epsilon = epsilon;
  cfg.a = a;
  cfg.alpha = alpha;
  if (fixed_strength)
    cfg.fixed_strength = FixedStrengthHyperprior{fixed_strength->first, fixed_strength->second};
  if (catalog) {
    InformativePriorConfig inf;
    inf.S = *catalog;
    inf.b = b;
    const int kpre = static_cast<int>(inf.S.cols());
    if (catalog_labels) {
      inf.labels = *catalog_labels;
    } else {
      for (int k = 0; k < kpre; ++k) inf.labels.push_back("ref" + std::to_string(k + 1));
    }
    if (catalog_beta) {
      inf.beta = *catalog_beta;
    } else {
      inf.beta = Eigen::VectorXd::Constant(kpre, 50.0);
    }
    cfg.informative = inf;
  }
  return cfg;
}

py::dict summary_to_dict(const FitSummary& s) {
  py::dict out;
  out["K_star"] = s.K_star;
  out["active"] = s.active;
  out["mu_mean"] = s.mu_mean;
  out["mu_q05"] = s.mu_q05;
  out["mu_q95"] = s.mu_q95;
  out["factor_labels"] = s.factor_labels;
  out["R_hat"] = s.R_hat;
  out["Theta_hat"] = s.Theta_hat;
  out["R_lower"] = s.R_lower;
  out["R_upper"] = s.R_upper;
  out["Theta_lower"] = s.Theta_lower;
  out["Theta_upper"] = s.Theta_upper;
  if (!s.match_label.empty()) {
    out["match_label"] = s.match_label;
    out["match_cosine"] = s.match_cosine;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compressive Bayesian Poisson NMF";
  m.attr("__version__") = kVersion;

  py::register_exception<ConvergenceError>(m, "ConvergenceError");
  py::register_exception<DataFormatError>(m, "DataFormatError");

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", &Rng::uniform)
      .def("normal", &Rng::normal)
      .def("gamma", &Rng::gamma, py::arg("shape"), py::arg("rate"))
      .def("inv_gamma", &Rng::inv_gamma, py::arg("shape"), py::arg("scale"))
      .def("beta", &Rng::beta, py::arg("a"), py::arg("b"))
      .def("poisson", &Rng::poisson, py::arg("mean"))
      .def("binomial", &Rng::binomial, py::arg("n"), py::arg("p"))
      .def("dirichlet", &Rng::dirichlet, py::arg("concentrations"))
      .def("multinomial", &Rng::multinomial, py::arg("n"), py::arg("probs"));

  m.def("log_kummer_u", &log_kummer_u, py::arg("a"), py::arg("b"), py::arg("z"));
  m.def("log_gauss_2f1", &log_gauss_2f1, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("z"));

  py::class_<InvKummerParams>(m, "InvKummerParams")
      .def(py::init([](double lambda, double beta, double gamma, double delta) {
             InvKummerParams p{lambda, beta, gamma, delta};
             p.validate();
             return p;
           }),
           py::arg("lam"), py::arg("beta"), py::arg("gamma"), py::arg("delta"))
      .def_readonly("lam", &InvKummerParams::lambda)
      .def_readonly("beta", &InvKummerParams::beta)
      .def_readonly("gamma", &InvKummerParams::gamma)
      .def_readonly("delta", &InvKummerParams::delta);

  m.def("inv_kummer_log_pdf",
        py::overload_cast<double, const InvKummerParams&>(&inv_kummer_log_pdf),
        py::arg("mu"), py::arg("params"));
  m.def("inv_kummer_moment", &inv_kummer_moment, py::arg("m"), py::arg("params"));
  m.def("inv_kummer_sample", &inv_kummer_sample, py::arg("params"), py::arg("rng"));
  m.def("concentration_point", &concentration_point, py::arg("epsilon"), py::arg("y"),
        py::arg("a"));
  m.def("concentration_point_approx", &concentration_point_approx, py::arg("epsilon"),
        py::arg("y"), py::arg("a"));
  m.def(
      "posterior_mu_params",
      [](double ybar, int J, double a, double epsilon) {
        ModelConfig cfg;
        cfg.a = a;
        cfg.epsilon = epsilon;
        return posterior_mu_params(ybar, J, cfg);
      },
      py::arg("ybar"), py::arg("J"), py::arg("a") = 1.0, py::arg("epsilon") = 0.001);
  m.def("expected_loading", &expected_loading, py::arg("a"), py::arg("epsilon"),
        py::arg("J"), py::arg("ybar"), py::arg("y_jk"));
  m.def("marginal_latent_pmf", &marginal_latent_pmf, py::arg("y"), py::arg("mu"),
        py::arg("a"), py::arg("alpha"), py::arg("I"));

  m.def(
      "simulate",
      [](int J, double tau, int K_new, std::optional<Eigen::MatrixXd> pre_signatures,
         int I, double dirichlet_new, double w_shape, std::uint64_t seed) {
        SimulationSpec spec;
        spec.J = J;
        spec.tau = tau;
        spec.K_new0 = K_new;
        spec.I = I;
        if (pre_signatures) {
          spec.pre_signatures = *pre_signatures;
          spec.I = static_cast<int>(pre_signatures->rows());
        }
        if (dirichlet_new > 0) spec.dirichlet_new = dirichlet_new;
        if (w_shape > 0) spec.loading_scale_shape = w_shape;
        spec.seed = seed;
        Rng rng(seed);
        const SimulatedDataset ds = simulate_dataset(spec, rng);
        py::dict out;
        out["X"] = ds.X.counts;
        out["R0"] = ds.R0;
        out["Theta0"] = ds.Theta0;
        out["Lambda0"] = ds.Lambda0;
        out["channel_labels"] = ds.X.channel_labels;
        out["factor_labels"] = ds.factor_labels;
        return out;
      },
      py::arg("J") = 50, py::arg("tau") = 0.0, py::arg("K_new") = 2,
      py::arg("pre_signatures") = py::none(), py::arg("I") = 96,
      py::arg("dirichlet_new") = -1.0, py::arg("w_shape") = -1.0, py::arg("seed") = 0);

  m.def(
      "fit",
      [](const Eigen::MatrixXi& counts, int K, double epsilon, double a, double alpha,
         int n_iter, int burn_in, int n_chains, std::uint64_t seed, int thin,
         double threshold_C, std::optional<std::pair<double, double>> fixed_strength,
         std::optional<Eigen::MatrixXd> catalog,
         std::optional<std::vector<std::string>> catalog_labels,
         std::optional<Eigen::VectorXd> catalog_beta, double b) {
        const CountMatrix data = CountMatrix::from_counts(counts);
        ModelConfig cfg = make_model_config(K, epsilon, a, alpha, fixed_strength,
                                            catalog, catalog_labels, catalog_beta, b);
        SamplerConfig scfg;
        scfg.n_iter = n_iter;
        scfg.burn_in = burn_in >= 0 ? burn_in : (n_iter * 5) / 6;
        scfg.n_chains = n_chains;
        scfg.seed = seed;
        scfg.thin = thin;
        InferenceResult res;
        {
          py::gil_scoped_release release;
          res = run_inference(data, cfg, scfg);
        }
        const Eigen::MatrixXd* ref = cfg.informative ? &cfg.informative->S : nullptr;
        const std::vector<std::string>* ref_labels =
            cfg.informative ? &cfg.informative->labels : nullptr;
        const FitSummary summary =
            summarize_fit(res.selected, cfg, threshold_C, ref, ref_labels);
        py::dict out = summary_to_dict(summary);
        out["log_post"] = res.selected.log_post;
        out["selected_chain"] = res.selected_chain;
        out["chain_mean_log_post"] = res.chain_mean_log_post;
        py::list mu_draws;
        for (const auto& v : res.selected.mu) mu_draws.append(v);
        out["mu_draws"] = mu_draws;
        return out;
      },
      py::arg("counts"), py::arg("K") = 20, py::arg("epsilon") = 0.001,
      py::arg("a") = 1.0, py::arg("alpha") = 0.5, py::arg("n_iter") = 12000,
      py::arg("burn_in") = -1, py::arg("n_chains") = 1, py::arg("seed") = 0,
      py::arg("thin") = 1, py::arg("threshold_C") = 5.0,
      py::arg("fixed_strength") = py::none(), py::arg("catalog") = py::none(),
      py::arg("catalog_labels") = py::none(), py::arg("catalog_beta") = py::none(),
      py::arg("b") = 1.0);

  m.def(
      "fit_cusp",
      [](const Eigen::MatrixXi& counts, int K, double a, double alpha, double alpha_pi,
         double mu_inf, double a0, double b0, int n_iter, int burn_in,
         std::uint64_t seed) {
        const CountMatrix data = CountMatrix::from_counts(counts);
        CuspConfig cfg;
        cfg.K = K;
        cfg.a = a;
        cfg.alpha = alpha;
        cfg.alpha_pi = alpha_pi;
        cfg.mu_inf = mu_inf;
        cfg.a0 = a0;
        cfg.b0 = b0;
        SamplerConfig scfg;
        scfg.n_iter = n_iter;
        scfg.burn_in = burn_in >= 0 ? burn_in : (n_iter * 5) / 6;
        scfg.seed = seed;
        CuspSamples samples;
        {
          py::gil_scoped_release release;
          samples = run_cusp_chain(data, cfg, scfg, splitmix64(seed));
        }
        py::dict out;
        out["K_star"] = samples.k_star_majority();
        out["K_star_spike_prob"] = samples.k_star_spike_prob(0.05);
        out["spike_probability"] = samples.spike_probability();
        out["mu_mean"] = samples.mu_mean();
        out["R_mean"] = samples.R_mean();
        out["Theta_mean"] = samples.Theta_mean();
        return out;
      },
      py::arg("counts"), py::arg("K") = 20, py::arg("a") = 1.0, py::arg("alpha") = 0.5,
      py::arg("alpha_pi") = 5.0, py::arg("mu_inf") = 0.01, py::arg("a0") = 1.0,
      py::arg("b0") = 1.0, py::arg("n_iter") = 2000, py::arg("burn_in") = -1,
      py::arg("seed") = 0);

  m.def("cosine_similarity", &cosine_similarity, py::arg("u"), py::arg("v"));
  m.def(
      "hungarian_match",
      [](const Eigen::MatrixXd& est, const Eigen::MatrixXd& ref) {
        const MatchResult r = hungarian_match(est, ref);
        py::dict out;
        out["width"] = r.width;
        out["est_for_ref"] = r.est_for_ref;
        out["ref_of_est"] = r.ref_of_est;
        out["total_similarity"] = r.total_similarity;
        return out;
      },
      py::arg("estimated"), py::arg("reference"));
  m.def(
      "precision_sensitivity",
      [](const Eigen::MatrixXd& est, const Eigen::MatrixXd& truth, double cutoff) {
        const MetricsReport r = precision_sensitivity(est, truth, cutoff);
        py::dict out;
        out["precision"] = r.precision;
        out["sensitivity"] = r.sensitivity;
        out["f1"] = r.f1;
        out["empty_estimate"] = r.empty_estimate;
        return out;
      },
      py::arg("estimated"), py::arg("truth"), py::arg("cutoff") = 0.9);
  m.def(
      "effective_sample_size",
      [](const std::vector<double>& trace) {
        const EssResult r = effective_sample_size(trace);
        return py::make_tuple(r.ess, r.degenerate);
      },
      py::arg("trace"));
  m.def(
      "elbow_curve",
      [](double a, double epsilon, int J, const std::vector<double>& ybar_grid,
         std::optional<std::pair<double, double>> fixed_strength) {
        ModelConfig cfg;
        cfg.a = a;
        cfg.epsilon = epsilon;
        if (fixed_strength)
          cfg.fixed_strength =
              FixedStrengthHyperprior{fixed_strength->first, fixed_strength->second};
        const std::vector<ElbowRow> rows = elbow_curve(cfg, J, ybar_grid);
        Eigen::MatrixXd out(rows.size(), 4);
        for (size_t i = 0; i < rows.size(); ++i)
          out.row(i) << rows[i].ybar, rows[i].mean, rows[i].q10, rows[i].q90;
        return out;
      },
      py::arg("a"), py::arg("epsilon"), py::arg("J"), py::arg("ybar_grid"),
      py::arg("fixed_strength") = py::none());
  m.def(
      "elicit_beta",
      [](const Eigen::VectorXd& s, double target_cos, int n_draws, std::uint64_t seed) {
        Rng rng(seed);
        const ElicitResult r = elicit_beta(s, target_cos, n_draws, default_beta_grid(), rng);
        return py::make_tuple(r.beta, r.median_cos, r.degenerate);
      },
      py::arg("s"), py::arg("target_cos") = 0.975, py::arg("n_draws") = 1000,
      py::arg("seed") = 0);

  m.def(
      "reference_catalog",
      []() {
        const ReferenceCatalog& cat = reference_catalog();
        py::dict out;
        out["S"] = cat.S;
        out["names"] = cat.names;
        out["channel_labels"] = cat.channel_labels;
        return out;
      });
}
