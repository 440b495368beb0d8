// cnmf: compressive Bayesian Poisson NMF toolkit.
//
// Subcommands: simulate, fit, compare, diagnose, elbow, rerun. Every command
// writes a manifest.json capturing the resolved configuration, seeds and
// input digests; `cnmf rerun <manifest>` reproduces a run byte-identically.
// Exit codes: 0 success, 2 usage error, 3 data-format error, 4 numerical
// convergence error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnmf/cusp.hpp"
#include "cnmf/errors.hpp"
#include "cnmf/io.hpp"
#include "cnmf/model.hpp"
#include "cnmf/sampler.hpp"
#include "cnmf/selection.hpp"
#include "cnmf/simulate.hpp"
#include "cnmf/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace cnmf;

namespace {

// ---------------------------------------------------------------------------
// Manifest plumbing

class ManifestWriter {
 public:
  ManifestWriter(std::string command, const fs::path& out_dir)
      : command_(std::move(command)), out_dir_(out_dir),
        start_(std::chrono::steady_clock::now()) {
    fs::create_directories(out_dir);
  }

  void set_args(json args) { args_ = std::move(args); }
  void add_input(const std::string& path) {
    inputs_[path] = fnv1a64_hex_file(path);
  }
  void note_output(const std::string& name) { outputs_.push_back(name); }
  json& extra() { return extra_; }

  void write() const {
    json m;
    m["command"] = command_;
    m["version"] = kVersion;
    m["args"] = args_;
    m["inputs"] = inputs_;
    m["outputs"] = outputs_;
    for (const auto& [key, value] : extra_.items()) m[key] = value;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    m["duration_seconds"] = secs;
    std::ofstream f(out_dir_ / "manifest.json");
    f << m.dump(2) << '\n';
  }

  const fs::path& dir() const { return out_dir_; }

 private:
  std::string command_;
  fs::path out_dir_;
  std::chrono::steady_clock::time_point start_;
  json args_ = json::object();
  json inputs_ = json::object();
  std::vector<std::string> outputs_;
  json extra_ = json::object();
};

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::string cur;
  for (const char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  for (const double v : parse_double_list(csv)) out.push_back(static_cast<int>(v));
  return out;
}

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json mat_to_json(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    a.push_back(row);
  }
  return a;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string out;
  std::uint64_t seed = 0;
  double tau = 0.0;
  int J = 50;
  int K_new = 2;
  std::string regime = "sbs";
  std::string cosmic_file;  // empty = bundled catalog; "none" disables
  int pre_cols = -1;        // -1 = regime default (4 for sbs, 0 for indel)
  double dirichlet_new = -1.0;
  double w_shape = -1.0;
  double w_rate = 1.0;
  double xi_shape = 0.5;
  double xi_rate = 0.5;
};

json simulate_args_to_json(const SimulateArgs& a) {
  json j;
  j["out"] = a.out;
  j["seed"] = a.seed;
  j["tau"] = a.tau;
  j["J"] = a.J;
  j["K_new"] = a.K_new;
  j["regime"] = a.regime;
  j["cosmic_file"] = a.cosmic_file;
  j["pre_cols"] = a.pre_cols;
  j["dirichlet_new"] = a.dirichlet_new;
  j["w_shape"] = a.w_shape;
  j["w_rate"] = a.w_rate;
  j["xi_shape"] = a.xi_shape;
  j["xi_rate"] = a.xi_rate;
  return j;
}

SimulateArgs simulate_args_from_json(const json& j) {
  SimulateArgs a;
  a.out = j.at("out");
  a.seed = j.at("seed");
  a.tau = j.at("tau");
  a.J = j.at("J");
  a.K_new = j.at("K_new");
  a.regime = j.at("regime");
  a.cosmic_file = j.at("cosmic_file");
  a.pre_cols = j.at("pre_cols");
  a.dirichlet_new = j.at("dirichlet_new");
  a.w_shape = j.at("w_shape");
  a.w_rate = j.at("w_rate");
  a.xi_shape = j.at("xi_shape");
  a.xi_rate = j.at("xi_rate");
  return a;
}

void run_simulate(const SimulateArgs& args) {
  if (args.regime != "sbs" && args.regime != "indel")
    throw UsageError("simulate: --regime must be 'sbs' or 'indel'");

  ManifestWriter manifest("simulate", args.out);

  SimulationSpec spec;
  spec.tau = args.tau;
  spec.J = args.J;
  spec.K_new0 = args.K_new;
  spec.seed = args.seed;
  if (args.regime == "indel") {
    spec.apply_indel_regime();
  } else {
    spec.I = 96;
    spec.channel_labels = sbs_channel_labels();
  }
  if (args.dirichlet_new > 0.0) spec.dirichlet_new = args.dirichlet_new;
  if (args.w_shape > 0.0) spec.loading_scale_shape = args.w_shape;
  spec.loading_scale_rate = args.w_rate;
  spec.loading_indiv_shape = args.xi_shape;
  spec.loading_indiv_rate = args.xi_rate;

  int pre_cols = args.pre_cols >= 0 ? args.pre_cols : (args.regime == "sbs" ? 4 : 0);
  if (args.cosmic_file == "none") pre_cols = 0;
  if (pre_cols > 0) {
    Eigen::MatrixXd S;
    std::vector<std::string> names;
    if (args.cosmic_file.empty() || args.cosmic_file == "builtin") {
      const ReferenceCatalog& cat = reference_catalog();
      if (spec.I != cat.S.rows())
        throw UsageError("simulate: bundled catalog covers 96 channels only");
      S = cat.S;
      names = cat.names;
      spec.channel_labels = cat.channel_labels;
    } else {
      const SignatureFile sig = read_signature_csv(args.cosmic_file);
      manifest.add_input(args.cosmic_file);
      if (sig.S.rows() != spec.I)
        throw DataFormatError("simulate: catalog channel count does not match regime");
      S = sig.S;
      names = sig.names;
      spec.channel_labels = sig.channel_labels;
    }
    if (pre_cols > S.cols())
      throw UsageError("simulate: --pre-cols exceeds the catalog size");
    spec.pre_signatures = S.leftCols(pre_cols);
    spec.pre_labels.assign(names.begin(), names.begin() + pre_cols);
  }

  Rng rng(spec.seed);
  const SimulatedDataset ds = simulate_dataset(spec, rng);

  const fs::path dir = manifest.dir();
  write_counts_csv((dir / "counts.csv").string(), ds.X);
  manifest.note_output("counts.csv");

  SignatureFile truth_r;
  truth_r.S = ds.R0;
  truth_r.names = ds.factor_labels;
  truth_r.channel_labels = ds.X.channel_labels;
  write_signature_csv((dir / "truth_R.csv").string(), truth_r);
  manifest.note_output("truth_R.csv");

  LabeledMatrix theta;
  theta.corner = "factor";
  theta.row_labels = ds.factor_labels;
  theta.col_labels = ds.X.sample_labels;
  theta.values = ds.Theta0;
  write_matrix_csv((dir / "truth_Theta.csv").string(), theta);
  manifest.note_output("truth_Theta.csv");

  LabeledMatrix lambda;
  lambda.corner = "channel";
  lambda.row_labels = ds.X.channel_labels;
  lambda.col_labels = ds.X.sample_labels;
  lambda.values = ds.Lambda0;
  write_matrix_csv((dir / "truth_lambda.csv").string(), lambda);
  manifest.note_output("truth_lambda.csv");

  manifest.set_args(simulate_args_to_json(args));
  manifest.extra()["K0"] = spec.K0();
  manifest.write();
}

// ---------------------------------------------------------------------------
// fit

struct FitArgs {
  std::string input;
  std::string out;
  int K = 20;
  double epsilon = 0.001;
  double a = 1.0;
  double alpha = 0.5;
  int iters = 12000;
  int burnin = -1;  // -1: 5/6 of iters
  int chains = 1;
  int thin = 1;
  std::uint64_t seed = 0;
  double threshold_c = 5.0;
  std::string method = "compressive";
  double a0 = -1.0;  // method-dependent defaults
  double b0 = -1.0;
  std::string cosmic_file;
  int k_new = -1;  // resolved to 15 in catalog mode
  double b = 1.0;
  double beta_target = 0.975;
  int beta_draws = 1000;
  bool no_rematch = false;
  bool no_draws = false;
  double mu_inf = 0.01;
  double alpha_pi = 5.0;
};

json fit_args_to_json(const FitArgs& a) {
  json j;
  j["input"] = a.input;
  j["out"] = a.out;
  j["K"] = a.K;
  j["epsilon"] = a.epsilon;
  j["a"] = a.a;
  j["alpha"] = a.alpha;
  j["iters"] = a.iters;
  j["burnin"] = a.burnin;
  j["chains"] = a.chains;
  j["thin"] = a.thin;
  j["seed"] = a.seed;
  j["threshold_c"] = a.threshold_c;
  j["method"] = a.method;
  j["a0"] = a.a0;
  j["b0"] = a.b0;
  j["cosmic_file"] = a.cosmic_file;
  j["k_new"] = a.k_new;
  j["b"] = a.b;
  j["beta_target"] = a.beta_target;
  j["beta_draws"] = a.beta_draws;
  j["no_rematch"] = a.no_rematch;
  j["no_draws"] = a.no_draws;
  j["mu_inf"] = a.mu_inf;
  j["alpha_pi"] = a.alpha_pi;
  return j;
}

FitArgs fit_args_from_json(const json& j) {
  FitArgs a;
  a.input = j.at("input");
  a.out = j.at("out");
  a.K = j.at("K");
  a.epsilon = j.at("epsilon");
  a.a = j.at("a");
  a.alpha = j.at("alpha");
  a.iters = j.at("iters");
  a.burnin = j.at("burnin");
  a.chains = j.at("chains");
  a.thin = j.at("thin");
  a.seed = j.at("seed");
  a.threshold_c = j.at("threshold_c");
  a.method = j.at("method");
  a.a0 = j.at("a0");
  a.b0 = j.at("b0");
  a.cosmic_file = j.at("cosmic_file");
  a.k_new = j.at("k_new");
  a.b = j.at("b");
  a.beta_target = j.at("beta_target");
  a.beta_draws = j.at("beta_draws");
  a.no_rematch = j.at("no_rematch");
  a.no_draws = j.at("no_draws");
  a.mu_inf = j.at("mu_inf");
  a.alpha_pi = j.at("alpha_pi");
  return a;
}

void write_fit_outputs(ManifestWriter& manifest, const FitSummary& summary,
                       const CountMatrix& data, const std::string& method) {
  const fs::path dir = manifest.dir();

  json s;
  s["method"] = method;
  s["K_star"] = summary.K_star;
  s["threshold_C"] = summary.threshold_C;
  s["epsilon"] = summary.epsilon;
  json active = json::array();
  for (int a = 0; a < summary.K_star; ++a) {
    const int k = summary.active[a];
    json item;
    item["factor"] = k;
    item["label"] = summary.factor_labels[k];
    item["mu_mean"] = summary.mu_mean[k];
    item["mu_q05"] = summary.mu_q05[k];
    item["mu_q95"] = summary.mu_q95[k];
    if (!summary.match_label.empty()) {
      item["match_label"] = summary.match_label[a];
      item["match_cosine"] = summary.match_cosine[a];
    }
    active.push_back(item);
  }
  s["active"] = active;
  s["factor_labels"] = summary.factor_labels;
  s["mu_mean"] = vec_to_json(summary.mu_mean);
  s["mu_q05"] = vec_to_json(summary.mu_q05);
  s["mu_q95"] = vec_to_json(summary.mu_q95);
  s["channels"] = data.channel_labels;
  s["samples"] = data.sample_labels;
  s["R_hat"] = mat_to_json(summary.R_hat);
  s["Theta_hat"] = mat_to_json(summary.Theta_hat);
  s["R_ci_lower"] = mat_to_json(summary.R_lower);
  s["R_ci_upper"] = mat_to_json(summary.R_upper);
  s["Theta_ci_lower"] = mat_to_json(summary.Theta_lower);
  s["Theta_ci_upper"] = mat_to_json(summary.Theta_upper);
  {
    std::ofstream f(dir / "summary.json");
    f << s.dump(2) << '\n';
  }
  manifest.note_output("summary.json");

  std::vector<std::string> active_labels;
  for (const int k : summary.active) active_labels.push_back(summary.factor_labels[k]);

  LabeledMatrix rm;
  rm.corner = "channel";
  rm.row_labels = data.channel_labels;
  rm.col_labels = active_labels;
  rm.values = summary.R_hat;
  write_matrix_csv((dir / "R_mean.csv").string(), rm);
  manifest.note_output("R_mean.csv");

  LabeledMatrix tm;
  tm.corner = "factor";
  tm.row_labels = active_labels;
  tm.col_labels = data.sample_labels;
  tm.values = summary.Theta_hat;
  write_matrix_csv((dir / "Theta_mean.csv").string(), tm);
  manifest.note_output("Theta_mean.csv");
}

void run_fit(const FitArgs& args) {
  if (args.method != "compressive" && args.method != "fixed-strength" &&
      args.method != "cusp")
    throw UsageError("fit: --method must be compressive, fixed-strength, or cusp");
  const bool informative = !args.cosmic_file.empty();
  if (!informative && args.k_new >= 0)
    throw UsageError("fit: --k-new requires --cosmic-file");
  const int k_new = args.k_new >= 0 ? args.k_new : 15;
  if (informative && args.method != "compressive")
    throw UsageError("fit: --cosmic-file requires the compressive method");
  if (args.method != "fixed-strength" && args.method != "cusp" &&
      (args.a0 >= 0.0 || args.b0 >= 0.0))
    throw UsageError("fit: --a0/--b0 apply to fixed-strength or cusp only");

  ManifestWriter manifest("fit", args.out);
  const CountMatrix data = read_counts_csv(args.input);
  manifest.add_input(args.input);

  SamplerConfig scfg;
  scfg.n_iter = args.iters;
  scfg.burn_in = args.burnin >= 0 ? args.burnin : (args.iters * 5) / 6;
  scfg.n_chains = args.chains;
  scfg.seed = args.seed;
  scfg.thin = args.thin;
  scfg.rematch_enabled = !args.no_rematch;

  json resolved = fit_args_to_json(args);
  resolved["burnin"] = scfg.burn_in;
  if (informative) resolved["k_new"] = k_new;

  if (args.method == "cusp") {
    CuspConfig cfg;
    cfg.K = args.K;
    cfg.a = args.a;
    cfg.alpha = args.alpha;
    cfg.alpha_pi = args.alpha_pi;
    cfg.mu_inf = args.mu_inf;
    cfg.a0 = args.a0 >= 0.0 ? args.a0 : 1.0;
    cfg.b0 = args.b0 >= 0.0 ? args.b0 : 1.0;
    resolved["a0"] = cfg.a0;
    resolved["b0"] = cfg.b0;

    const std::uint64_t chain_seed = splitmix64(args.seed);
    const CuspSamples samples = run_cusp_chain(data, cfg, scfg, chain_seed);

    const Eigen::VectorXd spike_p = samples.spike_probability();
    std::vector<int> active;
    for (int k = 0; k < spike_p.size(); ++k)
      if (spike_p[k] < 0.5) active.push_back(k);
    const Eigen::VectorXd mu_mean = samples.mu_mean();
    std::sort(active.begin(), active.end(),
              [&](int x, int y) { return mu_mean[x] > mu_mean[y]; });

    const fs::path dir = manifest.dir();
    json s;
    s["method"] = "cusp";
    s["K_star"] = samples.k_star_majority();
    s["K_star_spike_prob"] = samples.k_star_spike_prob(0.05);
    s["active"] = active;
    s["spike_probability"] = vec_to_json(spike_p);
    s["mu_mean"] = vec_to_json(mu_mean);
    {
      std::ofstream f(dir / "summary.json");
      f << s.dump(2) << '\n';
    }
    manifest.note_output("summary.json");

    const Eigen::MatrixXd r_mean = samples.R_mean();
    const Eigen::MatrixXd t_mean = samples.Theta_mean();
    LabeledMatrix rm;
    rm.corner = "channel";
    rm.row_labels = data.channel_labels;
    for (const int k : active) rm.col_labels.push_back("Sig" + std::to_string(k + 1));
    rm.values.resize(data.I(), static_cast<int>(active.size()));
    LabeledMatrix tm;
    tm.corner = "factor";
    tm.row_labels = rm.col_labels;
    tm.col_labels = data.sample_labels;
    tm.values.resize(static_cast<int>(active.size()), data.J());
    for (size_t a = 0; a < active.size(); ++a) {
      rm.values.col(a) = r_mean.col(active[a]);
      tm.values.row(a) = t_mean.row(active[a]);
    }
    write_matrix_csv((dir / "R_mean.csv").string(), rm);
    manifest.note_output("R_mean.csv");
    write_matrix_csv((dir / "Theta_mean.csv").string(), tm);
    manifest.note_output("Theta_mean.csv");

    std::vector<std::string> names;
    std::vector<std::vector<double>> cols(cfg.K);
    for (int k = 0; k < cfg.K; ++k) {
      names.push_back("mu_" + std::to_string(k + 1));
      for (const auto& m : samples.mu) cols[k].push_back(m[k]);
    }
    write_trace_csv((dir / "mu_trace.csv").string(), names, cols);
    manifest.note_output("mu_trace.csv");
    write_trace_csv((dir / "logpost_trace.csv").string(), {"log_lik"},
                    {samples.log_lik});
    manifest.note_output("logpost_trace.csv");

    manifest.set_args(resolved);
    manifest.extra()["derived_seeds"] = std::vector<std::uint64_t>{chain_seed};
    manifest.write();
    return;
  }

  ModelConfig cfg;
  cfg.K = informative ? k_new : args.K;
  cfg.epsilon = args.epsilon;
  cfg.a = args.a;
  cfg.alpha = args.alpha;
  if (args.method == "fixed-strength") {
    FixedStrengthHyperprior fs_prior;
    fs_prior.a0 = args.a0 >= 0.0 ? args.a0 : 11.0;
    fs_prior.b0 = args.b0 >= 0.0 ? args.b0 : 0.01;
    cfg.fixed_strength = fs_prior;
    resolved["a0"] = fs_prior.a0;
    resolved["b0"] = fs_prior.b0;
  }

  const Eigen::MatrixXd* reference = nullptr;
  const std::vector<std::string>* reference_labels = nullptr;
  Eigen::MatrixXd ref_storage;
  std::vector<std::string> ref_label_storage;
  if (informative) {
    SignatureFile sig;
    if (args.cosmic_file == "builtin") {
      const ReferenceCatalog& cat = reference_catalog();
      sig.S = cat.S;
      sig.names = cat.names;
      sig.channel_labels = cat.channel_labels;
    } else {
      sig = read_signature_csv(args.cosmic_file);
      manifest.add_input(args.cosmic_file);
    }
    if (sig.S.rows() != data.I())
      throw DataFormatError("fit: catalog channel count does not match the data");
    // Align catalog rows to the data's channel order when labels agree.
    if (sig.channel_labels != data.channel_labels) {
      std::vector<int> where(data.I(), -1);
      bool all = true;
      for (int i = 0; i < data.I(); ++i) {
        const auto it = std::find(sig.channel_labels.begin(), sig.channel_labels.end(),
                                  data.channel_labels[i]);
        if (it == sig.channel_labels.end()) {
          all = false;
          break;
        }
        where[i] = static_cast<int>(it - sig.channel_labels.begin());
      }
      if (all) {
        Eigen::MatrixXd reordered(sig.S.rows(), sig.S.cols());
        for (int i = 0; i < data.I(); ++i) reordered.row(i) = sig.S.row(where[i]);
        sig.S = reordered;
        sig.channel_labels = data.channel_labels;
      }
    }

    InformativePriorConfig inf;
    inf.S = sig.S;
    inf.labels = sig.names;
    inf.b = args.b;
    inf.beta.resize(sig.S.cols());
    const std::vector<double> grid = default_beta_grid();
    Rng elicit_rng(splitmix64(args.seed + 0x5eedULL));
    json elicited = json::array();
    for (int k = 0; k < sig.S.cols(); ++k) {
      const ElicitResult res =
          elicit_beta(sig.S.col(k), args.beta_target, args.beta_draws, grid, elicit_rng);
      inf.beta[k] = res.beta;
      json e;
      e["label"] = sig.names[k];
      e["beta"] = res.beta;
      e["median_cos"] = res.median_cos;
      if (res.degenerate) e["degenerate"] = true;
      elicited.push_back(e);
    }
    cfg.informative = inf;
    manifest.extra()["elicited_beta"] = elicited;

    ref_storage = sig.S;
    ref_label_storage = sig.names;
    reference = &ref_storage;
    reference_labels = &ref_label_storage;
  }

  const InferenceResult result = run_inference(data, cfg, scfg);
  const FitSummary summary =
      summarize_fit(result.selected, cfg, args.threshold_c, reference, reference_labels);

  write_fit_outputs(manifest, summary, data, args.method);

  const fs::path dir = manifest.dir();
  {
    const int Ktot = cfg.total_factors();
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols(Ktot);
    for (int k = 0; k < Ktot; ++k) {
      names.push_back(summary.factor_labels[k]);
      for (const auto& m : result.selected.mu) cols[k].push_back(m[k]);
    }
    write_trace_csv((dir / "mu_trace.csv").string(), names, cols);
    manifest.note_output("mu_trace.csv");
  }
  write_trace_csv((dir / "logpost_trace.csv").string(), {"log_posterior"},
                  {result.selected.log_post});
  manifest.note_output("logpost_trace.csv");
  if (!args.no_draws) {
    write_draws_bin((dir / "draws.bin").string(), result.selected);
    manifest.note_output("draws.bin");
  }

  manifest.set_args(resolved);
  manifest.extra()["derived_seeds"] = result.chain_seeds;
  json lp = json::array();
  for (const double v : result.chain_mean_log_post) {
    if (std::isfinite(v))
      lp.push_back(v);
    else
      lp.push_back(nullptr);
  }
  manifest.extra()["per_chain_mean_log_post"] = lp;
  manifest.extra()["selected_chain"] = result.selected_chain;
  json errs = json::array();
  for (const auto& e : result.chain_errors) errs.push_back(e);
  manifest.extra()["chain_errors"] = errs;
  manifest.write();
}

// ---------------------------------------------------------------------------
// compare

struct CompareArgs {
  std::string fit_dir;
  std::string truth_dir;
  double cutoff = 0.9;
  std::string cutoff_grid;
  std::string out;
};

json compare_args_to_json(const CompareArgs& a) {
  json j;
  j["fit_dir"] = a.fit_dir;
  j["truth_dir"] = a.truth_dir;
  j["cutoff"] = a.cutoff;
  j["cutoff_grid"] = a.cutoff_grid;
  j["out"] = a.out;
  return j;
}

CompareArgs compare_args_from_json(const json& j) {
  CompareArgs a;
  a.fit_dir = j.at("fit_dir");
  a.truth_dir = j.at("truth_dir");
  a.cutoff = j.at("cutoff");
  a.cutoff_grid = j.at("cutoff_grid");
  a.out = j.at("out");
  return a;
}

void run_compare(const CompareArgs& args) {
  ManifestWriter manifest("compare", args.out);
  const fs::path fit = args.fit_dir;
  const fs::path truth = args.truth_dir;

  const auto require = [&](const fs::path& p) {
    if (!fs::exists(p)) throw DataFormatError("compare: missing file " + p.string());
    return p.string();
  };

  json summary;
  {
    std::ifstream f(require(fit / "summary.json"));
    f >> summary;
  }
  manifest.add_input((fit / "summary.json").string());

  const SignatureFile truth_r = read_signature_csv(require(truth / "truth_R.csv"));
  manifest.add_input((truth / "truth_R.csv").string());
  const LabeledMatrix truth_theta = read_matrix_csv(require(truth / "truth_Theta.csv"));
  manifest.add_input((truth / "truth_Theta.csv").string());
  const LabeledMatrix truth_lambda = read_matrix_csv(require(truth / "truth_lambda.csv"));
  manifest.add_input((truth / "truth_lambda.csv").string());
  const CountMatrix counts = read_counts_csv(require(truth / "counts.csv"));
  manifest.add_input((truth / "counts.csv").string());

  const int k_star = summary.at("K_star");
  TruthBundle bundle;
  bundle.R0 = truth_r.S;
  bundle.Theta0 = truth_theta.values;
  bundle.Lambda0 = truth_lambda.values;

  MetricsReport rep;
  rep.cutoff = args.cutoff;
  std::vector<MetricsReport> grid_rows;
  std::vector<double> grid;
  if (!args.cutoff_grid.empty()) grid = parse_double_list(args.cutoff_grid);

  if (k_star == 0) {
    // empty estimate: lambda_hat is identically zero and every truth column
    // pairs with a zero pad
    rep.empty_estimate = true;
    rep.rmse_counts = std::sqrt(counts.counts.cast<double>().squaredNorm() /
                                static_cast<double>(counts.counts.size()));
    rep.rmse_lambda = std::sqrt(bundle.Lambda0.squaredNorm() /
                                static_cast<double>(bundle.Lambda0.size()));
    rep.rmse_R = std::sqrt(bundle.R0.squaredNorm() / static_cast<double>(
                               bundle.R0.rows() * bundle.R0.cols()));
    rep.rmse_Theta = std::sqrt(bundle.Theta0.squaredNorm() / static_cast<double>(
                                   bundle.Theta0.rows() * bundle.Theta0.cols()));
    for (const double c : grid) {
      MetricsReport r;
      r.cutoff = c;
      r.empty_estimate = true;
      grid_rows.push_back(r);
    }
  } else {
    const LabeledMatrix r_mean = read_matrix_csv(require(fit / "R_mean.csv"));
    manifest.add_input((fit / "R_mean.csv").string());
    const LabeledMatrix theta_mean = read_matrix_csv(require(fit / "Theta_mean.csv"));
    manifest.add_input((fit / "Theta_mean.csv").string());

    rep = precision_sensitivity(r_mean.values, bundle.R0, args.cutoff);
    const MetricsReport rr =
        rmse_suite(counts.counts, r_mean.values, theta_mean.values, bundle);
    rep.rmse_counts = rr.rmse_counts;
    rep.rmse_lambda = rr.rmse_lambda;
    rep.rmse_R = rr.rmse_R;
    rep.rmse_Theta = rr.rmse_Theta;
    for (const double c : grid) {
      MetricsReport r = precision_sensitivity(r_mean.values, bundle.R0, c);
      r.rmse_counts = rr.rmse_counts;
      r.rmse_lambda = rr.rmse_lambda;
      r.rmse_R = rr.rmse_R;
      r.rmse_Theta = rr.rmse_Theta;
      grid_rows.push_back(r);
    }
  }

  const fs::path dir = manifest.dir();
  json m;
  m["precision"] = rep.precision;
  m["sensitivity"] = rep.sensitivity;
  m["f1"] = rep.f1;
  m["rmse_counts"] = rep.rmse_counts;
  m["rmse_lambda"] = rep.rmse_lambda;
  m["rmse_R"] = rep.rmse_R;
  m["rmse_Theta"] = rep.rmse_Theta;
  m["cutoff"] = rep.cutoff;
  m["empty_estimate"] = rep.empty_estimate;
  m["K_star"] = k_star;
  {
    std::ofstream f(dir / "metrics.json");
    f << m.dump(2) << '\n';
  }
  manifest.note_output("metrics.json");

  if (!grid_rows.empty()) {
    std::ofstream f(dir / "cutoff_metrics.csv");
    f << "cutoff,precision,sensitivity,f1\n";
    for (const auto& r : grid_rows)
      f << format_double(r.cutoff) << ',' << format_double(r.precision) << ','
        << format_double(r.sensitivity) << ',' << format_double(r.f1) << '\n';
    manifest.note_output("cutoff_metrics.csv");
  }

  manifest.set_args(compare_args_to_json(args));
  manifest.write();
}

// ---------------------------------------------------------------------------
// diagnose

struct DiagnoseArgs {
  std::string fit_dir;
  std::string trace_file;
  std::string out;
};

json diagnose_args_to_json(const DiagnoseArgs& a) {
  json j;
  j["fit_dir"] = a.fit_dir;
  j["trace_file"] = a.trace_file;
  j["out"] = a.out;
  return j;
}

DiagnoseArgs diagnose_args_from_json(const json& j) {
  DiagnoseArgs a;
  a.fit_dir = j.at("fit_dir");
  a.trace_file = j.at("trace_file");
  a.out = j.at("out");
  return a;
}

void run_diagnose(const DiagnoseArgs& args) {
  if (args.fit_dir.empty() == args.trace_file.empty())
    throw UsageError("diagnose: provide exactly one of --fit-dir or --trace-file");
  ManifestWriter manifest("diagnose", args.out);
  const fs::path dir = manifest.dir();
  json out;

  if (!args.trace_file.empty()) {
    const std::vector<double> trace = read_single_trace_csv(args.trace_file);
    manifest.add_input(args.trace_file);
    const EssResult res = effective_sample_size(trace);
    out["trace"] =
        json{{"n", trace.size()}, {"ess", res.ess}, {"degenerate", res.degenerate}};
  } else {
    const std::string draws_path = (fs::path(args.fit_dir) / "draws.bin").string();
    if (!fs::exists(draws_path))
      throw DataFormatError("diagnose: " + draws_path +
                            " not found (was the fit run with --no-draws?)");
    const FitDraws draws = read_draws_bin(draws_path);
    manifest.add_input(draws_path);
    const int n = static_cast<int>(draws.mu.size());
    const int K = static_cast<int>(draws.mu[0].size());
    const int I = static_cast<int>(draws.R[0].rows());
    const int J = static_cast<int>(draws.Theta[0].cols());
    std::vector<double> trace(n);

    double r_sum = 0.0;
    int r_deg = 0;
    for (int i = 0; i < I; ++i)
      for (int k = 0; k < K; ++k) {
        for (int d = 0; d < n; ++d) trace[d] = draws.R[d](i, k);
        const EssResult res = effective_sample_size(trace);
        r_sum += res.ess;
        r_deg += res.degenerate ? 1 : 0;
      }
    double t_sum = 0.0;
    int t_deg = 0;
    for (int k = 0; k < K; ++k)
      for (int j = 0; j < J; ++j) {
        for (int d = 0; d < n; ++d) trace[d] = draws.Theta[d](k, j);
        const EssResult res = effective_sample_size(trace);
        t_sum += res.ess;
        t_deg += res.degenerate ? 1 : 0;
      }
    double m_sum = 0.0;
    int m_deg = 0;
    json mu_rows = json::array();
    for (int k = 0; k < K; ++k) {
      for (int d = 0; d < n; ++d) trace[d] = draws.mu[d][k];
      const EssResult res = effective_sample_size(trace);
      m_sum += res.ess;
      m_deg += res.degenerate ? 1 : 0;
      mu_rows.push_back(json{{"factor", k}, {"ess", res.ess}, {"degenerate", res.degenerate}});
    }
    out["retained_draws"] = n;
    out["blocks"] = json{{"R", r_sum / (I * K)}, {"Theta", t_sum / (K * J)}, {"mu", m_sum / K}};
    out["degenerate_entries"] = json{{"R", r_deg}, {"Theta", t_deg}, {"mu", m_deg}};
    out["mu_per_factor"] = mu_rows;

    std::ofstream f(dir / "ess_mu.csv");
    f << "factor,ess,degenerate\n";
    for (int k = 0; k < K; ++k)
      f << (k + 1) << ',' << format_double(mu_rows[k]["ess"].get<double>()) << ','
        << (mu_rows[k]["degenerate"].get<bool>() ? 1 : 0) << '\n';
    manifest.note_output("ess_mu.csv");
  }

  {
    std::ofstream f(dir / "ess.json");
    f << out.dump(2) << '\n';
  }
  manifest.note_output("ess.json");
  manifest.set_args(diagnose_args_to_json(args));
  manifest.write();
}

// ---------------------------------------------------------------------------
// elbow

struct ElbowArgs {
  double a = 1.0;
  double epsilon = 0.001;
  std::string J_list = "10,100";
  double ybar_max = 10.0;
  int points = 50;
  std::string mode = "compressive";
  double a0 = 11.0;
  double b0 = 0.01;
  std::string out;
};

json elbow_args_to_json(const ElbowArgs& a) {
  json j;
  j["a"] = a.a;
  j["epsilon"] = a.epsilon;
  j["J_list"] = a.J_list;
  j["ybar_max"] = a.ybar_max;
  j["points"] = a.points;
  j["mode"] = a.mode;
  j["a0"] = a.a0;
  j["b0"] = a.b0;
  j["out"] = a.out;
  return j;
}

ElbowArgs elbow_args_from_json(const json& j) {
  ElbowArgs a;
  a.a = j.at("a");
  a.epsilon = j.at("epsilon");
  a.J_list = j.at("J_list");
  a.ybar_max = j.at("ybar_max");
  a.points = j.at("points");
  a.mode = j.at("mode");
  a.a0 = j.at("a0");
  a.b0 = j.at("b0");
  a.out = j.at("out");
  return a;
}

void run_elbow(const ElbowArgs& args) {
  if (args.mode != "compressive" && args.mode != "fixed-strength")
    throw UsageError("elbow: --mode must be compressive or fixed-strength");
  if (args.points < 2) throw UsageError("elbow: --points must be at least 2");
  ManifestWriter manifest("elbow", args.out);

  ModelConfig cfg;
  cfg.a = args.a;
  cfg.epsilon = args.epsilon;
  if (args.mode == "fixed-strength") cfg.fixed_strength = FixedStrengthHyperprior{args.a0, args.b0};

  std::vector<double> grid(args.points);
  for (int i = 0; i < args.points; ++i)
    grid[i] = args.ybar_max * static_cast<double>(i) / (args.points - 1);

  std::ofstream f(manifest.dir() / "elbow.csv");
  f << "J,ybar,mean,q10,q90\n";
  for (const int J : parse_int_list(args.J_list)) {
    const std::vector<ElbowRow> rows = elbow_curve(cfg, J, grid);
    for (const auto& r : rows)
      f << J << ',' << format_double(r.ybar) << ',' << format_double(r.mean) << ','
        << format_double(r.q10) << ',' << format_double(r.q90) << '\n';
  }
  manifest.note_output("elbow.csv");
  manifest.set_args(elbow_args_to_json(args));
  manifest.write();
}

// ---------------------------------------------------------------------------
// rerun

void run_from_manifest(const std::string& manifest_path, const std::string& out_override) {
  json m;
  {
    std::ifstream f(manifest_path);
    if (!f) throw DataFormatError("rerun: cannot open " + manifest_path);
    f >> m;
  }
  const std::string command = m.at("command");
  json args = m.at("args");
  if (!out_override.empty()) args["out"] = out_override;
  if (command == "simulate")
    run_simulate(simulate_args_from_json(args));
  else if (command == "fit")
    run_fit(fit_args_from_json(args));
  else if (command == "compare")
    run_compare(compare_args_from_json(args));
  else if (command == "diagnose")
    run_diagnose(diagnose_args_from_json(args));
  else if (command == "elbow")
    run_elbow(elbow_args_from_json(args));
  else
    throw DataFormatError("rerun: unknown command '" + command + "' in manifest");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compressive Bayesian Poisson NMF toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  SimulateArgs sim;
  CLI::App* c_sim = app.add_subcommand("simulate", "Generate a synthetic dataset");
  c_sim->add_option("--out", sim.out, "Output directory")->required();
  c_sim->add_option("--seed", sim.seed, "Master seed");
  c_sim->add_option("--tau", sim.tau, "Overdispersion (0 = Poisson)");
  c_sim->add_option("--J", sim.J, "Number of samples");
  c_sim->add_option("--K-new", sim.K_new, "Number of random de-novo signatures");
  c_sim->add_option("--regime", sim.regime, "sbs (96 channels) or indel (83)");
  c_sim->add_option("--cosmic-file", sim.cosmic_file,
                    "Catalog CSV for the fixed signatures ('builtin' or 'none')");
  c_sim->add_option("--pre-cols", sim.pre_cols,
                    "How many catalog columns to include (default 4 for sbs)");
  c_sim->add_option("--dirichlet-new", sim.dirichlet_new, "De-novo Dirichlet concentration");
  c_sim->add_option("--w-shape", sim.w_shape, "Per-factor loading scale shape");
  c_sim->add_option("--w-rate", sim.w_rate, "Per-factor loading scale rate");
  c_sim->add_option("--xi-shape", sim.xi_shape, "Per-sample loading shape");
  c_sim->add_option("--xi-rate", sim.xi_rate, "Per-sample loading rate");

  FitArgs fit;
  CLI::App* c_fit = app.add_subcommand("fit", "Run posterior inference on a counts CSV");
  c_fit->add_option("--input", fit.input, "counts.csv")->required();
  c_fit->add_option("--out", fit.out, "Output directory")->required();
  c_fit->add_option("--K", fit.K, "Maximum number of factors");
  c_fit->add_option("--epsilon", fit.epsilon, "Compressive hyperprior mean");
  c_fit->add_option("--a", fit.a, "Loading gamma shape / inclusion threshold");
  c_fit->add_option("--alpha", fit.alpha, "Signature Dirichlet concentration");
  c_fit->add_option("--iters", fit.iters, "Total iterations");
  c_fit->add_option("--burnin", fit.burnin, "Burn-in iterations (default 5/6 of iters)");
  c_fit->add_option("--chains", fit.chains, "Independent chains (best kept)");
  c_fit->add_option("--thin", fit.thin, "Thinning stride");
  c_fit->add_option("--seed", fit.seed, "Master seed");
  c_fit->add_option("--threshold-c", fit.threshold_c, "Rank threshold C (active if mu > C eps)");
  c_fit->add_option("--method", fit.method, "compressive | fixed-strength | cusp");
  c_fit->add_option("--a0", fit.a0, "Fixed-strength/cusp slab shape");
  c_fit->add_option("--b0", fit.b0, "Fixed-strength/cusp slab rate");
  c_fit->add_option("--cosmic-file", fit.cosmic_file,
                    "Catalog CSV enabling the informative prior ('builtin' for bundled)");
  c_fit->add_option("--k-new", fit.k_new, "De-novo factors alongside the catalog");
  c_fit->add_option("--b", fit.b, "Catalog loading gamma shape");
  c_fit->add_option("--beta-target", fit.beta_target, "Elicitation target median cosine");
  c_fit->add_option("--beta-draws", fit.beta_draws, "Elicitation draws per grid point");
  c_fit->add_flag("--no-rematch", fit.no_rematch, "Disable the burn-in catalog relabeling");
  c_fit->add_flag("--no-draws", fit.no_draws, "Skip writing draws.bin");
  c_fit->add_option("--mu-inf", fit.mu_inf, "cusp spike location");
  c_fit->add_option("--alpha-pi", fit.alpha_pi, "cusp stick concentration");

  CompareArgs cmp;
  CLI::App* c_cmp = app.add_subcommand("compare", "Score a fit against simulation truth");
  c_cmp->add_option("--fit-dir", cmp.fit_dir, "Directory produced by fit")->required();
  c_cmp->add_option("--truth-dir", cmp.truth_dir, "Directory produced by simulate")->required();
  c_cmp->add_option("--cutoff", cmp.cutoff, "Cosine similarity cutoff");
  c_cmp->add_option("--cutoff-grid", cmp.cutoff_grid, "Comma list of cutoffs for a sweep");
  c_cmp->add_option("--out", cmp.out, "Output directory")->required();

  DiagnoseArgs diag;
  CLI::App* c_diag = app.add_subcommand("diagnose", "Effective sample size diagnostics");
  c_diag->add_option("--fit-dir", diag.fit_dir, "Directory produced by fit");
  c_diag->add_option("--trace-file", diag.trace_file, "Single-trace CSV");
  c_diag->add_option("--out", diag.out, "Output directory")->required();

  ElbowArgs elbow;
  CLI::App* c_elbow = app.add_subcommand("elbow", "Posterior relevance curve vs average count");
  c_elbow->add_option("--a", elbow.a, "Loading gamma shape");
  c_elbow->add_option("--epsilon", elbow.epsilon, "Hyperprior mean");
  c_elbow->add_option("--J-list", elbow.J_list, "Comma list of sample counts");
  c_elbow->add_option("--ybar-max", elbow.ybar_max, "Largest average count");
  c_elbow->add_option("--points", elbow.points, "Grid points per curve");
  c_elbow->add_option("--mode", elbow.mode, "compressive | fixed-strength");
  c_elbow->add_option("--a0", elbow.a0, "Fixed-strength shape");
  c_elbow->add_option("--b0", elbow.b0, "Fixed-strength scale");
  c_elbow->add_option("--out", elbow.out, "Output directory")->required();

  std::string rerun_manifest, rerun_out;
  CLI::App* c_rerun = app.add_subcommand("rerun", "Re-execute a run from its manifest");
  c_rerun->add_option("manifest", rerun_manifest, "Path to manifest.json")->required();
  c_rerun->add_option("--out", rerun_out, "Override the output directory");

  try {
    app.parse(argc, argv);
    if (*c_sim)
      run_simulate(sim);
    else if (*c_fit)
      run_fit(fit);
    else if (*c_cmp)
      run_compare(cmp);
    else if (*c_diag)
      run_diagnose(diag);
    else if (*c_elbow)
      run_elbow(elbow);
    else if (*c_rerun)
      run_from_manifest(rerun_manifest, rerun_out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DataFormatError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 3;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
