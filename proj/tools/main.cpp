// seqcap command-line tool: channel validation, spectral analysis, capacity
// and error-bound tables, parameter sweeps, and the built-in demo recipe.

#include "seqcap/capacity.hpp"
#include "seqcap/io.hpp"
#include "seqcap/network.hpp"
#include "seqcap/noise.hpp"
#include "seqcap/qec.hpp"
#include "seqcap/transfer.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace seqcap;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDomain = 3;
constexpr int kExitDemo = 4;

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail("ParseError", "cannot open output file " + out_path);
  out << text;
}

std::string opt_float(const std::optional<double>& v) {
  return v ? format_float(*v) : std::string();
}

QuantumChannel model_channel(const std::string& name, double gamma, double eta, int cutoff) {
  if (name == "ad") return amplitude_damping(gamma);
  if (name == "bosonic-ad") return bosonic_ad_kraus(gamma, FockTruncation{cutoff});
  if (name == "pure-loss") return pure_loss_kraus(eta, FockTruncation{cutoff});
  fail("OutOfRange", "unknown model '" + name + "' (ad, bosonic-ad, pure-loss)");
}

int run_validate(const std::string& file) {
  const QuantumChannel c = load_channel(file);
  const ValidationReport report = validate_channel(c);
  std::cout << "defect " << format_float(report.defect) << "\n"
            << (report.pass ? "pass" : "fail") << "\n";
  return report.pass ? kExitOk : kExitValidation;
}

int run_model(const std::string& name, double gamma, double eta, int cutoff,
              const std::string& out_path) {
  const QuantumChannel c = model_channel(name, gamma, eta, cutoff);
  write_output(out_path, channel_to_json(c).dump(2) + "\n");
  return kExitOk;
}

int run_spectral(const std::string& file, int n_max, const std::string& out_path) {
  const QuantumChannel c = load_channel(file);
  const SpectralReport report = spectral_report(c, n_max);
  json j;
  j["schema"] = 1;
  j["t"] = {report.t(0), report.t(1), report.t(2)};
  j["lambda"] = {report.lambda(0), report.lambda(1), report.lambda(2)};
  j["mu"] = report.mu;
  json trace = json::array();
  for (const GelfandSample& s : report.gelfand_trace) {
    json row;
    row["n"] = s.n;
    row["delta_norm"] = s.delta_norm;
    row["gelfand"] = s.gelfand;
    row["R_n"] = radius_of_convergence(report.mu, s.n);
    trace.push_back(std::move(row));
  }
  j["trace"] = std::move(trace);
  write_output(out_path, j.dump(2) + "\n");
  return kExitOk;
}

int run_capacity(double epsilon, long n_max, int d_b, bool find_horizon,
                 const std::string& out_path) {
  if (find_horizon) {
    write_output(out_path, std::to_string(entanglement_horizon(epsilon, d_b)) + "\n");
    return kExitOk;
  }
  std::ostringstream csv;
  csv << "n,capacity_lower,distance_upper\n";
  for (long n = 0; n <= n_max; ++n) {
    csv << n << ',' << format_float(continuity_capacity_bound({epsilon, n, d_b})) << ','
        << format_float(sequential_distance_bound(epsilon, n)) << '\n';
  }
  write_output(out_path, csv.str());
  return kExitOk;
}

int run_errbound(const std::string& file, const std::string& model, double gamma, int cutoff,
                 int k, bool cly, const std::string& out_path) {
  std::ostringstream csv;
  if (cly) {
    csv << "gamma,exact_norm,p_formula_max,bound_49g2\n";
    for (const ErrorCurveRow& row : cly_error_curve({gamma})) {
      csv << format_float(row.gamma) << ',' << format_float(row.exact_norm) << ','
          << format_float(row.p_formula_max) << ',' << format_float(row.bound) << '\n';
    }
    write_output(out_path, csv.str());
    return kExitOk;
  }
  QuantumChannel c;
  if (!file.empty()) {
    c = load_channel(file);
  } else if (!model.empty()) {
    c = model_channel(model, gamma, 0.0, cutoff);
  } else {
    fail("OutOfRange", "errbound needs a channel file or --model");
  }
  csv << "k,exact_tail\n";
  csv << k << ',' << format_float(tail_error_bound(c.kraus, k)) << '\n';
  write_output(out_path, csv.str());
  return kExitOk;
}

int run_pureloss(double eta, int cutoff, int k, const std::string& out_path) {
  const TailBoundReport report = chernoff_tail_bound(eta, k, cutoff);
  std::ostringstream csv;
  csv << "m,exact,chernoff,valid,chernoff_paper,paper_valid\n";
  for (const ChernoffSample& s : report.per_m) {
    csv << s.m << ',' << format_float(s.exact) << ',' << format_float(s.chernoff) << ','
        << (s.valid ? 1 : 0) << ',' << format_float(s.chernoff_paper) << ','
        << (s.paper_valid ? 1 : 0) << '\n';
  }
  csv << "max," << format_float(report.exact_norm) << ','
      << (report.chernoff ? format_float(*report.chernoff) : std::string()) << ','
      << (report.chernoff_valid ? 1 : 0) << ",,\n";
  write_output(out_path, csv.str());
  return kExitOk;
}

NodeSpec make_node_spec(const std::string& model, const std::string& code_name, double gamma,
                        int cutoff, std::optional<double> epsilon) {
  NodeSpec spec;
  if (code_name == "trivial") {
    if (model != "ad") fail("OutOfRange", "trivial code pairs with the ad model");
    spec.noise = amplitude_damping(gamma);
    spec.code.physical_dim = 2;
    Vector w0 = Vector::Zero(2), w1 = Vector::Zero(2);
    w0(0) = 1.0;
    w1(1) = 1.0;
    spec.code.words = {w0, w1};
  } else if (code_name == "cly") {
    if (model != "bosonic-ad") fail("OutOfRange", "cly code pairs with the bosonic-ad model");
    const QuantumChannel mode = bosonic_ad_kraus(gamma, FockTruncation{cutoff});
    spec.noise = tensor(mode, mode);
    spec.code = cly_code(cutoff);
    const int d = cutoff + 1;
    spec.corrected = {spec.noise.kraus[0], spec.noise.kraus[1],
                      spec.noise.kraus[static_cast<std::size_t>(d)]};
  } else {
    fail("OutOfRange", "unknown code '" + code_name + "' (trivial, cly)");
  }
  spec.epsilon = epsilon;
  return spec;
}

std::string sequence_csv(const std::string& model, double param, const SequenceReport& report) {
  std::ostringstream csv;
  csv << "model,param,n,epsilon,capacity_lower,distance_upper,mu,R_n,feasible\n";
  for (const SequenceRow& row : report.rows) {
    csv << model << ',' << format_float(param) << ',' << row.n << ','
        << format_float(report.epsilon) << ',' << format_float(row.capacity_lower) << ','
        << format_float(row.distance_upper) << ',' << opt_float(row.mu) << ','
        << opt_float(row.r_n) << ',' << (row.feasible ? 1 : 0) << '\n';
  }
  return csv.str();
}

int run_node(const std::string& model, const std::string& code_name, double gamma, int cutoff,
             std::optional<double> epsilon, long n_max, const std::string& out_path) {
  const NodeSpec spec = make_node_spec(model, code_name, gamma, cutoff, epsilon);
  const SequenceReport report = analyze_sequence(spec, n_max);
  write_output(out_path, sequence_csv(model, gamma, report));
  return kExitOk;
}

int run_sweep(const SweepConfig& config, const std::string& out_path) {
  std::ostringstream csv;
  csv << "model,param,n,epsilon,capacity_lower,distance_upper,mu,R_n,feasible\n";
  for (const SweepRow& row : sweep(config)) {
    csv << row.model << ',' << format_float(row.param) << ',' << row.n << ','
        << format_float(row.epsilon) << ',' << format_float(row.capacity_lower) << ','
        << format_float(row.distance_upper) << ',' << opt_float(row.mu) << ','
        << opt_float(row.r_n) << ',' << (row.feasible ? 1 : 0) << '\n';
  }
  write_output(out_path, csv.str());
  return kExitOk;
}

int run_paper_demo(double gamma, unsigned seed) {
  int failures = 0;
  auto check = [&failures](const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "  " << detail << "\n";
    if (!ok) ++failures;
  };

  // Amplitude damping spectral numbers.
  {
    const double g = 0.36;
    const TransferMatrix t = transfer_matrix(amplitude_damping(g));
    const CanonicalTransfer ct = canonicalize(t);
    const double mu = spectral_radius_mu(ct);
    check("ad-spectral-radius", std::abs(mu - std::sqrt(1.0 - g)) < 1e-12,
          "mu=" + format_float(mu));
  }
  // Capacity number at epsilon=0.0005, n=44.
  {
    const double q = continuity_capacity_bound({0.0005, 44, 2});
    check("capacity-n44", q >= 0.8023 && q <= 0.8033, "Q1>=" + format_float(q));
  }
  // Horizon pair.
  {
    const long horizon = preservation_horizon(0.0005, 0.011);
    const double r = radius_of_convergence(1.0 - 0.0005, 44);
    check("horizon-44", horizon == 44 && r >= 0.989,
          "n=" + std::to_string(horizon) + " R_44=" + format_float(r));
  }
  // CLY code certification and error curve at the requested gamma.
  {
    bool ok = true;
    std::string detail;
    try {
      const FockTruncation trunc{4};
      const QuantumChannel mode = bosonic_ad_kraus(gamma, trunc);
      const QuantumChannel two_mode = tensor(mode, mode);
      const std::vector<Matrix> corrected = {two_mode.kraus[0], two_mode.kraus[1],
                                             two_mode.kraus[5]};
      const KLReport kl = kl_check(cly_code(4), corrected);
      ok = kl.satisfied;
      detail = "kl_violation=" + format_float(kl.max_violation);
      const std::vector<ErrorCurveRow> curve = cly_error_curve({gamma});
      detail += " exact=" + format_float(curve.front().exact_norm) +
                " bound=" + format_float(curve.front().bound);
      ok = ok && curve.front().exact_norm <= curve.front().bound + 1e-12;
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    check("cly-error-chain", ok, detail);
  }
  // Recovery residual against the tail bound (seeded states).
  {
    bool ok = true;
    std::string detail;
    try {
      const FockTruncation trunc{4};
      const QuantumChannel mode = bosonic_ad_kraus(gamma, trunc);
      const QuantumChannel two_mode = tensor(mode, mode);
      const std::vector<Matrix> corrected = {two_mode.kraus[0], two_mode.kraus[1],
                                             two_mode.kraus[5]};
      const double residual = recovery_residual(cly_code(4), two_mode, corrected, seed);
      const double bound = 49.0 * gamma * gamma;
      ok = residual <= bound + 1e-9;
      detail = "residual=" + format_float(residual) + " bound=" + format_float(bound);
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    check("recovery-residual", ok, detail);
  }
  // Closed-form capacity identity.
  {
    bool ok = true;
    double worst = 0.0;
    for (long n : {1L, 5L, 10L, 50L}) {
      const double lhs = bosonic_ad_capacity_bound(gamma, n);
      const double rhs = continuity_capacity_bound({49.0 * gamma * gamma, n, 2});
      worst = std::max(worst, std::abs(lhs - rhs));
      ok = ok && std::abs(lhs - rhs) <= 1e-12;
    }
    check("final-capacity-identity", ok, "max_diff=" + format_float(worst));
  }

  return failures == 0 ? kExitOk : kExitDemo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on information transmission over sequential error-corrected channels"};
  app.require_subcommand(1);

  unsigned seed = 42;
  app.add_option("--seed", seed, "deterministic generator seed");
  // SEQCAP_THREADS caps parallelism (0 = auto); evaluation is serial, which
  // respects any cap.
  if (const char* threads = std::getenv("SEQCAP_THREADS")) (void)threads;

  std::string out_path;
  app.add_option("-o,--output", out_path, "output file (default: stdout)");

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "check a channel file for completeness");
  std::string validate_file;
  cmd_validate->add_option("file", validate_file, "channel JSON file")->required();

  // model
  auto* cmd_model = app.add_subcommand("model", "emit a named noise model as channel JSON");
  std::string model_name = "ad";
  double model_gamma = 0.0, model_eta = 1.0;
  int model_cutoff = 4;
  cmd_model->add_option("--name", model_name, "ad | bosonic-ad | pure-loss")->required();
  cmd_model->add_option("--gamma", model_gamma, "damping probability");
  cmd_model->add_option("--eta", model_eta, "transmission probability");
  cmd_model->add_option("--cutoff", model_cutoff, "Fock cutoff");

  // spectral
  auto* cmd_spectral = app.add_subcommand("spectral", "T-matrix spectral report for a qubit channel");
  std::string spectral_file;
  int spectral_nmax = 100;
  cmd_spectral->add_option("file", spectral_file, "channel JSON file")->required();
  cmd_spectral->add_option("--nmax", spectral_nmax, "Gelfand trace length");

  // capacity
  auto* cmd_capacity = app.add_subcommand("capacity", "sequential capacity lower-bound table");
  double cap_epsilon = 0.0;
  long cap_nmax = 100;
  int cap_db = 2;
  bool cap_horizon = false;
  cmd_capacity->add_option("--epsilon", cap_epsilon, "per-node code quality")->required();
  cmd_capacity->add_option("--nmax", cap_nmax, "largest n");
  cmd_capacity->add_option("--db", cap_db, "output dimension d_B");
  cmd_capacity->add_flag("--find-horizon", cap_horizon, "print the largest n with positive bound");

  // errbound
  auto* cmd_errbound = app.add_subcommand("errbound", "Kraus tail error bound");
  std::string err_file, err_model;
  double err_gamma = 0.0;
  int err_cutoff = 4, err_k = 0;
  bool err_cly = false;
  cmd_errbound->add_option("file", err_file, "channel JSON file");
  cmd_errbound->add_option("--model", err_model, "ad | bosonic-ad");
  cmd_errbound->add_option("--gamma", err_gamma, "damping probability");
  cmd_errbound->add_option("--cutoff", err_cutoff, "Fock cutoff");
  cmd_errbound->add_option("--k", err_k, "number of corrected Kraus operators");
  cmd_errbound->add_flag("--cly", err_cly, "two-mode CLY error curve at --gamma");

  // pureloss
  auto* cmd_pureloss = app.add_subcommand("pureloss", "pure-loss exact tail and Chernoff bounds");
  double pl_eta = 0.9;
  int pl_cutoff = 4, pl_k = 0;
  cmd_pureloss->add_option("--eta", pl_eta, "transmission probability")->required();
  cmd_pureloss->add_option("--cutoff", pl_cutoff, "Fock cutoff");
  cmd_pureloss->add_option("--k", pl_k, "corrected loss count");

  // node
  auto* cmd_node = app.add_subcommand("node", "analyze a D∘N∘E node sequence");
  std::string node_model = "ad", node_code = "trivial";
  double node_gamma = 0.1;
  int node_cutoff = 4;
  long node_nmax = 50;
  double node_epsilon = -1.0;
  cmd_node->add_option("--model", node_model, "ad | bosonic-ad");
  cmd_node->add_option("--code", node_code, "trivial | cly");
  cmd_node->add_option("--gamma", node_gamma, "damping probability");
  cmd_node->add_option("--cutoff", node_cutoff, "Fock cutoff");
  cmd_node->add_option("--nmax", node_nmax, "largest n");
  cmd_node->add_option("--epsilon", node_epsilon, "override the certified epsilon");

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "grid sweep over (param, n)");
  SweepConfig sweep_config;
  cmd_sweep->add_option("--model", sweep_config.model, "ad | bosonic-ad | pure-loss")->required();
  cmd_sweep->add_option("--params", sweep_config.params, "parameter grid values")
      ->required()
      ->delimiter(',');
  cmd_sweep->add_option("--nmax", sweep_config.n_max, "largest n")->required();
  cmd_sweep->add_option("--cutoff", sweep_config.cutoff, "Fock cutoff");
  cmd_sweep->add_option("--k", sweep_config.k, "corrected loss count (pure-loss)");

  // paper-demo
  auto* cmd_demo = app.add_subcommand("paper-demo", "run the built-in end-to-end recipe");
  double demo_gamma = 0.01;
  cmd_demo->add_option("--gamma", demo_gamma, "damping probability for the bosonic chain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*cmd_validate) return run_validate(validate_file);
    if (*cmd_model) return run_model(model_name, model_gamma, model_eta, model_cutoff, out_path);
    if (*cmd_spectral) return run_spectral(spectral_file, spectral_nmax, out_path);
    if (*cmd_capacity) return run_capacity(cap_epsilon, cap_nmax, cap_db, cap_horizon, out_path);
    if (*cmd_errbound) {
      return run_errbound(err_file, err_model, err_gamma, err_cutoff, err_k, err_cly, out_path);
    }
    if (*cmd_pureloss) return run_pureloss(pl_eta, pl_cutoff, pl_k, out_path);
    if (*cmd_node) {
      std::optional<double> eps;
      if (node_epsilon >= 0.0) eps = node_epsilon;
      return run_node(node_model, node_code, node_gamma, node_cutoff, eps, node_nmax, out_path);
    }
    if (*cmd_sweep) return run_sweep(sweep_config, out_path);
    if (*cmd_demo) return run_paper_demo(demo_gamma, seed);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == "ParseError" ? kExitParse : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitParse;
}
