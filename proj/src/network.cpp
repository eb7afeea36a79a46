#include "seqcap/network.hpp"

#include "seqcap/noise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace seqcap {

namespace {

std::vector<Matrix> effective_corrected(const NodeSpec& spec) {
  if (!spec.corrected.empty()) return spec.corrected;
  // No explicit set: use the full noise Kraus set when the code corrects it
  // exactly, otherwise fall back to the identity (decode-only node).
  const KLReport full = kl_check(spec.code, spec.noise.kraus);
  if (full.satisfied) return spec.noise.kraus;
  return {Matrix::Identity(spec.code.physical_dim, spec.code.physical_dim)};
}

QuantumChannel decoder(const NodeSpec& spec, const std::vector<Matrix>& corrected) {
  const QuantumChannel recovery = build_recovery(spec.code, corrected);
  const QuantumChannel enc = encoder(spec.code);
  const Matrix s = enc.kraus.front();  // physical_dim x logical_dim isometry
  // D = S† ∘ R. Recovery ranges lie in the codespace, so D is trace
  // preserving and E ∘ D = R on the physical space.
  QuantumChannel d;
  d.dim_in = spec.code.physical_dim;
  d.dim_out = spec.code.logical_dim();
  for (const Matrix& k : recovery.kraus) {
    d.kraus.push_back(s.adjoint() * k);
  }
  return d;
}

}  // namespace

QuantumChannel build_node(const NodeSpec& spec) {
  if (spec.noise.dim_in != spec.code.physical_dim || spec.noise.dim_out != spec.code.physical_dim) {
    fail("DimensionMismatch", "noise does not act on the code's physical space");
  }
  const std::vector<Matrix> corrected = effective_corrected(spec);
  const QuantumChannel enc = encoder(spec.code);
  const QuantumChannel dec = decoder(spec, corrected);
  return compose(dec, compose(spec.noise, enc));
}

std::pair<double, std::string> node_epsilon(const NodeSpec& spec, const QuantumChannel& node) {
  if (spec.epsilon) {
    if (*spec.epsilon < 0.0 || *spec.epsilon > 1.0) fail("OutOfRange", "epsilon outside [0,1]");
    return {*spec.epsilon, "given"};
  }
  const bool plain_qubit_noise =
      spec.code.physical_dim == 2 && spec.code.logical_dim() == 2;
  if (plain_qubit_noise) {
    const DiamondInterval interval =
        diamond_distance_interval(node, identity_channel(node.dim_in));
    return {std::min(1.0, interval.upper), "diamond-interval"};
  }
  const std::vector<Matrix> corrected = effective_corrected(spec);
  Matrix sum = Matrix::Zero(spec.code.physical_dim, spec.code.physical_dim);
  for (const Matrix& f : corrected) sum += f.adjoint() * f;
  const double tail =
      operator_norm(Matrix(Matrix::Identity(sum.rows(), sum.cols()) - sum));
  return {std::min(1.0, tail), "tail-bound"};
}

SequenceReport analyze_sequence(const NodeSpec& spec, long n_max) {
  if (n_max < 1) fail("OutOfRange", "n_max must be positive");
  const QuantumChannel node = build_node(spec);
  SequenceReport report;
  const auto [eps, source] = node_epsilon(spec, node);
  report.epsilon = eps;
  report.epsilon_source = source;

  // Spectral columns when the node canonicalizes with contracting lambdas.
  std::optional<double> mu;
  try {
    const CanonicalTransfer ct = canonicalize(transfer_matrix(node));
    mu = spectral_radius_mu(ct);
  } catch (const Error&) {
    mu.reset();
  }
  report.mu = mu;

  for (long n = 0; n <= n_max; ++n) {
    SequenceRow row;
    row.n = n;
    row.capacity_lower = continuity_capacity_bound({eps, n, 2});
    row.distance_upper = sequential_distance_bound(eps, n);
    if (mu && n >= 1) {
      row.mu = mu;
      row.r_n = radius_of_convergence(*mu, static_cast<int>(n));
    }
    row.feasible = row.capacity_lower > 0.0;
    report.rows.push_back(row);
  }

  // Empirical telescoping check at sampled powers of two.
  for (long n = 1; n <= std::min<long>(n_max, 16); n *= 2) {
    const QuantumChannel composed = power(node, static_cast<int>(n));
    const DiamondInterval interval =
        diamond_distance_interval(composed, identity_channel(node.dim_in));
    const double n_eps = static_cast<double>(n) * eps;
    if (interval.lower > n_eps + 1e-9) {
      fail("ComputationError", "diamond lower bound exceeds n*epsilon at n=" + std::to_string(n));
    }
    report.diamond_checks.push_back({n, interval.lower, n_eps});
  }
  return report;
}

long entanglement_horizon(double epsilon, int d_b) {
  if (epsilon <= 0.0 || epsilon > 1.0) fail("OutOfRange", "epsilon outside (0,1]");
  if (d_b < 2) fail("OutOfRange", "d_B must be at least 2");
  auto positive = [&](long n) {
    return continuity_capacity_bound({epsilon, n, d_b}) > 0.0;
  };
  if (!positive(1)) return 0;
  long lo = 1, hi = 2;
  while (positive(hi)) {
    lo = hi;
    if (hi > (1L << 40)) fail("ComputationError", "horizon search diverged");
    hi *= 2;
  }
  // bound positive at lo, nonpositive at hi
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (positive(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double bosonic_ad_capacity_bound(double gamma, long n) {
  if (gamma <= 0.0 || gamma >= 1.0) fail("OutOfRange", "gamma outside (0,1)");
  if (n < 0) fail("OutOfRange", "negative n");
  const double eps = 49.0 * gamma * gamma;
  if (eps > 1.0) fail("OutOfRange", "49*gamma^2 exceeds 1; bound hypothesis void");
  return continuity_capacity_bound({eps, n, 2});
}

std::vector<SweepRow> sweep(const SweepConfig& config) {
  if (config.params.empty() || config.n_max < 1) fail("InvalidGrid", "empty sweep grid");
  std::vector<SweepRow> rows;
  for (double param : config.params) {
    double eps = 0.0;
    std::optional<double> mu;
    if (config.model == "ad") {
      if (param < 0.0 || param > 1.0) fail("OutOfRange", "gamma outside [0,1]");
      const QuantumChannel channel = amplitude_damping(param);
      eps = std::min(1.0, diamond_distance_interval(channel, identity_channel(2)).upper);
      mu = spectral_radius_mu(canonicalize(transfer_matrix(channel)));
    } else if (config.model == "bosonic-ad") {
      if (param <= 0.0 || param >= 1.0) fail("OutOfRange", "gamma outside (0,1)");
      eps = 49.0 * param * param;
      if (eps > 1.0) fail("OutOfRange", "49*gamma^2 exceeds 1");
    } else if (config.model == "pure-loss") {
      eps = pure_loss_exact_tail(param, config.k, config.cutoff);
    } else {
      fail("InvalidGrid", "unknown sweep model '" + config.model + "'");
    }
    for (long n = 1; n <= config.n_max; ++n) {
      SweepRow row;
      row.model = config.model;
      row.param = param;
      row.n = n;
      row.epsilon = eps;
      row.capacity_lower = continuity_capacity_bound({eps, n, 2});
      row.distance_upper = sequential_distance_bound(eps, n);
      if (mu) {
        row.mu = mu;
        row.r_n = radius_of_convergence(*mu, static_cast<int>(n));
      }
      row.feasible = row.capacity_lower > 0.0;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace seqcap
