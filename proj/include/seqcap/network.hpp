#pragma once

#include "seqcap/capacity.hpp"
#include "seqcap/qec.hpp"
#include "seqcap/transfer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seqcap {

/// One node Ξ = D ∘ N ∘ E of the sequence. `corrected` is the error set the
/// decoder is built against; when empty, the full noise Kraus set is tried
/// and the identity is used as fallback (perfect-decode-nothing node).
struct NodeSpec {
  QuantumChannel noise;
  Code code;
  std::vector<Matrix> corrected;
  std::optional<double> epsilon;
};

struct SequenceRow {
  long n = 0;
  double capacity_lower = 0.0;
  double distance_upper = 0.0;
  std::optional<double> mu;
  std::optional<double> r_n;
  bool feasible = false;
};

struct DiamondCheck {
  long n = 0;
  double lower = 0.0;    ///< empirical diamond lower bound for Ξ^n vs id
  double n_epsilon = 0.0;
};

struct SequenceReport {
  double epsilon = 0.0;
  std::string epsilon_source;  ///< "given" | "diamond-interval" | "tail-bound"
  std::optional<double> mu;
  std::vector<SequenceRow> rows;
  std::vector<DiamondCheck> diamond_checks;
};

struct SweepConfig {
  std::string model;           ///< "ad" | "bosonic-ad" | "pure-loss"
  std::vector<double> params;  ///< gamma or eta grid
  long n_max = 0;
  int cutoff = 4;
  int k = 0;                   ///< corrected loss count (pure-loss model)
};

struct SweepRow {
  std::string model;
  double param = 0.0;
  long n = 0;
  double epsilon = 0.0;
  double capacity_lower = 0.0;
  double distance_upper = 0.0;
  std::optional<double> mu;
  std::optional<double> r_n;
  bool feasible = false;
};

/// Assembles the endomorphic logical channel D ∘ N ∘ E, deriving the decoder
/// from the code's recovery so that E ∘ D equals the recovery on the
/// codespace.
QuantumChannel build_node(const NodeSpec& spec);

/// Certified epsilon for a node plus its provenance.
std::pair<double, std::string> node_epsilon(const NodeSpec& spec, const QuantumChannel& node);

/// Per-n capacity/distance/convergence columns for Ξ^n, n = 0..n_max, with
/// empirical diamond checks at sampled n.
SequenceReport analyze_sequence(const NodeSpec& spec, long n_max);

/// Largest n with a positive capacity lower bound.
long entanglement_horizon(double epsilon, int d_b = 2);

/// Closed-form capacity lower bound for the two-mode bosonic
/// amplitude-damping node, epsilon = 49γ².
double bosonic_ad_capacity_bound(double gamma, long n);

std::vector<SweepRow> sweep(const SweepConfig& config);

}  // namespace seqcap
