#pragma once

#include "seqcap/channels.hpp"

namespace seqcap {

/// Parameters of the sequential capacity lower bound: per-node code quality
/// epsilon, composition count n, output dimension d_B.
struct CapacityBoundParams {
  double epsilon = 0.0;
  long n = 0;
  int d_b = 2;
};

/// Certified bracket on ½‖Φ−Ψ‖◇.
struct DiamondInterval {
  double lower = 0.0;
  double upper = 0.0;
};

struct Q1Result {
  double value = 0.0;
  DensityOperator argmax;
};

/// Binary entropy, base-2 logs, with 0·log0 = 0.
double binary_entropy(double x);

/// g(ε) = (1+ε)·h(ε/(1+ε)).
double g_func(double eps);

/// log2(d_B)·(1 − 2nε) − g(nε). May be negative; callers clamp for display.
double continuity_capacity_bound(const CapacityBoundParams& p);

/// nε, the telescoping bound on ½‖Ξ^n − id‖◇.
double sequential_distance_bound(double epsilon, long n);

/// −Tr(ρ log2 ρ) over the eigenvalues, small negatives clamped to 0.
double von_neumann_entropy(const DensityOperator& rho);

/// I_c(Φ, ρ) = S(Φ(ρ)) − S(Φᶜ(ρ)).
double coherent_information(const QuantumChannel& c, const DensityOperator& rho);

/// Maximizes coherent information over the Bloch ball: coarse grid
/// (step 0.05 per axis) then Nelder-Mead refinement with radial projection,
/// three seeded random restarts. Deterministic.
Q1Result q1_maximize(const QuantumChannel& c, unsigned seed = 42);

/// lower ≤ ½‖a−b‖◇ ≤ upper. Lower: trace distance of the Choi states
/// (equivalently, the maximally entangled input); upper: half the
/// unnormalized Choi trace-norm distance.
DiamondInterval diamond_distance_interval(const QuantumChannel& a, const QuantumChannel& b);

}  // namespace seqcap
