#pragma once

#include "seqcap/channels.hpp"

namespace seqcap {

/// Truncated single-mode Fock space: occupation numbers 0..cutoff,
/// dimension cutoff+1. Multi-mode spaces are built with channels::tensor.
struct FockTruncation {
  int cutoff = 4;

  int dim() const { return cutoff + 1; }
};

/// Qubit amplitude damping channel with damping probability gamma.
QuantumChannel amplitude_damping(double gamma);

/// Truncated bosonic amplitude damping: Kraus B_k removes k excitations,
/// B_k|j⟩ = sqrt(C(j,k) (1−γ)^{j−k} γ^k) |j−k⟩, k = 0..cutoff. Exactly
/// trace preserving on the truncated space.
QuantumChannel bosonic_ad_kraus(double gamma, const FockTruncation& trunc);

/// Truncated pure-loss channel with transmissivity eta: A_l removes l
/// excitations with binomial weights, A_l|m⟩ = sqrt(C(m,l) (1−η)^l η^{m−l}) |m−l⟩.
QuantumChannel pure_loss_kraus(double eta, const FockTruncation& trunc);

/// Annihilation operator on the truncated basis, a|m⟩ = √m |m−1⟩.
Matrix annihilation(const FockTruncation& trunc);

/// Binomial coefficient by multiplicative recurrence; exact in double
/// precision for the small occupation numbers used here.
double binomial(int n, int k);

}  // namespace seqcap
