#pragma once

#include "seqcap/numerics.hpp"

#include <vector>

namespace seqcap {

/// Density operator: Hermitian, PSD, unit trace (within tolerances).
struct DensityOperator {
  Matrix matrix;

  int dim() const { return static_cast<int>(matrix.rows()); }

  /// Builds a pure state from an amplitude vector, normalizing when the
  /// norm is within 1e-8 of unity.
  static DensityOperator pure(const Vector& amplitudes);
};

/// Checks the DensityOperator invariants; throws InvalidState on failure.
void validate_density(const DensityOperator& rho);

/// A channel as a finite list of Kraus operators, each dim_out x dim_in.
/// Trace preservation: sum of A†A equals the identity within tolerance.
struct QuantumChannel {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<Matrix> kraus;
};

struct ValidationReport {
  bool pass = false;
  double defect = 0.0;  ///< ‖Σ A†A − I‖ in operator norm
};

QuantumChannel identity_channel(int dim);

/// Completeness check. Throws ShapeMismatch when Kraus shapes disagree
/// with the declared dimensions.
ValidationReport validate_channel(const QuantumChannel& c);

/// Kraus action on an arbitrary matrix (linear extension of apply).
Matrix apply_matrix(const QuantumChannel& c, const Matrix& x);

DensityOperator apply(const QuantumChannel& c, const DensityOperator& rho);

/// outer ∘ inner with the product Kraus set, pruned to a minimal set via
/// the Choi spectrum so that repeated composition stays tractable.
QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner);

/// n-fold self-composition; power(c, 0) is the identity channel.
QuantumChannel power(const QuantumChannel& c, int n);

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);

/// Unnormalized Choi matrix J = Σ_ij |i⟩⟨j| ⊗ c(|i⟩⟨j|), input leg first.
Matrix choi(const QuantumChannel& c);

/// Environment-side channel: (Φᶜ(ρ))_ij = Tr(A_i ρ A_j†). Output dimension
/// equals the Kraus count.
QuantumChannel complementary(const QuantumChannel& c);

/// Minimal Kraus set recovered from the Choi eigendecomposition, dropping
/// eigenvalues below the prune tolerance.
QuantumChannel kraus_prune(const QuantumChannel& c);

/// Reconstructs a channel from an unnormalized Choi matrix.
QuantumChannel channel_from_choi(const Matrix& j, int dim_in, int dim_out);

/// Representation-independent channel distance/equality via Choi matrices.
double choi_distance(const QuantumChannel& a, const QuantumChannel& b);
bool channels_equal(const QuantumChannel& a, const QuantumChannel& b);

}  // namespace seqcap
