#pragma once

#include "seqcap/channels.hpp"

#include <optional>
#include <vector>

namespace seqcap {

/// A codespace given by its logical basis vectors in the physical space.
struct Code {
  int physical_dim = 0;
  std::vector<Vector> words;  ///< orthonormal logical basis states

  int logical_dim() const { return static_cast<int>(words.size()); }
};

/// Knill-Laflamme certification: ⟨i_L|F_a†F_b|j_L⟩ = c_ab δ_ij.
struct KLReport {
  bool satisfied = false;
  Matrix c_matrix;
  double max_violation = 0.0;
};

/// Per-m Chernoff data for the pure-loss tail.
struct ChernoffSample {
  int m = 0;
  double exact = 0.0;          ///< binomial tail Σ_{l>k} C(m,l) η^{m−l}(1−η)^l
  double chernoff = 0.0;       ///< e^{−m D((k+1)/m ‖ 1−η)}, loss-count upper tail
  bool valid = false;          ///< regime condition (k+1)/m ≥ 1−η
  double chernoff_paper = 0.0; ///< literal variant e^{−m D((k+1)/m ‖ η)}
  bool paper_valid = false;    ///< nominal lower-tail regime (k+1)/m ≤ η
};

struct TailBoundReport {
  double exact_norm = 0.0;
  int k = 0;
  std::optional<double> chernoff;  ///< max over m of the primary variant
  bool chernoff_valid = false;     ///< every m in range lies in the valid regime
  std::vector<ChernoffSample> per_m;
};

struct ErrorCurveRow {
  double gamma = 0.0;
  double exact_norm = 0.0;     ///< 25x25 tail operator norm
  double p_formula_max = 0.0;  ///< max_p 1−(1−γ)^p (1 + pγ/(1−γ))
  double bound = 0.0;          ///< 49 γ²
};

/// Isometric encoding channel E(σ) = SσS† with S = Σ_i |i_L⟩⟨i_A|.
QuantumChannel encoder(const Code& code);

/// Projector onto the codespace.
Matrix code_projector(const Code& code);

KLReport kl_check(const Code& code, const std::vector<Matrix>& errors);

/// Standard recovery for a KL-satisfying error set: diagonalize the
/// c-matrix, take per-error polar isometries back to the codespace, and
/// complete trace preservation by resetting the unaddressed subspace to
/// |0_L⟩. Throws KLViolated when kl_check fails.
QuantumChannel build_recovery(const Code& code, const std::vector<Matrix>& errors);

/// ‖Σ_{i≥k} M_i†M_i‖ over the Kraus operators not corrected (0-based:
/// the first k are corrected). Zero when k equals the list length.
double tail_error_bound(const std::vector<Matrix>& kraus, int k);

/// Max over seeded random code states (200 Haar + 6 axis states) of
/// ½‖R(Φ(ρ)) − ρ‖₁; checked against the tail bound I − Σ F†F over the
/// corrected set, which must be part of a Kraus representation of noise.
double recovery_residual(const Code& code, const QuantumChannel& noise,
                         const std::vector<Matrix>& errors_corrected, unsigned seed = 42);

/// Exact pure-loss tail max_{m>k} Σ_{l>k} C(m,l) η^{m−l}(1−η)^l,
/// cross-checked against the operator norm of the constructed tail matrix.
double pure_loss_exact_tail(double eta, int k, int cutoff);

/// Exact tail plus both Chernoff variants with per-m validity flags.
TailBoundReport chernoff_tail_bound(double eta, int k, int cutoff);

/// Two-mode bosonic code with words (|40⟩+|04⟩)/√2 and |22⟩.
Code cly_code(int cutoff = 4);

/// Per-γ comparison of the exact two-mode amplitude-damping tail norm, the
/// scalar p-loop formula, and the 49γ² envelope.
std::vector<ErrorCurveRow> cly_error_curve(const std::vector<double>& gamma_grid);

}  // namespace seqcap
