#pragma once

#include "seqcap/channels.hpp"

#include <vector>

namespace seqcap {

/// 4x4 real T-matrix of a qubit channel in the normalized Pauli basis
/// (order I, X, Y, Z). First row is (1,0,0,0) for trace-preserving maps.
struct TransferMatrix {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
};

/// Canonical form: Bloch block diagonalized by a pair of special-orthogonal
/// conjugators, shift vector t and diagonal (t1,t2,t3; λ1,λ2,λ3) with the
/// λ's descending. left/right are the 4x4 conjugators actually used, i.e.
/// canonical = leftᵀ · T · right.
struct CanonicalTransfer {
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
  Eigen::Vector3d lambda = Eigen::Vector3d::Zero();
  Eigen::Matrix4d left = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d right = Eigen::Matrix4d::Identity();
};

struct GelfandSample {
  int n = 0;
  double delta_norm = 0.0;  ///< ‖T^n − T∞^n‖
  double gelfand = 0.0;     ///< ‖T^n − T∞^n‖^{1/n}
};

struct SpectralReport {
  double mu = 0.0;
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
  Eigen::Vector3d lambda = Eigen::Vector3d::Zero();
  TransferMatrix limit;
  std::vector<GelfandSample> gelfand_trace;
};

/// T-matrix entries t_mn = ½·Tr(P_m · Φ(P_n)). Throws NotQubit unless the
/// channel is 2 -> 2.
TransferMatrix transfer_matrix(const QuantumChannel& c);

/// Brings T to the sparse canonical shape via the real SVD of the Bloch
/// block with determinant-corrected (special-orthogonal) factors. Throws
/// NotCanonicalizable when the conjugated matrix misses the pattern.
CanonicalTransfer canonicalize(const TransferMatrix& T);

/// Reassembles the canonical transfer matrix leftᵀ·T·right from its parts.
Eigen::Matrix4d canonical_matrix(const CanonicalTransfer& ct);

/// Rank-one limit transfer matrix: first column (1, t_i/(1−λ_i)), all other
/// columns zero. Idempotent and absorbing. Requires every λ_i < 1.
TransferMatrix limit_transfer(const CanonicalTransfer& ct);

/// Limit of T^n computed in the original (non-canonical) frame via the
/// Bloch fixed point (I−M)⁻¹ t. Used when powers of the original T are
/// compared against their limit.
TransferMatrix limit_transfer_of(const TransferMatrix& T);

/// μ = max(0, λ1, λ2, λ3); requires every λ_i in [0, 1).
double spectral_radius_mu(const CanonicalTransfer& ct);

/// R_n = ((1+μ)/2)^n.
double radius_of_convergence(double mu, int n);

/// Largest n with R_n ≥ 1−δ under μ ≥ 1−ε, i.e. floor(2δ/ε).
long preservation_horizon(double epsilon, double delta);

/// Per-n ‖Δ_n‖ = ‖T^n − T∞^n‖, cross-checked against ‖(T − T∞)^n‖, plus the
/// Gelfand sequence ‖Δ_n‖^{1/n}.
std::vector<GelfandSample> delta_norm_trace(const TransferMatrix& T, int n_max);

/// Full spectral analysis of a qubit channel (canonical data, μ, limit,
/// Gelfand trace up to n_max).
SpectralReport spectral_report(const QuantumChannel& c, int n_max);

}  // namespace seqcap
