#include "seqcap/transfer.hpp"

#include <array>
#include <cmath>
#include <string>

namespace seqcap {

namespace {

std::array<Matrix, 4> pauli_basis() {
  Matrix id = Matrix::Identity(2, 2);
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  return {id, x, y, z};
}

bool fits_canonical_pattern(const Eigen::Matrix4d& t, double tolerance) {
  double off = 0.0;
  off = std::max(off, std::abs(t(0, 0) - 1.0));
  for (int j = 1; j < 4; ++j) off = std::max(off, std::abs(t(0, j)));
  for (int i = 1; i < 4; ++i) {
    for (int j = 1; j < 4; ++j) {
      if (i != j) off = std::max(off, std::abs(t(i, j)));
    }
  }
  return off <= tolerance;
}

}  // namespace

TransferMatrix transfer_matrix(const QuantumChannel& c) {
  if (c.dim_in != 2 || c.dim_out != 2) fail("NotQubit", "transfer matrix requires a qubit channel");
  const auto paulis = pauli_basis();
  TransferMatrix t;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      const Matrix image = apply_matrix(c, paulis[static_cast<std::size_t>(n)]);
      const Complex val = 0.5 * (paulis[static_cast<std::size_t>(m)].adjoint() * image).trace();
      t.m(m, n) = val.real();
    }
  }
  return t;
}

CanonicalTransfer canonicalize(const TransferMatrix& T) {
  const Eigen::Matrix4d& t4 = T.m;
  if (std::abs(t4(0, 0) - 1.0) > 1e-10 || t4.row(0).tail<3>().cwiseAbs().maxCoeff() > 1e-10) {
    fail("NotCanonicalizable", "first row is not (1,0,0,0)");
  }
  const Eigen::Matrix3d bloch = t4.block<3, 3>(1, 1);
  const Eigen::Vector3d shift = t4.block<3, 1>(1, 0);

  CanonicalTransfer ct;
  const bool diagonal = (bloch - Eigen::Matrix3d(bloch.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-14;
  const Eigen::Vector3d diag = bloch.diagonal();
  const bool sorted_nonneg =
      diagonal && diag(0) >= diag(1) && diag(1) >= diag(2) && diag(2) >= 0.0;
  if (sorted_nonneg) {
    // Already canonical; keep the identity conjugators (closest to identity).
    ct.t = shift;
    ct.lambda = diag;
    return ct;
  }

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(bloch, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d u = svd.matrixU();
  Eigen::Matrix3d v = svd.matrixV();
  Eigen::Vector3d sv = svd.singularValues();
  // Restrict to special-orthogonal factors, folding signs into the smallest
  // singular value.
  if (u.determinant() < 0.0) {
    u.col(2) *= -1.0;
    sv(2) *= -1.0;
  }
  if (v.determinant() < 0.0) {
    v.col(2) *= -1.0;
    sv(2) *= -1.0;
  }
  ct.left.block<3, 3>(1, 1) = u;
  ct.right.block<3, 3>(1, 1) = v;
  ct.lambda = sv;
  ct.t = u.transpose() * shift;

  const Eigen::Matrix4d canon = ct.left.transpose() * t4 * ct.right;
  if (!fits_canonical_pattern(canon, 1e-9)) {
    fail("NotCanonicalizable", "residual off-pattern mass above tolerance");
  }
  return ct;
}

Eigen::Matrix4d canonical_matrix(const CanonicalTransfer& ct) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = 1.0;
  for (int i = 0; i < 3; ++i) {
    m(i + 1, 0) = ct.t(i);
    m(i + 1, i + 1) = ct.lambda(i);
  }
  return m;
}

TransferMatrix limit_transfer(const CanonicalTransfer& ct) {
  for (int i = 0; i < 3; ++i) {
    if (ct.lambda(i) >= 1.0 - tol().unit_eigenvalue) {
      fail("UnitEigenvalue", "lambda_" + std::to_string(i + 1) + " = " + std::to_string(ct.lambda(i)));
    }
    if (ct.t(i) >= 1.0) {
      fail("OutOfRange", "t_" + std::to_string(i + 1) + " must be below 1");
    }
  }
  TransferMatrix lim;
  lim.m.setZero();
  lim.m(0, 0) = 1.0;
  for (int i = 0; i < 3; ++i) {
    lim.m(i + 1, 0) = ct.t(i) / (1.0 - ct.lambda(i));
  }
  return lim;
}

TransferMatrix limit_transfer_of(const TransferMatrix& T) {
  const Eigen::Matrix3d bloch = T.m.block<3, 3>(1, 1);
  const Eigen::Vector3d shift = T.m.block<3, 1>(1, 0);
  const Eigen::Matrix3d gap = Eigen::Matrix3d::Identity() - bloch;
  if (std::abs(gap.determinant()) < tol().unit_eigenvalue) {
    fail("UnitEigenvalue", "Bloch block has a unit eigenvalue; no unique fixed point");
  }
  const Eigen::Vector3d fixed = gap.fullPivLu().solve(shift);
  TransferMatrix lim;
  lim.m.setZero();
  lim.m(0, 0) = 1.0;
  lim.m.block<3, 1>(1, 0) = fixed;
  return lim;
}

double spectral_radius_mu(const CanonicalTransfer& ct) {
  for (int i = 0; i < 3; ++i) {
    if (ct.lambda(i) < 0.0 || ct.lambda(i) >= 1.0) {
      fail("OutOfRange", "lambda_" + std::to_string(i + 1) + " = " + std::to_string(ct.lambda(i)) +
                             " outside [0,1)");
    }
  }
  return std::max(0.0, ct.lambda.maxCoeff());
}

double radius_of_convergence(double mu, int n) {
  if (mu < 0.0 || mu > 1.0) fail("OutOfRange", "mu must lie in [0,1]");
  if (n < 1) fail("OutOfRange", "n must be positive");
  return std::pow(0.5 * (1.0 + mu), n);
}

long preservation_horizon(double epsilon, double delta) {
  if (epsilon <= 0.0 || epsilon > 1.0) fail("OutOfRange", "epsilon must lie in (0,1]");
  if (delta <= 0.0 || delta > 1.0) fail("OutOfRange", "delta must lie in (0,1]");
  return static_cast<long>(std::floor(2.0 * delta / epsilon));
}

std::vector<GelfandSample> delta_norm_trace(const TransferMatrix& T, int n_max) {
  if (n_max < 1) fail("OutOfRange", "n_max must be positive");
  const CanonicalTransfer ct = canonicalize(T);
  for (int i = 0; i < 3; ++i) {
    if (ct.lambda(i) >= 1.0 - tol().unit_eigenvalue) {
      fail("UnitEigenvalue", "delta_norm_trace requires contracting lambdas");
    }
  }
  const TransferMatrix lim = limit_transfer_of(T);
  const Eigen::Matrix4d delta1 = T.m - lim.m;

  std::vector<GelfandSample> out;
  out.reserve(static_cast<std::size_t>(n_max));
  Eigen::Matrix4d tn = T.m;      // T^n
  Eigen::Matrix4d dn = delta1;   // (T − T∞)^n
  for (int n = 1; n <= n_max; ++n) {
    // T∞ is idempotent and absorbing, so T∞^n = T∞.
    const double lhs = operator_norm(Eigen::MatrixXd(tn - lim.m));
    const double rhs = operator_norm(Eigen::MatrixXd(dn));
    if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, lhs)) {
      fail("ComputationError", "‖T^n − T∞‖ disagrees with ‖(T − T∞)^n‖ at n=" + std::to_string(n));
    }
    GelfandSample s;
    s.n = n;
    // Report the product route: the subtraction route bottoms out at the
    // rounding floor of the O(1) matrices once ‖Δn‖ drops below ~1e-16.
    s.delta_norm = rhs;
    s.gelfand = rhs > 0.0 ? std::pow(rhs, 1.0 / n) : 0.0;
    out.push_back(s);
    tn = tn * T.m;
    dn = dn * delta1;
  }
  return out;
}

SpectralReport spectral_report(const QuantumChannel& c, int n_max) {
  const TransferMatrix T = transfer_matrix(c);
  const CanonicalTransfer ct = canonicalize(T);
  SpectralReport report;
  report.t = ct.t;
  report.lambda = ct.lambda;
  report.mu = spectral_radius_mu(ct);
  report.limit = limit_transfer(ct);
  report.gelfand_trace = delta_norm_trace(T, n_max);
  return report;
}

}  // namespace seqcap
