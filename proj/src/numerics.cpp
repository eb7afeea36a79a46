#include "seqcap/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace seqcap {

const Tolerances& tol() {
  static const Tolerances t{};
  return t;
}

HermitianEig hermitian_eig(const Matrix& m) {
  if (m.rows() != m.cols()) {
    fail("NonHermitian", "matrix is not square: " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    fail("ComputationError", "matrix has non-finite entries");
  }
  const double scale = m.norm();
  const double defect = (m - m.adjoint()).norm();
  if (defect > tol().hermiticity * (1.0 + scale)) {
    fail("NonHermitian", "Hermiticity defect " + std::to_string(defect));
  }
  // Symmetrize: composition chains accumulate rounding.
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    fail("NoConvergence", "eigensolver did not converge");
  }
  // Eigen sorts ascending; flip to descending.
  const Eigen::Index n = h.rows();
  HermitianEig out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = Matrix(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

Eigen::VectorXd singular_values(const Matrix& m) {
  const Matrix gram = m.adjoint() * m;
  HermitianEig eig = hermitian_eig(gram);
  Eigen::VectorXd sv = eig.eigenvalues;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    sv(i) = std::sqrt(std::max(0.0, sv(i)));
  }
  return sv;
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::VectorXd sv = singular_values(m);
  const double v = sv(0);
  if (!std::isfinite(v)) fail("ComputationError", "operator norm overflow");
  return v;
}

double operator_norm(const Eigen::MatrixXd& m) {
  return operator_norm(Matrix(m.cast<Complex>()));
}

double trace_norm(const Matrix& m) {
  if (m.rows() != m.cols()) {
    fail("DimensionMismatch", "trace_norm expects a square matrix");
  }
  const double v = singular_values(m).sum();
  if (!std::isfinite(v)) fail("ComputationError", "trace norm overflow");
  return v;
}

}  // namespace seqcap
