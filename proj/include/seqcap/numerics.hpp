#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace seqcap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Numeric tolerances used across the library. One global instance; every
/// threshold in the code refers back to this record.
struct Tolerances {
  double hermiticity = 1e-10;      ///< relative Hermiticity defect accepted by hermitian_eig
  double reconstruction = 1e-9;    ///< eigendecomposition round-trip, relative
  double completeness = 1e-9;      ///< Kraus completeness defect (operator norm)
  double kraus_prune = 1e-12;      ///< Choi eigenvalue cutoff when pruning Kraus sets
  double channel_equality = 1e-9;  ///< Choi operator-norm distance treated as equality
  double kl_condition = 1e-9;      ///< Knill-Laflamme violation threshold
  double unit_eigenvalue = 1e-12;  ///< slack below 1 required of contracting eigenvalues
};

const Tolerances& tol();

/// Library-wide error type. `kind` is a stable machine-readable tag
/// (e.g. "NonHermitian", "DimensionMismatch", "OutOfRange").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending,
/// eigenvector columns orthonormal and ordered to match.
struct HermitianEig {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

/// Decomposes a (numerically) Hermitian matrix. Inputs within the
/// Hermiticity tolerance are symmetrized before decomposition; anything
/// further away raises NonHermitian.
HermitianEig hermitian_eig(const Matrix& m);

/// Largest singular value, computed from the spectrum of M†M.
double operator_norm(const Matrix& m);
double operator_norm(const Eigen::MatrixXd& m);

/// Sum of singular values (full L1 norm; callers halve it where the
/// trace-distance convention requires).
double trace_norm(const Matrix& m);

/// Singular values, descending, via hermitian_eig of M†M.
Eigen::VectorXd singular_values(const Matrix& m);

}  // namespace seqcap
