#include "seqcap/channels.hpp"

#include <cmath>
#include <string>

namespace seqcap {

DensityOperator DensityOperator::pure(const Vector& amplitudes) {
  if (amplitudes.size() == 0) fail("InvalidState", "empty amplitude vector");
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > 1e-8) {
    fail("InvalidState", "amplitude vector norm " + std::to_string(norm) + " too far from 1");
  }
  const Vector psi = amplitudes / norm;
  DensityOperator rho;
  rho.matrix = psi * psi.adjoint();
  return rho;
}

void validate_density(const DensityOperator& rho) {
  const Matrix& m = rho.matrix;
  if (m.rows() != m.cols() || m.rows() == 0) {
    fail("InvalidState", "density matrix must be square and nonempty");
  }
  if ((m - m.adjoint()).norm() > tol().hermiticity * (1.0 + m.norm())) {
    fail("InvalidState", "density matrix not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > 1e-10 || std::abs(m.trace().imag()) > 1e-10) {
    fail("InvalidState", "density matrix trace != 1");
  }
  const HermitianEig eig = hermitian_eig(m);
  if (eig.eigenvalues.minCoeff() < -1e-10) {
    fail("InvalidState", "density matrix has eigenvalue " +
                             std::to_string(eig.eigenvalues.minCoeff()));
  }
}

QuantumChannel identity_channel(int dim) {
  if (dim < 1) fail("OutOfRange", "identity dimension must be positive");
  QuantumChannel c;
  c.dim_in = dim;
  c.dim_out = dim;
  c.kraus.push_back(Matrix::Identity(dim, dim));
  return c;
}

static void check_shapes(const QuantumChannel& c) {
  if (c.dim_in < 1 || c.dim_out < 1) fail("ShapeMismatch", "nonpositive channel dimension");
  if (c.kraus.empty()) fail("ShapeMismatch", "channel has no Kraus operators");
  for (const Matrix& k : c.kraus) {
    if (k.rows() != c.dim_out || k.cols() != c.dim_in) {
      fail("ShapeMismatch", "Kraus operator is " + std::to_string(k.rows()) + "x" +
                                std::to_string(k.cols()) + ", expected " +
                                std::to_string(c.dim_out) + "x" + std::to_string(c.dim_in));
    }
  }
}

ValidationReport validate_channel(const QuantumChannel& c) {
  check_shapes(c);
  Matrix sum = Matrix::Zero(c.dim_in, c.dim_in);
  for (const Matrix& k : c.kraus) sum += k.adjoint() * k;
  ValidationReport report;
  report.defect = operator_norm(Matrix(sum - Matrix::Identity(c.dim_in, c.dim_in)));
  report.pass = report.defect <= tol().completeness;
  return report;
}

Matrix apply_matrix(const QuantumChannel& c, const Matrix& x) {
  if (x.rows() != c.dim_in || x.cols() != c.dim_in) {
    fail("DimensionMismatch", "input is " + std::to_string(x.rows()) + "x" +
                                  std::to_string(x.cols()) + ", channel input dim " +
                                  std::to_string(c.dim_in));
  }
  Matrix out = Matrix::Zero(c.dim_out, c.dim_out);
  for (const Matrix& k : c.kraus) out += k * x * k.adjoint();
  return out;
}

DensityOperator apply(const QuantumChannel& c, const DensityOperator& rho) {
  DensityOperator out;
  out.matrix = apply_matrix(c, rho.matrix);
  return out;
}

Matrix choi(const QuantumChannel& c) {
  check_shapes(c);
  const int d = c.dim_in * c.dim_out;
  Matrix j = Matrix::Zero(d, d);
  // J = Σ_k |vec(A_k)⟩⟨vec(A_k)| with index (a_in * dim_out + b_out).
  Vector v(d);
  for (const Matrix& k : c.kraus) {
    for (int a = 0; a < c.dim_in; ++a) {
      for (int b = 0; b < c.dim_out; ++b) {
        v(a * c.dim_out + b) = k(b, a);
      }
    }
    j += v * v.adjoint();
  }
  return j;
}

QuantumChannel channel_from_choi(const Matrix& j, int dim_in, int dim_out) {
  if (j.rows() != dim_in * dim_out || j.cols() != j.rows()) {
    fail("ShapeMismatch", "Choi matrix has wrong dimensions");
  }
  const HermitianEig eig = hermitian_eig(j);
  QuantumChannel c;
  c.dim_in = dim_in;
  c.dim_out = dim_out;
  for (Eigen::Index idx = 0; idx < eig.eigenvalues.size(); ++idx) {
    const double w = eig.eigenvalues(idx);
    if (w < tol().kraus_prune) continue;
    const double s = std::sqrt(w);
    Matrix k(dim_out, dim_in);
    for (int a = 0; a < dim_in; ++a) {
      for (int b = 0; b < dim_out; ++b) {
        k(b, a) = s * eig.eigenvectors(a * dim_out + b, idx);
      }
    }
    c.kraus.push_back(std::move(k));
  }
  if (c.kraus.empty()) fail("ComputationError", "Choi matrix has no positive spectrum");
  return c;
}

QuantumChannel kraus_prune(const QuantumChannel& c) {
  return channel_from_choi(choi(c), c.dim_in, c.dim_out);
}

QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner) {
  check_shapes(outer);
  check_shapes(inner);
  if (inner.dim_out != outer.dim_in) {
    fail("DimensionMismatch", "compose: inner output dim " + std::to_string(inner.dim_out) +
                                  " != outer input dim " + std::to_string(outer.dim_in));
  }
  QuantumChannel c;
  c.dim_in = inner.dim_in;
  c.dim_out = outer.dim_out;
  c.kraus.reserve(outer.kraus.size() * inner.kraus.size());
  for (const Matrix& b : outer.kraus) {
    for (const Matrix& a : inner.kraus) {
      c.kraus.push_back(b * a);
    }
  }
  // Product sets grow multiplicatively; prune back to at most dim_in*dim_out.
  if (c.kraus.size() > static_cast<std::size_t>(c.dim_in * c.dim_out)) {
    c = kraus_prune(c);
  }
  return c;
}

QuantumChannel power(const QuantumChannel& c, int n) {
  check_shapes(c);
  if (c.dim_in != c.dim_out) fail("NotEndomorphic", "power requires dim_in == dim_out");
  if (n < 0) fail("OutOfRange", "negative channel power");
  QuantumChannel result = identity_channel(c.dim_in);
  QuantumChannel base = c;
  int e = n;
  while (e > 0) {
    if (e & 1) result = compose(base, result);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
  check_shapes(a);
  check_shapes(b);
  QuantumChannel c;
  c.dim_in = a.dim_in * b.dim_in;
  c.dim_out = a.dim_out * b.dim_out;
  c.kraus.reserve(a.kraus.size() * b.kraus.size());
  for (const Matrix& ka : a.kraus) {
    for (const Matrix& kb : b.kraus) {
      Matrix k(c.dim_out, c.dim_in);
      for (int i = 0; i < a.dim_out; ++i) {
        for (int j = 0; j < a.dim_in; ++j) {
          k.block(i * b.dim_out, j * b.dim_in, b.dim_out, b.dim_in) = ka(i, j) * kb;
        }
      }
      c.kraus.push_back(std::move(k));
    }
  }
  return c;
}

QuantumChannel complementary(const QuantumChannel& c) {
  check_shapes(c);
  const int env = static_cast<int>(c.kraus.size());
  QuantumChannel comp;
  comp.dim_in = c.dim_in;
  comp.dim_out = env;
  // Stinespring V = Σ_i A_i ⊗ |i⟩_E; tracing out B leaves Kraus operators
  // indexed by the B basis: (C_b)_{i,a} = (A_i)_{b,a}.
  for (int b = 0; b < c.dim_out; ++b) {
    Matrix k(env, c.dim_in);
    for (int i = 0; i < env; ++i) {
      k.row(i) = c.kraus[static_cast<std::size_t>(i)].row(b);
    }
    comp.kraus.push_back(std::move(k));
  }
  return comp;
}

double choi_distance(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.dim_in != b.dim_in || a.dim_out != b.dim_out) {
    fail("DimensionMismatch", "choi_distance requires matching dimensions");
  }
  return operator_norm(Matrix(choi(a) - choi(b)));
}

bool channels_equal(const QuantumChannel& a, const QuantumChannel& b) {
  return choi_distance(a, b) <= tol().channel_equality;
}

}  // namespace seqcap
