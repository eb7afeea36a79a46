#pragma once

#include "seqcap/channels.hpp"

#include <random>

namespace seqcap::testing {

/// Haar-ish random channel: stack Gaussian blocks, orthonormalize the
/// stacked matrix into an isometry, slice it back into Kraus operators.
inline QuantumChannel random_channel(std::mt19937_64& rng, int dim, int n_kraus) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix stacked(dim * n_kraus, dim);
  for (Eigen::Index r = 0; r < stacked.rows(); ++r) {
    for (Eigen::Index c = 0; c < stacked.cols(); ++c) {
      stacked(r, c) = Complex(gauss(rng), gauss(rng));
    }
  }
  const Eigen::HouseholderQR<Matrix> qr(stacked);
  const Matrix q = Matrix(qr.householderQ()).leftCols(dim);
  QuantumChannel c;
  c.dim_in = dim;
  c.dim_out = dim;
  for (int k = 0; k < n_kraus; ++k) {
    c.kraus.push_back(q.block(k * dim, 0, dim, dim));
  }
  return c;
}

inline DensityOperator random_pure_state(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v /= v.norm();
  return DensityOperator::pure(v);
}

inline DensityOperator random_mixed_state(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  DensityOperator out;
  out.matrix = rho;
  return out;
}

/// Runs the callable and returns the kind tag of the Error it throws, or ""
/// when nothing is thrown.
template <typename F>
std::string thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return {};
}

}  // namespace seqcap::testing
