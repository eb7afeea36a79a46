#include "seqcap/noise.hpp"

#include <cmath>

namespace seqcap {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i);
    c /= static_cast<double>(i);
  }
  return c;
}

QuantumChannel amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0) fail("OutOfRange", "gamma outside [0,1]");
  QuantumChannel c;
  c.dim_in = 2;
  c.dim_out = 2;
  Matrix a0 = Matrix::Zero(2, 2);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - gamma);
  Matrix a1 = Matrix::Zero(2, 2);
  a1(0, 1) = std::sqrt(gamma);
  c.kraus = {a0, a1};
  return c;
}

QuantumChannel bosonic_ad_kraus(double gamma, const FockTruncation& trunc) {
  if (gamma < 0.0 || gamma > 1.0) fail("OutOfRange", "gamma outside [0,1]");
  if (trunc.cutoff < 0) fail("OutOfRange", "negative cutoff");
  const int d = trunc.dim();
  QuantumChannel c;
  c.dim_in = d;
  c.dim_out = d;
  for (int k = 0; k < d; ++k) {
    Matrix b = Matrix::Zero(d, d);
    for (int j = k; j < d; ++j) {
      b(j - k, j) = std::sqrt(binomial(j, k) * std::pow(1.0 - gamma, j - k) * std::pow(gamma, k));
    }
    c.kraus.push_back(std::move(b));
  }
  return c;
}

QuantumChannel pure_loss_kraus(double eta, const FockTruncation& trunc) {
  if (eta < 0.0 || eta > 1.0) fail("OutOfRange", "eta outside [0,1]");
  if (trunc.cutoff < 0) fail("OutOfRange", "negative cutoff");
  const int d = trunc.dim();
  QuantumChannel c;
  c.dim_in = d;
  c.dim_out = d;
  for (int l = 0; l < d; ++l) {
    Matrix a = Matrix::Zero(d, d);
    for (int m = l; m < d; ++m) {
      a(m - l, m) = std::sqrt(binomial(m, l) * std::pow(1.0 - eta, l) * std::pow(eta, m - l));
    }
    c.kraus.push_back(std::move(a));
  }
  return c;
}

Matrix annihilation(const FockTruncation& trunc) {
  if (trunc.cutoff < 0) fail("OutOfRange", "negative cutoff");
  const int d = trunc.dim();
  Matrix a = Matrix::Zero(d, d);
  for (int m = 1; m < d; ++m) {
    a(m - 1, m) = std::sqrt(static_cast<double>(m));
  }
  return a;
}

}  // namespace seqcap
