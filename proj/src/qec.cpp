#include "seqcap/qec.hpp"

#include "seqcap/noise.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace seqcap {

namespace {

void check_code(const Code& code) {
  if (code.physical_dim < 1) fail("InvalidCode", "nonpositive physical dimension");
  if (code.words.empty()) fail("InvalidCode", "code has no words");
  for (const Vector& w : code.words) {
    if (w.size() != code.physical_dim) fail("InvalidCode", "word dimension mismatch");
  }
  for (std::size_t i = 0; i < code.words.size(); ++i) {
    for (std::size_t j = i; j < code.words.size(); ++j) {
      const Complex ip = code.words[i].adjoint() * code.words[j];
      const double target = i == j ? 1.0 : 0.0;
      if (std::abs(ip - Complex(target, 0.0)) > 1e-10) {
        fail("NonOrthonormalWords", "words " + std::to_string(i) + "," + std::to_string(j) +
                                        " fail orthonormality");
      }
    }
  }
}

void check_errors(const Code& code, const std::vector<Matrix>& errors) {
  if (errors.empty()) fail("DimensionMismatch", "empty error set");
  for (const Matrix& f : errors) {
    if (f.rows() != code.physical_dim || f.cols() != code.physical_dim) {
      fail("DimensionMismatch", "error operator does not act on the physical space");
    }
  }
}

}  // namespace

QuantumChannel encoder(const Code& code) {
  check_code(code);
  const int l = code.logical_dim();
  Matrix s = Matrix::Zero(code.physical_dim, l);
  for (int i = 0; i < l; ++i) s.col(i) = code.words[static_cast<std::size_t>(i)];
  QuantumChannel e;
  e.dim_in = l;
  e.dim_out = code.physical_dim;
  e.kraus = {s};
  return e;
}

Matrix code_projector(const Code& code) {
  check_code(code);
  Matrix p = Matrix::Zero(code.physical_dim, code.physical_dim);
  for (const Vector& w : code.words) p += w * w.adjoint();
  return p;
}

KLReport kl_check(const Code& code, const std::vector<Matrix>& errors) {
  check_code(code);
  check_errors(code, errors);
  const int l = code.logical_dim();
  const int ne = static_cast<int>(errors.size());

  KLReport report;
  report.c_matrix = Matrix::Zero(ne, ne);
  // Images F_b|j⟩ computed once.
  std::vector<std::vector<Vector>> images(static_cast<std::size_t>(ne));
  for (int b = 0; b < ne; ++b) {
    for (int j = 0; j < l; ++j) {
      images[static_cast<std::size_t>(b)].push_back(errors[static_cast<std::size_t>(b)] *
                                                    code.words[static_cast<std::size_t>(j)]);
    }
  }
  for (int a = 0; a < ne; ++a) {
    for (int b = 0; b < ne; ++b) {
      Complex c = 0.0;
      for (int i = 0; i < l; ++i) {
        c += (images[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)].adjoint() *
              images[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])(0, 0);
      }
      report.c_matrix(a, b) = c / static_cast<double>(l);
    }
  }
  double worst = 0.0;
  for (int a = 0; a < ne; ++a) {
    for (int b = 0; b < ne; ++b) {
      for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
          const Complex val =
              (images[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)].adjoint() *
               images[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)])(0, 0);
          const Complex target = i == j ? report.c_matrix(a, b) : Complex(0.0, 0.0);
          worst = std::max(worst, std::abs(val - target));
        }
      }
    }
  }
  report.max_violation = worst;
  report.satisfied = worst <= tol().kl_condition;
  return report;
}

QuantumChannel build_recovery(const Code& code, const std::vector<Matrix>& errors) {
  const KLReport report = kl_check(code, errors);
  if (!report.satisfied) {
    fail("KLViolated", "Knill-Laflamme violation " + std::to_string(report.max_violation));
  }
  const int l = code.logical_dim();
  const int d = code.physical_dim;
  const int ne = static_cast<int>(errors.size());

  // Orthogonalize the error directions: c = U diag(w) U†, G_m = Σ_a U(a,m) F_a
  // gives ⟨i|G_m†G_n|j⟩ = w_m δ_mn δ_ij.
  const HermitianEig eig = hermitian_eig(report.c_matrix);

  QuantumChannel r;
  r.dim_in = d;
  r.dim_out = d;
  Matrix addressed = Matrix::Zero(d, d);  // Σ |v⟩⟨v| over corrected subspaces
  for (int m = 0; m < ne; ++m) {
    const double w = eig.eigenvalues(m);
    if (w < 1e-12) continue;
    Matrix g = Matrix::Zero(d, d);
    for (int a = 0; a < ne; ++a) {
      g += eig.eigenvectors(a, m) * errors[static_cast<std::size_t>(a)];
    }
    Matrix kraus = Matrix::Zero(d, d);
    for (int i = 0; i < l; ++i) {
      const Vector v = (g * code.words[static_cast<std::size_t>(i)]) / std::sqrt(w);
      kraus += code.words[static_cast<std::size_t>(i)] * v.adjoint();
      addressed += v * v.adjoint();
    }
    r.kraus.push_back(std::move(kraus));
  }
  if (r.kraus.empty()) fail("KLViolated", "error set has zero-weight c-matrix");

  // Complete trace preservation: reset the unaddressed subspace to |0_L⟩.
  const Matrix complement = Matrix::Identity(d, d) - addressed;
  const HermitianEig comp_eig = hermitian_eig(complement);
  for (Eigen::Index k = 0; k < comp_eig.eigenvalues.size(); ++k) {
    if (comp_eig.eigenvalues(k) < 0.5) continue;
    const Vector u = comp_eig.eigenvectors.col(k);
    r.kraus.push_back(code.words[0] * u.adjoint());
  }
  return r;
}

double tail_error_bound(const std::vector<Matrix>& kraus, int k) {
  const int d = static_cast<int>(kraus.size());
  if (k < 0 || k > d) fail("OutOfRange", "corrected count outside [0, kraus count]");
  if (k == d) return 0.0;
  const Eigen::Index dim = kraus.front().cols();
  Matrix tail = Matrix::Zero(dim, dim);
  for (int i = k; i < d; ++i) {
    const Matrix& m = kraus[static_cast<std::size_t>(i)];
    if (m.cols() != dim) fail("DimensionMismatch", "inconsistent Kraus shapes");
    tail += m.adjoint() * m;
  }
  return operator_norm(tail);
}

double recovery_residual(const Code& code, const QuantumChannel& noise,
                         const std::vector<Matrix>& errors_corrected, unsigned seed) {
  if (noise.dim_in != code.physical_dim || noise.dim_out != code.physical_dim) {
    fail("DimensionMismatch", "noise does not act on the physical space");
  }
  const QuantumChannel recovery = build_recovery(code, errors_corrected);
  const QuantumChannel enc = encoder(code);

  // Bound from the corrected set: tail = I − Σ F†F, assuming the corrected
  // operators complete to a Kraus representation of the noise.
  Matrix corrected_sum = Matrix::Zero(code.physical_dim, code.physical_dim);
  for (const Matrix& f : errors_corrected) corrected_sum += f.adjoint() * f;
  const double bound =
      operator_norm(Matrix(Matrix::Identity(code.physical_dim, code.physical_dim) - corrected_sum));

  const int l = code.logical_dim();
  std::vector<Vector> logical_states;
  if (l == 2) {
    // Axis states of the logical Bloch sphere.
    const double s = 1.0 / std::sqrt(2.0);
    const std::vector<std::pair<Complex, Complex>> axis = {
        {1.0, 0.0}, {0.0, 1.0}, {s, s}, {s, -s}, {s, Complex(0.0, s)}, {s, Complex(0.0, -s)}};
    for (const auto& [a, b] : axis) {
      Vector v(2);
      v << a, b;
      logical_states.push_back(v);
    }
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < 200; ++s) {
    Vector v(l);
    for (int i = 0; i < l; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    v /= v.norm();
    logical_states.push_back(v);
  }

  double worst = 0.0;
  for (const Vector& psi : logical_states) {
    const DensityOperator rho_phys = apply(enc, DensityOperator::pure(psi));
    const Matrix recovered = apply_matrix(recovery, apply_matrix(noise, rho_phys.matrix));
    worst = std::max(worst, 0.5 * trace_norm(Matrix(recovered - rho_phys.matrix)));
  }
  if (worst > bound + 1e-9) {
    fail("ComputationError", "recovery residual " + std::to_string(worst) +
                                 " exceeds tail bound " + std::to_string(bound));
  }
  return worst;
}

namespace {

double binomial_upper_tail(double eta, int k, int m) {
  double sum = 0.0;
  for (int l = k + 1; l <= m; ++l) {
    sum += binomial(m, l) * std::pow(eta, m - l) * std::pow(1.0 - eta, l);
  }
  return sum;
}

/// KL divergence between Bernoulli(a) and Bernoulli(p), natural log.
double kl_bernoulli_nats(double a, double p) {
  auto term = [](double x, double y) {
    if (x == 0.0) return 0.0;
    if (y == 0.0) return std::numeric_limits<double>::infinity();
    return x * std::log(x / y);
  };
  return term(a, p) + term(1.0 - a, 1.0 - p);
}

}  // namespace

double pure_loss_exact_tail(double eta, int k, int cutoff) {
  if (eta < 0.0 || eta > 1.0) fail("OutOfRange", "eta outside [0,1]");
  if (cutoff < 1) fail("OutOfRange", "cutoff must be positive");
  if (k < 0 || k >= cutoff) fail("OutOfRange", "k must lie in [0, cutoff)");
  double best = 0.0;
  for (int m = k + 1; m <= cutoff; ++m) {
    best = std::max(best, binomial_upper_tail(eta, k, m));
  }
  // Cross-check against the operator norm of the constructed tail matrix.
  const QuantumChannel loss = pure_loss_kraus(eta, FockTruncation{cutoff});
  const double norm = tail_error_bound(loss.kraus, k + 1);
  if (std::abs(best - norm) > 1e-12) {
    fail("ComputationError", "binomial tail disagrees with tail matrix norm");
  }
  return best;
}

TailBoundReport chernoff_tail_bound(double eta, int k, int cutoff) {
  TailBoundReport report;
  report.k = k;
  report.exact_norm = pure_loss_exact_tail(eta, k, cutoff);
  report.chernoff_valid = true;
  double best_chernoff = 0.0;
  for (int m = k + 1; m <= cutoff; ++m) {
    ChernoffSample s;
    s.m = m;
    s.exact = binomial_upper_tail(eta, k, m);
    const double a = static_cast<double>(k + 1) / m;
    s.chernoff = std::exp(-m * kl_bernoulli_nats(a, 1.0 - eta));
    s.valid = a >= 1.0 - eta;
    s.chernoff_paper = std::exp(-m * kl_bernoulli_nats(a, eta));
    s.paper_valid = a <= eta;
    if (s.valid) {
      if (s.exact > s.chernoff + 1e-12) {
        fail("ComputationError", "exact tail exceeds in-regime Chernoff bound at m=" +
                                     std::to_string(m));
      }
      best_chernoff = std::max(best_chernoff, s.chernoff);
    } else {
      report.chernoff_valid = false;
    }
    report.per_m.push_back(s);
  }
  if (report.chernoff_valid) report.chernoff = best_chernoff;
  return report;
}

Code cly_code(int cutoff) {
  if (cutoff < 4) fail("CutoffTooSmall", "CLY code needs cutoff >= 4");
  const int d = cutoff + 1;
  Code code;
  code.physical_dim = d * d;
  auto fock2 = [d](int m, int n) { return m * d + n; };
  Vector w0 = Vector::Zero(d * d);
  w0(fock2(4, 0)) = 1.0 / std::sqrt(2.0);
  w0(fock2(0, 4)) = 1.0 / std::sqrt(2.0);
  Vector w1 = Vector::Zero(d * d);
  w1(fock2(2, 2)) = 1.0;
  code.words = {w0, w1};
  return code;
}

std::vector<ErrorCurveRow> cly_error_curve(const std::vector<double>& gamma_grid) {
  std::vector<ErrorCurveRow> rows;
  rows.reserve(gamma_grid.size());
  const FockTruncation trunc{4};
  for (double gamma : gamma_grid) {
    if (gamma <= 0.0 || gamma >= 1.0) fail("OutOfRange", "gamma outside (0,1)");
    const QuantumChannel mode = bosonic_ad_kraus(gamma, trunc);
    const QuantumChannel two_mode = tensor(mode, mode);
    // Corrected set first: indices (0,0), (0,1), (1,0) in the product order.
    const int d = trunc.dim();
    std::vector<Matrix> kraus;
    kraus.push_back(two_mode.kraus[0]);
    kraus.push_back(two_mode.kraus[1]);
    kraus.push_back(two_mode.kraus[static_cast<std::size_t>(d)]);
    for (std::size_t i = 0; i < two_mode.kraus.size(); ++i) {
      if (i == 0 || i == 1 || i == static_cast<std::size_t>(d)) continue;
      kraus.push_back(two_mode.kraus[i]);
    }
    ErrorCurveRow row;
    row.gamma = gamma;
    row.exact_norm = tail_error_bound(kraus, 3);
    for (int p = 0; p <= 8; ++p) {
      const double value =
          1.0 - std::pow(1.0 - gamma, p) * (1.0 + p * gamma / (1.0 - gamma));
      row.p_formula_max = std::max(row.p_formula_max, value);
    }
    row.bound = 49.0 * gamma * gamma;
    if (std::abs(row.exact_norm - row.p_formula_max) > 1e-10) {
      fail("ComputationError", "tail norm disagrees with p-loop formula at gamma=" +
                                   std::to_string(gamma));
    }
    if (row.p_formula_max > row.bound + 1e-12) {
      fail("ComputationError", "p-loop value exceeds 49*gamma^2 at gamma=" +
                                   std::to_string(gamma));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace seqcap
