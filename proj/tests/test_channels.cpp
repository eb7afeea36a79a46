#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqcap/channels.hpp"
#include "seqcap/noise.hpp"
#include "test_util.hpp"

#include <random>

using namespace seqcap;
using seqcap::testing::random_channel;
using seqcap::testing::random_mixed_state;

namespace {

DensityOperator basis_state(int dim, int i) {
  Vector v = Vector::Zero(dim);
  v(i) = 1.0;
  return DensityOperator::pure(v);
}

// Channel action on all matrix units; equality as maps.
bool act_identically(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.dim_in != b.dim_in || a.dim_out != b.dim_out) return false;
  for (int i = 0; i < a.dim_in; ++i) {
    for (int j = 0; j < a.dim_in; ++j) {
      Matrix unit = Matrix::Zero(a.dim_in, a.dim_in);
      unit(i, j) = 1.0;
      if ((apply_matrix(a, unit) - apply_matrix(b, unit)).norm() > 1e-10) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("validate_channel") {
  CHECK(validate_channel(identity_channel(2)).pass);
  CHECK(validate_channel(identity_channel(2)).defect == 0.0);
  CHECK(validate_channel(amplitude_damping(0.3)).pass);

  QuantumChannel scaled = identity_channel(2);
  scaled.kraus[0] *= 0.9;
  const ValidationReport report = validate_channel(scaled);
  CHECK_FALSE(report.pass);
  CHECK(report.defect == doctest::Approx(0.19).epsilon(1e-12));

  QuantumChannel bad = identity_channel(2);
  bad.kraus.push_back(Matrix::Zero(3, 2));
  CHECK_THROWS_AS(validate_channel(bad), Error);
}

TEST_CASE("apply") {
  std::mt19937_64 rng(7);
  const DensityOperator rho = random_mixed_state(rng, 2);
  CHECK((apply(identity_channel(2), rho).matrix - rho.matrix).norm() <= 1e-15);

  const DensityOperator one = basis_state(2, 1);
  const DensityOperator damped = apply(amplitude_damping(1.0), one);
  CHECK((damped.matrix - basis_state(2, 0).matrix).norm() <= 1e-15);

  const DensityOperator partial = apply(amplitude_damping(0.4), one);
  CHECK(partial.matrix(0, 0).real() == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(partial.matrix(1, 1).real() == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(std::abs(partial.matrix(0, 1)) <= 1e-15);
}

TEST_CASE("compose") {
  const QuantumChannel ad = amplitude_damping(0.3);
  CHECK(act_identically(compose(identity_channel(2), ad), ad));

  // Amplitude damping is closed under composition.
  const double g1 = 0.25, g2 = 0.4;
  CHECK(act_identically(compose(amplitude_damping(g1), amplitude_damping(g2)),
                        amplitude_damping(1.0 - (1.0 - g1) * (1.0 - g2))));

  const DensityOperator out =
      apply(compose(amplitude_damping(0.5), amplitude_damping(0.5)), basis_state(2, 1));
  CHECK(out.matrix(0, 0).real() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(out.matrix(1, 1).real() == doctest::Approx(0.25).epsilon(1e-12));

  QuantumChannel three = identity_channel(3);
  CHECK_THROWS_AS(compose(three, amplitude_damping(0.2)), Error);
}

TEST_CASE("power") {
  const QuantumChannel ad = amplitude_damping(0.2);
  CHECK(channels_equal(power(ad, 0), identity_channel(2)));
  CHECK(channels_equal(power(ad, 1), ad));
  CHECK(channels_equal(power(ad, 3), amplitude_damping(1.0 - std::pow(0.8, 3))));

  QuantumChannel rect;
  rect.dim_in = 2;
  rect.dim_out = 3;
  rect.kraus = {Matrix::Identity(3, 2)};
  CHECK_THROWS_AS(power(rect, 2), Error);
}

TEST_CASE("tensor") {
  CHECK(channels_equal(tensor(identity_channel(2), identity_channel(2)), identity_channel(4)));

  // AD on the first qubit of |11⟩.
  const QuantumChannel joint = tensor(amplitude_damping(0.3), identity_channel(2));
  const DensityOperator out = apply(joint, basis_state(4, 3));
  CHECK(out.matrix(1, 1).real() == doctest::Approx(0.3).epsilon(1e-12));  // |01⟩
  CHECK(out.matrix(3, 3).real() == doctest::Approx(0.7).epsilon(1e-12));  // |11⟩
}

TEST_CASE("choi") {
  const Matrix j_id = choi(identity_channel(2));
  CHECK(j_id.trace().real() == doctest::Approx(2.0).epsilon(1e-12));
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1.0;
  CHECK((j_id - expected).norm() <= 1e-15);

  // Completely depolarizing qubit: four Kraus operators P/2.
  QuantumChannel depol;
  depol.dim_in = depol.dim_out = 2;
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  depol.kraus = {0.5 * Matrix::Identity(2, 2), 0.5 * x, 0.5 * y, 0.5 * z};
  REQUIRE(validate_channel(depol).pass);
  const Matrix j_dep = choi(depol);
  CHECK((j_dep - 0.5 * Matrix::Identity(4, 4)).norm() <= 1e-15);

  // Trace preservation: partial trace of the Choi over the output leg is I.
  const Matrix j_ad = choi(amplitude_damping(0.4));
  Matrix reduced = Matrix::Zero(2, 2);
  for (int a = 0; a < 2; ++a) {
    for (int ap = 0; ap < 2; ++ap) {
      for (int b = 0; b < 2; ++b) reduced(a, ap) += j_ad(a * 2 + b, ap * 2 + b);
    }
  }
  CHECK((reduced - Matrix::Identity(2, 2)).norm() <= 1e-12);
}

TEST_CASE("complementary") {
  const QuantumChannel comp_id = complementary(identity_channel(2));
  CHECK(comp_id.dim_out == 1);
  std::mt19937_64 rng(11);
  const DensityOperator rho = random_mixed_state(rng, 2);
  CHECK(apply(comp_id, rho).matrix(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));

  // AD at gamma = 1/2 is self-complementary.
  CHECK(act_identically(complementary(amplitude_damping(0.5)), amplitude_damping(0.5)));

  // Completely dephasing qubit: complement is ρ ↦ diag(ρ00, ρ11).
  QuantumChannel dephase;
  dephase.dim_in = dephase.dim_out = 2;
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  dephase.kraus = {p0, p1};
  const Matrix img = apply_matrix(complementary(dephase), rho.matrix);
  CHECK(img(0, 0) == rho.matrix(0, 0));
  CHECK(img(1, 1) == rho.matrix(1, 1));
  CHECK(std::abs(img(0, 1)) <= 1e-15);
}

TEST_CASE("pure-state constructor") {
  Vector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(DensityOperator::pure(v), Error);  // norm √2, too far from 1
  v << std::sqrt(0.5) * (1.0 + 1e-9), std::sqrt(0.5);
  const DensityOperator rho = DensityOperator::pure(v);
  CHECK(rho.matrix.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("channel-algebra properties on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const QuantumChannel a = random_channel(rng, 2, 2 + static_cast<int>(rng() % 3));
    const QuantumChannel b = random_channel(rng, 2, 2 + static_cast<int>(rng() % 3));
    REQUIRE(validate_channel(a).pass);

    const DensityOperator rho = random_mixed_state(rng, 2);
    const DensityOperator out = apply(a, rho);
    CHECK(std::abs(out.matrix.trace().real() - 1.0) <= 1e-10);
    CHECK(hermitian_eig(out.matrix).eigenvalues.minCoeff() >= -1e-9);

    // compose(a,b) acts as apply(a) after apply(b).
    const QuantumChannel ab = compose(a, b);
    CHECK((apply(ab, rho).matrix - apply(a, apply(b, rho)).matrix).norm() <= 1e-10);

    // Semigroup law as Choi equality.
    const QuantumChannel a5 = power(a, 5);
    CHECK(channels_equal(a5, compose(power(a, 2), power(a, 3))));

    // Pruning keeps the map and bounds the Kraus count.
    const QuantumChannel pruned = kraus_prune(ab);
    CHECK(pruned.kraus.size() <= 4);
    CHECK(channels_equal(pruned, ab));
  }
}
