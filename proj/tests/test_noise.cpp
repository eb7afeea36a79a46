#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqcap/noise.hpp"

#include <cmath>

using namespace seqcap;

TEST_CASE("amplitude_damping") {
  const QuantumChannel c = amplitude_damping(0.36);
  REQUIRE(c.kraus.size() == 2);
  CHECK(c.kraus[0](0, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.kraus[0](1, 1).real() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(c.kraus[1](0, 1).real() == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(validate_channel(c).pass);
  CHECK(validate_channel(amplitude_damping(0.0)).pass);
  CHECK(validate_channel(amplitude_damping(1.0)).pass);
  CHECK_THROWS_AS(amplitude_damping(-0.1), Error);
  CHECK_THROWS_AS(amplitude_damping(1.1), Error);
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1.0);
  CHECK(binomial(5, 0) == 1.0);
  CHECK(binomial(5, 5) == 1.0);
  CHECK(binomial(5, 2) == 10.0);
  CHECK(binomial(10, 4) == 210.0);
  CHECK(binomial(3, 5) == 0.0);
  // Pascal recurrence on a grid.
  for (int n = 1; n <= 20; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("bosonic_ad_kraus") {
  const double gamma = 0.2;
  const FockTruncation trunc{4};
  const QuantumChannel c = bosonic_ad_kraus(gamma, trunc);
  REQUIRE(c.dim_in == 5);
  REQUIRE(c.kraus.size() == 5);
  CHECK(validate_channel(c).pass);

  // B_k|j⟩ entries against the closed form.
  for (int k = 0; k <= 4; ++k) {
    for (int j = 0; j <= 4; ++j) {
      for (int i = 0; i <= 4; ++i) {
        const double expected =
            (j - k == i && k <= j)
                ? std::sqrt(binomial(j, k) * std::pow(1.0 - gamma, j - k) * std::pow(gamma, k))
                : 0.0;
        CHECK(std::abs(c.kraus[k](i, j) - Complex(expected)) <= 1e-14);
      }
    }
  }

  // B_0 restricted to the qubit subspace matches qubit amplitude damping.
  const QuantumChannel q = amplitude_damping(gamma);
  CHECK(std::abs(c.kraus[0](0, 0) - q.kraus[0](0, 0)) <= 1e-15);
  CHECK(std::abs(c.kraus[0](1, 1) - q.kraus[0](1, 1)) <= 1e-15);
  CHECK(std::abs(c.kraus[1](0, 1) - q.kraus[1](0, 1)) <= 1e-15);

  // cutoff=1 reproduces the qubit channel exactly.
  const QuantumChannel two_level = bosonic_ad_kraus(gamma, FockTruncation{1});
  CHECK((two_level.kraus[0] - q.kraus[0]).norm() <= 1e-12);
  CHECK((two_level.kraus[1] - q.kraus[1]).norm() <= 1e-12);

  // B₁†B₁ = Σ m γ(1−γ)^{m−1} |m⟩⟨m|; entry at m=4, γ=0.1.
  const QuantumChannel c01 = bosonic_ad_kraus(0.1, trunc);
  const Matrix b1sq = c01.kraus[1].adjoint() * c01.kraus[1];
  CHECK(b1sq(4, 4).real() == doctest::Approx(0.2916).epsilon(1e-12));

  CHECK(validate_channel(bosonic_ad_kraus(0.0, trunc)).pass);
  CHECK(validate_channel(bosonic_ad_kraus(1.0, trunc)).pass);
  CHECK_THROWS_AS(bosonic_ad_kraus(-0.1, trunc), Error);
  CHECK_THROWS_AS(bosonic_ad_kraus(0.2, FockTruncation{-1}), Error);
}

TEST_CASE("pure_loss_kraus") {
  const double eta = 0.7;
  const FockTruncation trunc{6};
  const QuantumChannel c = pure_loss_kraus(eta, trunc);
  REQUIRE(c.dim_in == 7);
  REQUIRE(c.kraus.size() == 7);
  CHECK(validate_channel(c).pass);

  for (int l = 0; l <= 6; ++l) {
    for (int m = 0; m <= 6; ++m) {
      for (int i = 0; i <= 6; ++i) {
        const double expected =
            (m - l == i && l <= m)
                ? std::sqrt(binomial(m, l) * std::pow(1.0 - eta, l) * std::pow(eta, m - l))
                : 0.0;
        CHECK(std::abs(c.kraus[l](i, m) - Complex(expected)) <= 1e-14);
      }
    }
  }

  // Pure loss with transmissivity η equals bosonic AD with γ = 1−η.
  const QuantumChannel bad = bosonic_ad_kraus(1.0 - eta, trunc);
  for (size_t k = 0; k < c.kraus.size(); ++k) {
    CHECK((c.kraus[k] - bad.kraus[k]).norm() <= 1e-13);
  }

  // η = 0: everything decays to vacuum.
  const QuantumChannel dead = pure_loss_kraus(0.0, FockTruncation{2});
  DensityOperator top;
  top.matrix = Matrix::Zero(3, 3);
  top.matrix(2, 2) = 1.0;
  const DensityOperator out = apply(dead, top);
  CHECK(out.matrix(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));

  // η = 0.9, cutoff 4: tail weight on |4⟩ is 1 − 0.9⁴.
  const QuantumChannel loss = pure_loss_kraus(0.9, FockTruncation{4});
  Matrix tail = Matrix::Zero(5, 5);
  for (int l = 1; l <= 4; ++l) tail += loss.kraus[l].adjoint() * loss.kraus[l];
  CHECK(tail(4, 4).real() == doctest::Approx(1.0 - std::pow(0.9, 4)).epsilon(1e-12));

  CHECK_THROWS_AS(pure_loss_kraus(1.2, trunc), Error);
}

TEST_CASE("annihilation") {
  const Matrix a = annihilation(FockTruncation{3});
  REQUIRE(a.rows() == 4);
  for (int m = 1; m <= 3; ++m) {
    CHECK(a(m - 1, m).real() == doctest::Approx(std::sqrt(double(m))).epsilon(1e-15));
  }
  CHECK(a.cwiseAbs().sum() == doctest::Approx(std::sqrt(1.0) + std::sqrt(2.0) + std::sqrt(3.0))
                                  .epsilon(1e-14));
  // Number operator a†a = diag(0..3).
  const Matrix num = a.adjoint() * a;
  for (int m = 0; m <= 3; ++m) CHECK(num(m, m).real() == doctest::Approx(double(m)).epsilon(1e-14));

  // [a, a†] = I away from the cutoff state; the defect sits at (3,3).
  const Matrix comm = a * a.adjoint() - a.adjoint() * a;
  for (int m = 0; m < 3; ++m) CHECK(std::abs(comm(m, m) - Complex(1.0)) <= 1e-14);
  CHECK(comm(3, 3).real() == doctest::Approx(-3.0).epsilon(1e-14));

  const Matrix tiny = annihilation(FockTruncation{1});
  CHECK(tiny(0, 1).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(tiny(0, 0)) + std::abs(tiny(1, 0)) + std::abs(tiny(1, 1)) == 0.0);
}

TEST_CASE("small-gamma limit of bosonic AD") {
  // To first order the tail weight of B_1 is γ·a ρ a†; leading Kraus entries
  // behave like 1 − jγ/2 on the diagonal.
  const double gamma = 1e-6;
  const QuantumChannel c = bosonic_ad_kraus(gamma, FockTruncation{4});
  for (int j = 0; j <= 4; ++j) {
    CHECK(c.kraus[0](j, j).real() == doctest::Approx(1.0 - 0.5 * j * gamma).epsilon(1e-9));
  }
  const Matrix a = annihilation(FockTruncation{4});
  CHECK((c.kraus[1] - std::sqrt(gamma) * a).norm() <= std::sqrt(gamma) * 1e-5);
}
