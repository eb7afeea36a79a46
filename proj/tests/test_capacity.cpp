#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqcap/capacity.hpp"
#include "seqcap/noise.hpp"
#include "test_util.hpp"

#include <cmath>
#include <random>

using namespace seqcap;

namespace {

double h2(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// For amplitude damping with diagonal input diag(1−p, p) the coherent
// information reduces to h((1−γ)p) − h(γp), and the ball maximum is attained
// on this diagonal family.
double ad_ic_diagonal(double gamma, double p) {
  return h2((1.0 - gamma) * p) - h2(gamma * p);
}

double ad_q1_grid_oracle(double gamma) {
  double best = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    best = std::max(best, ad_ic_diagonal(gamma, i * 1e-4));
  }
  return best;
}

DensityOperator diagonal_state(double p) {
  DensityOperator rho;
  rho.matrix = Matrix::Zero(2, 2);
  rho.matrix(0, 0) = 1.0 - p;
  rho.matrix(1, 1) = p;
  return rho;
}

}  // namespace

TEST_CASE("binary_entropy") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(binary_entropy(0.11) == doctest::Approx(h2(0.11)).epsilon(1e-12));
  CHECK(binary_entropy(0.3) == doctest::Approx(binary_entropy(0.7)).epsilon(1e-12));
  CHECK_THROWS_AS(binary_entropy(-0.1), Error);
  CHECK_THROWS_AS(binary_entropy(1.1), Error);
}

TEST_CASE("g_func") {
  CHECK(g_func(0.0) == 0.0);
  CHECK(g_func(1.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(g_func(0.022) == doctest::Approx(1.022 * h2(0.022 / 1.022)).epsilon(1e-12));
  CHECK(g_func(0.5) > g_func(0.1));
}

TEST_CASE("continuity_capacity_bound") {
  CHECK(continuity_capacity_bound({0.0, 10, 2}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(continuity_capacity_bound({0.0, 10, 4}) == doctest::Approx(2.0).epsilon(1e-12));

  const double v = continuity_capacity_bound({0.0005, 44, 2});
  CHECK(v == doctest::Approx(1.0 * (1.0 - 2.0 * 44 * 0.0005) - g_func(44 * 0.0005))
                 .epsilon(1e-12));
  CHECK(v >= 0.8023);
  CHECK(v <= 0.8033);

  // Monotone decreasing in n for fixed epsilon.
  CHECK(continuity_capacity_bound({0.001, 5, 2}) > continuity_capacity_bound({0.001, 50, 2}));
  // Can go negative for large n·epsilon.
  CHECK(continuity_capacity_bound({0.1, 10, 2}) < 0.0);
}

TEST_CASE("sequential_distance_bound") {
  CHECK(sequential_distance_bound(0.01, 7) == doctest::Approx(0.07).epsilon(1e-12));
  CHECK(sequential_distance_bound(0.3, 0) == 0.0);
}

TEST_CASE("von_neumann_entropy") {
  std::mt19937_64 rng(5);
  CHECK(von_neumann_entropy(seqcap::testing::random_pure_state(rng, 4)) <= 1e-10);
  DensityOperator mixed;
  mixed.matrix = Matrix::Identity(4, 4) * 0.25;
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(diagonal_state(0.3)) == doctest::Approx(h2(0.3)).epsilon(1e-12));
}

TEST_CASE("coherent_information") {
  std::mt19937_64 rng(17);
  const DensityOperator rho = seqcap::testing::random_mixed_state(rng, 2);
  // Identity channel: complement is trivial, I_c = S(ρ).
  CHECK(coherent_information(identity_channel(2), rho) ==
        doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-10));

  for (double gamma : {0.1, 0.3, 0.5}) {
    for (double p : {0.1, 0.35, 0.8}) {
      CHECK(coherent_information(amplitude_damping(gamma), diagonal_state(p)) ==
            doctest::Approx(ad_ic_diagonal(gamma, p)).epsilon(1e-9));
    }
  }
}

TEST_CASE("q1_maximize") {
  const Q1Result ident = q1_maximize(identity_channel(2));
  CHECK(ident.value == doctest::Approx(1.0).epsilon(1e-6));

  // Dense 1-D oracle along the diagonal family, where the AD optimum lives.
  for (double gamma : {0.2, 0.3}) {
    const Q1Result res = q1_maximize(amplitude_damping(gamma));
    const double oracle = ad_q1_grid_oracle(gamma);
    CHECK(res.value >= oracle - 1e-6);
    CHECK(res.value <= oracle + 1e-4);
    CHECK(std::abs(res.argmax.matrix.trace().real() - 1.0) <= 1e-9);
    CHECK(coherent_information(amplitude_damping(gamma), res.argmax) ==
          doctest::Approx(res.value).epsilon(1e-9));
  }

  // Self-complementary point: I_c vanishes identically, so the max is 0.
  CHECK(std::abs(q1_maximize(amplitude_damping(0.5)).value) <= 1e-9);

  // Determinism under a fixed seed.
  const Q1Result a = q1_maximize(amplitude_damping(0.2), 42);
  const Q1Result b = q1_maximize(amplitude_damping(0.2), 42);
  CHECK(a.value == b.value);
  CHECK((a.argmax.matrix - b.argmax.matrix).norm() == 0.0);
}

TEST_CASE("diamond_distance_interval") {
  const DiamondInterval zero =
      diamond_distance_interval(amplitude_damping(0.3), amplitude_damping(0.3));
  CHECK(zero.lower <= 1e-12);
  CHECK(zero.upper <= 1e-12);

  QuantumChannel depol;
  depol.dim_in = depol.dim_out = 2;
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  depol.kraus = {0.5 * Matrix::Identity(2, 2), 0.5 * x, 0.5 * y, 0.5 * z};
  const DiamondInterval iv = diamond_distance_interval(identity_channel(2), depol);
  CHECK(iv.lower == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(iv.upper == doctest::Approx(1.5).epsilon(1e-10));

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const QuantumChannel a = seqcap::testing::random_channel(rng, 2, 2);
    const QuantumChannel b = seqcap::testing::random_channel(rng, 2, 3);
    const DiamondInterval r = diamond_distance_interval(a, b);
    CHECK(r.lower >= 0.0);
    CHECK(r.lower <= r.upper + 1e-12);
    CHECK(r.upper <= 2.0 + 1e-9);
    // Lower bound dominates the trace distance on any fixed product input.
    const DensityOperator rho = seqcap::testing::random_mixed_state(rng, 2);
    const double td = 0.5 * trace_norm(Matrix(apply(a, rho).matrix - apply(b, rho).matrix));
    CHECK(td <= r.upper + 1e-10);
  }
}
