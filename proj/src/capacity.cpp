#include "seqcap/capacity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace seqcap {

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) fail("OutOfRange", "binary_entropy argument outside [0,1]");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double g_func(double eps) {
  if (eps < 0.0) fail("OutOfRange", "g_func argument must be nonnegative");
  if (eps == 0.0) return 0.0;
  return (1.0 + eps) * binary_entropy(eps / (1.0 + eps));
}

double continuity_capacity_bound(const CapacityBoundParams& p) {
  if (p.epsilon < 0.0 || p.epsilon > 1.0) fail("OutOfRange", "epsilon outside [0,1]");
  if (p.n < 0) fail("OutOfRange", "negative n");
  if (p.d_b < 2) fail("OutOfRange", "d_B must be at least 2");
  const double ne = static_cast<double>(p.n) * p.epsilon;
  return std::log2(static_cast<double>(p.d_b)) * (1.0 - 2.0 * ne) - g_func(ne);
}

double sequential_distance_bound(double epsilon, long n) {
  if (epsilon < 0.0 || epsilon > 1.0) fail("OutOfRange", "epsilon outside [0,1]");
  if (n < 0) fail("OutOfRange", "negative n");
  return static_cast<double>(n) * epsilon;
}

double von_neumann_entropy(const DensityOperator& rho) {
  const HermitianEig eig = hermitian_eig(rho.matrix);
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    double lambda = eig.eigenvalues(i);
    if (lambda < 0.0) {
      if (lambda < -1e-10) fail("InvalidState", "state has a significantly negative eigenvalue");
      lambda = 0.0;
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double coherent_information(const QuantumChannel& c, const DensityOperator& rho) {
  if (rho.dim() != c.dim_in) fail("DimensionMismatch", "state dimension != channel input");
  const double s_out = von_neumann_entropy(apply(c, rho));
  const double s_env = von_neumann_entropy(apply(complementary(c), rho));
  return s_out - s_env;
}

namespace {

DensityOperator bloch_state(const Eigen::Vector3d& r) {
  DensityOperator rho;
  rho.matrix = Matrix(2, 2);
  rho.matrix << Complex(0.5 * (1.0 + r.z()), 0.0), Complex(0.5 * r.x(), -0.5 * r.y()),
      Complex(0.5 * r.x(), 0.5 * r.y()), Complex(0.5 * (1.0 - r.z()), 0.0);
  return rho;
}

Eigen::Vector3d project_to_ball(Eigen::Vector3d r) {
  const double norm = r.norm();
  if (norm > 1.0) r /= norm;
  return r;
}

/// Nelder-Mead on the closed Bloch ball; maximizes f.
Eigen::Vector3d nelder_mead(const std::function<double(const Eigen::Vector3d&)>& f,
                            Eigen::Vector3d start, double param_tol) {
  constexpr int kMaxIter = 500;
  std::array<Eigen::Vector3d, 4> pts;
  std::array<double, 4> vals;
  pts[0] = project_to_ball(start);
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d p = pts[0];
    p(i) += 0.05;
    pts[static_cast<std::size_t>(i + 1)] = project_to_ball(p);
  }
  for (int i = 0; i < 4; ++i) vals[static_cast<std::size_t>(i)] = f(pts[static_cast<std::size_t>(i)]);

  auto order = [&]() {
    // Descending by value (maximization), stable for determinism.
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (vals[static_cast<std::size_t>(j)] > vals[static_cast<std::size_t>(i)]) {
          std::swap(vals[static_cast<std::size_t>(i)], vals[static_cast<std::size_t>(j)]);
          std::swap(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
        }
      }
    }
  };

  for (int iter = 0; iter < kMaxIter; ++iter) {
    order();
    double spread = 0.0;
    for (int i = 1; i < 4; ++i) {
      spread = std::max(spread, (pts[static_cast<std::size_t>(i)] - pts[0]).norm());
    }
    if (spread < param_tol) break;

    const Eigen::Vector3d centroid = (pts[0] + pts[1] + pts[2]) / 3.0;
    const Eigen::Vector3d worst = pts[3];
    const Eigen::Vector3d reflected = project_to_ball(centroid + (centroid - worst));
    const double fr = f(reflected);
    if (fr > vals[0]) {
      const Eigen::Vector3d expanded = project_to_ball(centroid + 2.0 * (centroid - worst));
      const double fe = f(expanded);
      if (fe > fr) {
        pts[3] = expanded;
        vals[3] = fe;
      } else {
        pts[3] = reflected;
        vals[3] = fr;
      }
    } else if (fr > vals[2]) {
      pts[3] = reflected;
      vals[3] = fr;
    } else {
      const Eigen::Vector3d contracted = project_to_ball(centroid + 0.5 * (worst - centroid));
      const double fc = f(contracted);
      if (fc > vals[3]) {
        pts[3] = contracted;
        vals[3] = fc;
      } else {
        for (int i = 1; i < 4; ++i) {
          pts[static_cast<std::size_t>(i)] =
              project_to_ball(pts[0] + 0.5 * (pts[static_cast<std::size_t>(i)] - pts[0]));
          vals[static_cast<std::size_t>(i)] = f(pts[static_cast<std::size_t>(i)]);
        }
      }
    }
  }
  order();
  return pts[0];
}

bool lex_less(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  for (int i = 0; i < 3; ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

}  // namespace

Q1Result q1_maximize(const QuantumChannel& c, unsigned seed) {
  if (c.dim_in != 2) fail("NotQubit", "q1_maximize requires a qubit-input channel");
  const QuantumChannel comp = complementary(c);
  auto objective = [&](const Eigen::Vector3d& r) {
    const DensityOperator rho = bloch_state(r);
    return von_neumann_entropy(apply(c, rho)) - von_neumann_entropy(apply(comp, rho));
  };

  // Coarse grid, step 0.05 per axis, restricted to the ball. Ties broken by
  // lexicographic Bloch coordinates for determinism.
  Eigen::Vector3d best_r = Eigen::Vector3d::Zero();
  double best_v = objective(best_r);
  constexpr double kStep = 0.05;
  for (int ix = -20; ix <= 20; ++ix) {
    for (int iy = -20; iy <= 20; ++iy) {
      for (int iz = -20; iz <= 20; ++iz) {
        Eigen::Vector3d r(ix * kStep, iy * kStep, iz * kStep);
        if (r.squaredNorm() > 1.0 + 1e-12) continue;
        const double v = objective(r);
        if (v > best_v || (v == best_v && lex_less(r, best_r))) {
          best_v = v;
          best_r = r;
        }
      }
    }
  }

  // Local refinement from the grid optimum plus three seeded restarts.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<Eigen::Vector3d> starts{best_r};
  while (starts.size() < 4) {
    Eigen::Vector3d r(unif(rng), unif(rng), unif(rng));
    if (r.squaredNorm() <= 1.0) starts.push_back(r);
  }
  for (const Eigen::Vector3d& start : starts) {
    const Eigen::Vector3d r = nelder_mead(objective, start, 1e-6);
    const double v = objective(r);
    if (v > best_v || (v == best_v && lex_less(r, best_r))) {
      best_v = v;
      best_r = r;
    }
  }

  Q1Result result;
  result.value = best_v;
  result.argmax = bloch_state(best_r);
  return result;
}

DiamondInterval diamond_distance_interval(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.dim_in != b.dim_in || a.dim_out != b.dim_out) {
    fail("DimensionMismatch", "diamond interval requires matching dimensions");
  }
  const int d = a.dim_in;
  const Matrix diff = choi(a) - choi(b);
  const double choi_l1 = trace_norm(diff);

  // Independent route for the lower bound: act on the maximally entangled
  // state explicitly.
  Vector omega = Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) omega(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  const DensityOperator entangled = DensityOperator::pure(omega);
  const QuantumChannel ext_a = tensor(identity_channel(d), a);
  const QuantumChannel ext_b = tensor(identity_channel(d), b);
  const Matrix out_diff = apply(ext_a, entangled).matrix - apply(ext_b, entangled).matrix;
  const double entangled_route = 0.5 * trace_norm(out_diff);

  DiamondInterval interval;
  interval.lower = std::max(entangled_route, 0.5 * choi_l1 / static_cast<double>(d));
  interval.upper = 0.5 * choi_l1;
  if (interval.lower > interval.upper + 1e-12) {
    fail("ComputationError", "diamond interval inverted");
  }
  interval.lower = std::min(interval.lower, interval.upper);
  return interval;
}

}  // namespace seqcap
