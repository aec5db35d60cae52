#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qaoa/schedule.hpp"

namespace qaoa {

/// Search space for the ring objective. M1 is the manifold
/// gamma_i + beta_{p+1-i} = 0 (mod pi/2), which contains the minima of F;
/// M2 uses a minus sign and contains the maxima. Both have p free parameters;
/// Full has 2p.
enum class ManifoldKind { Full, M1, M2 };

struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::Full;
  int p = 1;

  int free_count() const noexcept { return kind == ManifoldKind::Full ? 2 * p : p; }
};

/// Builds the full Ring-convention schedule from free parameters.
/// Full: free = (gamma_1..gamma_p, beta_1..beta_p).
/// M1/M2: free is the interleaved prefix (gamma_1, beta_1, gamma_2, ...) of
/// length p; the remaining angles are gamma_i = -+beta_{p+1-i} and
/// beta_i = -+gamma_{p+1-i} (minus for M1, plus for M2), reduced mod pi/2
/// into [0, pi/2).
AngleSchedule expand_manifold(const std::vector<double>& free_params, const ManifoldSpec& spec);

struct OptimizerConfig {
  int starts = 32;
  int max_iterations = 10000;
  double grad_step = 1e-5;   // central-difference step, radians
  double grad_tol = 1e-8;    // convergence: ||grad|| below this
  double armijo_c = 1e-4;
  double backtrack = 0.5;
  int ring_size = 0;         // 0: evaluate at n = 2p + 2
  double dedup_tol = 1e-6;   // canonical angle distance below which optima merge
  std::optional<std::vector<double>> warm_start;  // replaces start 0, zero-padded
};

struct Optimum {
  std::vector<double> free_params;
  AngleSchedule canonical;
  double f_per_site = 0.0;
};

struct StartOutcome {
  bool converged = false;
  int iterations = 0;
  double f_per_site = 0.0;
};

struct OptimizationResult {
  double best_f_per_site = 0.0;
  double best_r = 0.0;
  std::vector<Optimum> optima;  // distinct under the symmetry group, best first
  int starts = 0;
  int converged = 0;
  std::uint64_t seed = 0;
  OptimizerConfig config;
  std::vector<StartOutcome> start_outcomes;
};

/// Multi-start gradient descent on F/n over the manifold's free parameters,
/// evaluated by the pseudospin reduction at n = 2p + 2 (the smallest ring
/// already showing the size-independent ratio). Start k draws its initial
/// point from a PRNG seeded with (seed, k), so results do not depend on
/// scheduling. Non-convergent starts are reported, not fatal.
OptimizationResult optimize(const ManifoldSpec& spec, const OptimizerConfig& cfg,
                            std::uint64_t seed);

/// Central differences per coordinate; error O(step^2).
std::vector<double> finite_diff_gradient(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& point, double step);

/// For a schedule on M1, the largest |directional derivative| of F along the
/// manifold normals (e_gamma_i + e_beta_{p+1-i})/sqrt(2); all must vanish
/// because the gradient is tangent to the manifold. Throws if the point is
/// not on the manifold (constraints checked mod pi/2 at 1e-12).
double normal_derivative_check(const AngleSchedule& sched);

/// Reduces all angles mod pi/2 into [0, pi/2) and picks the
/// lexicographically smallest representative under the symmetry group
/// generated by the reversal-negation swap (g, b) -> (-b', -g'), the reversal
/// swap (g, b) -> (b', g'), and global negation (primes reverse order).
AngleSchedule canonicalize(const AngleSchedule& sched);

struct LandscapeGrid {
  ManifoldSpec manifold;
  int resolution = 0;
  int n = 0;
  std::vector<double> values;  // F/n, row-major, last axis fastest

  int dims() const noexcept { return manifold.free_count(); }
  double axis_value(int index) const;
  double value_at(const std::vector<int>& coords) const;
};

/// Uniform grid of F/n over [0, pi/2)^dims; refuses dims > 3.
LandscapeGrid landscape_scan(const ManifoldSpec& spec, int resolution, int n);

struct BasinAnalysis {
  std::vector<std::vector<int>> strict_local_minima;  // grid coordinates
  std::vector<std::vector<double>> basin_minima;      // distinct descent endpoints
  std::vector<double> descent_values;                 // final F/n per descent
  double worst_descent_value = 0.0;
};

/// Finds strict local minima of the grid under the 3^d - 1 torus
/// neighborhood, runs a descent from each, and clusters the endpoints
/// (wrap-around metric) into distinct minima.
BasinAnalysis analyze_basins(const LandscapeGrid& grid, const OptimizerConfig& cfg);

}  // namespace qaoa
