#include "qaoa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "qaoa/ring.hpp"

namespace qaoa {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Reduce into [0, pi/2).
double mod_half_pi(double x) {
  double r = x - kHalfPi * std::floor(x / kHalfPi);
  if (r >= kHalfPi) r -= kHalfPi;
  if (r < 0.0) r += kHalfPi;
  return r;
}

// Distance to the nearest multiple of pi/2.
double wrap_distance(double x) {
  const double r = mod_half_pi(x);
  return std::min(r, kHalfPi - r);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int objective_ring_size(const ManifoldSpec& spec, const OptimizerConfig& cfg) {
  return cfg.ring_size > 0 ? cfg.ring_size : 2 * spec.p + 2;
}

struct Descent {
  std::vector<double> point;
  double value = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Gradient descent with Armijo backtracking on the finite-difference
// gradient. Each line search starts from unit step; strict decrease is
// required so sub-ulp no-op steps cannot be accepted.
Descent descend(const std::function<double(const std::vector<double>&)>& objective,
                std::vector<double> x, const OptimizerConfig& cfg) {
  Descent out;
  double fx = objective(x);
  int iter = 0;
  for (; iter < cfg.max_iterations; ++iter) {
    const std::vector<double> grad = finite_diff_gradient(objective, x, cfg.grad_step);
    double g2 = 0.0;
    for (double g : grad) g2 += g * g;
    const double gnorm = std::sqrt(g2);
    out.grad_norm = gnorm;
    if (gnorm < cfg.grad_tol) {
      out.converged = true;
      break;
    }
    double step = 1.0;
    bool accepted = false;
    std::vector<double> cand(x.size());
    while (step > 1e-18) {
      bool moved = false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        cand[i] = x[i] - step * grad[i];
        moved |= cand[i] != x[i];
      }
      if (!moved) break;
      const double fc = objective(cand);
      if (fc < fx - cfg.armijo_c * step * g2) {
        x.swap(cand);
        fx = fc;
        accepted = true;
        break;
      }
      step *= cfg.backtrack;
    }
    if (!accepted && gnorm < 1e-4) {
      // Terminal basin: value differences fall below 1 ulp before the
      // gradient reaches the tolerance, so back off on the gradient norm
      // instead, which the central differences still resolve.
      step = 1.0;
      while (step > 1e-18) {
        bool moved = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
          cand[i] = x[i] - step * grad[i];
          moved |= cand[i] != x[i];
        }
        if (!moved) break;
        const std::vector<double> gc = finite_diff_gradient(objective, cand, cfg.grad_step);
        double gc2 = 0.0;
        for (double g : gc) gc2 += g * g;
        if (std::sqrt(gc2) < gnorm * (1.0 - 1e-3)) {
          x.swap(cand);
          fx = objective(x);
          accepted = true;
          break;
        }
        step *= cfg.backtrack;
      }
    }
    if (!accepted) break;  // no representable progress at any step length
  }
  out.point = std::move(x);
  out.value = fx;
  out.iterations = iter;
  return out;
}

std::vector<std::vector<double>> schedule_orbit(const std::vector<double>& g,
                                                const std::vector<double>& b) {
  const int p = static_cast<int>(g.size());
  auto reduced = [p](const std::vector<double>& gg, const std::vector<double>& bb) {
    std::vector<double> v(2 * p);
    for (int i = 0; i < p; ++i) v[i] = mod_half_pi(gg[i]);
    for (int i = 0; i < p; ++i) v[p + i] = mod_half_pi(bb[i]);
    return v;
  };
  std::vector<double> grev(g.rbegin(), g.rend());
  std::vector<double> brev(b.rbegin(), b.rend());
  std::vector<double> gneg(g), bneg(b), grevneg(grev), brevneg(brev);
  for (double& x : gneg) x = -x;
  for (double& x : bneg) x = -x;
  for (double& x : grevneg) x = -x;
  for (double& x : brevneg) x = -x;
  return {
      reduced(g, b),             // identity
      reduced(brev, grev),       // reversal swap
      reduced(gneg, bneg),       // global negation
      reduced(brevneg, grevneg)  // reversal-negation swap
  };
}

}  // namespace

AngleSchedule expand_manifold(const std::vector<double>& free_params, const ManifoldSpec& spec) {
  const int p = spec.p;
  if (p < 1) throw std::invalid_argument("level must be >= 1");
  if (static_cast<int>(free_params.size()) != spec.free_count())
    throw std::invalid_argument("expected " + std::to_string(spec.free_count()) +
                                " free parameters, got " + std::to_string(free_params.size()));

  if (spec.kind == ManifoldKind::Full) {
    std::vector<double> g(free_params.begin(), free_params.begin() + p);
    std::vector<double> b(free_params.begin() + p, free_params.end());
    return AngleSchedule::ring(std::move(g), std::move(b));
  }

  // Interleaved prefix (gamma_1, beta_1, gamma_2, beta_2, ...) of length p.
  std::vector<double> g(p, 0.0), b(p, 0.0);
  std::vector<bool> g_set(p, false), b_set(p, false);
  for (int i = 0; i < p; ++i) {
    const int level = i / 2;
    if (i % 2 == 0) {
      g[level] = free_params[i];
      g_set[level] = true;
    } else {
      b[level] = free_params[i];
      b_set[level] = true;
    }
  }
  const double sign = spec.kind == ManifoldKind::M1 ? -1.0 : 1.0;
  for (int i = 0; i < p; ++i) {
    if (!g_set[i]) g[i] = mod_half_pi(sign * b[p - 1 - i]);
    if (!b_set[i]) b[i] = mod_half_pi(sign * g[p - 1 - i]);
  }
  return AngleSchedule::ring(std::move(g), std::move(b));
}

std::vector<double> finite_diff_gradient(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& point, double step) {
  if (step <= 0.0) throw std::invalid_argument("finite-difference step must be positive");
  std::vector<double> grad(point.size());
  std::vector<double> x = point;
  for (std::size_t i = 0; i < point.size(); ++i) {
    x[i] = point[i] + step;
    const double hi = objective(x);
    x[i] = point[i] - step;
    const double lo = objective(x);
    x[i] = point[i];
    grad[i] = (hi - lo) / (2.0 * step);
  }
  return grad;
}

AngleSchedule canonicalize(const AngleSchedule& sched) {
  if (sched.convention != Convention::Ring)
    throw std::invalid_argument("canonicalize expects a Ring-convention schedule");
  const int p = sched.p();
  auto orbit = schedule_orbit(sched.gammas, sched.betas);
  const std::vector<double>* best = &orbit[0];
  for (const auto& cand : orbit)
    if (std::lexicographical_compare(cand.begin(), cand.end(), best->begin(), best->end()))
      best = &cand;
  std::vector<double> g(best->begin(), best->begin() + p);
  std::vector<double> b(best->begin() + p, best->end());
  return AngleSchedule::ring(std::move(g), std::move(b));
}

double normal_derivative_check(const AngleSchedule& sched) {
  if (sched.convention != Convention::Ring)
    throw std::invalid_argument("normal_derivative_check expects a Ring-convention schedule");
  const int p = sched.p();
  if (p < 1) throw std::invalid_argument("level must be >= 1");
  for (int i = 0; i < p; ++i)
    if (wrap_distance(sched.gammas[i] + sched.betas[p - 1 - i]) > 1e-12)
      throw std::invalid_argument("point is not on manifold: gamma_" + std::to_string(i + 1) +
                                  " + beta_" + std::to_string(p - i) + " != 0 (mod pi/2)");

  const int n = 2 * p + 2;
  const auto objective = [&](const std::vector<double>& angles) {
    std::vector<double> g(angles.begin(), angles.begin() + p);
    std::vector<double> b(angles.begin() + p, angles.end());
    return ring_expectation(n, AngleSchedule::ring(std::move(g), std::move(b))).f;
  };
  std::vector<double> point(2 * p);
  std::copy(sched.gammas.begin(), sched.gammas.end(), point.begin());
  std::copy(sched.betas.begin(), sched.betas.end(), point.begin() + p);

  const double step = 1e-5;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  double worst = 0.0;
  std::vector<double> x = point;
  for (int i = 0; i < p; ++i) {
    const int gi = i;
    const int bi = p + (p - 1 - i);
    x[gi] = point[gi] + step * inv_sqrt2;
    x[bi] = point[bi] + step * inv_sqrt2;
    const double hi = objective(x);
    x[gi] = point[gi] - step * inv_sqrt2;
    x[bi] = point[bi] - step * inv_sqrt2;
    const double lo = objective(x);
    x[gi] = point[gi];
    x[bi] = point[bi];
    worst = std::max(worst, std::abs((hi - lo) / (2.0 * step)));
  }
  return worst;
}

OptimizationResult optimize(const ManifoldSpec& spec, const OptimizerConfig& cfg,
                            std::uint64_t seed) {
  if (spec.p < 1) throw std::invalid_argument("level must be >= 1");
  if (cfg.starts < 1) throw std::invalid_argument("need at least one start");
  const int dims = spec.free_count();
  const int n = objective_ring_size(spec, cfg);

  const auto objective = [&](const std::vector<double>& free_params) {
    return ring_expectation(n, expand_manifold(free_params, spec)).f_per_site;
  };

  OptimizationResult result;
  result.seed = seed;
  result.config = cfg;
  result.starts = cfg.starts;

  std::vector<Descent> runs;
  runs.reserve(cfg.starts);
  for (int k = 0; k < cfg.starts; ++k) {
    std::vector<double> x0(dims);
    if (k == 0 && cfg.warm_start) {
      const auto& w = *cfg.warm_start;
      for (int i = 0; i < dims; ++i) x0[i] = i < static_cast<int>(w.size()) ? w[i] : 0.0;
    } else {
      // Per-start stream derived from (seed, k): scheduling-independent.
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(k)};
      std::mt19937_64 rng(seq);
      for (double& v : x0) v = uniform01(rng) * kHalfPi;
    }
    Descent d = descend(objective, std::move(x0), cfg);
    result.start_outcomes.push_back(StartOutcome{d.converged, d.iterations, d.value});
    if (d.converged) ++result.converged;
    runs.push_back(std::move(d));
  }

  // Deduplicate converged runs by canonical schedule.
  std::vector<Optimum> optima;
  for (const Descent& d : runs) {
    if (!d.converged) continue;
    Optimum opt;
    opt.free_params = d.point;
    opt.canonical = canonicalize(expand_manifold(d.point, spec));
    opt.f_per_site = d.value;
    bool merged = false;
    for (Optimum& kept : optima) {
      double dist = 0.0;
      for (int i = 0; i < spec.p; ++i) {
        dist = std::max(dist, std::abs(kept.canonical.gammas[i] - opt.canonical.gammas[i]));
        dist = std::max(dist, std::abs(kept.canonical.betas[i] - opt.canonical.betas[i]));
      }
      if (dist < cfg.dedup_tol) {
        if (opt.f_per_site < kept.f_per_site) kept = opt;
        merged = true;
        break;
      }
    }
    if (!merged) optima.push_back(std::move(opt));
  }
  std::sort(optima.begin(), optima.end(),
            [](const Optimum& a, const Optimum& b) { return a.f_per_site < b.f_per_site; });
  result.optima = std::move(optima);

  if (!result.optima.empty()) {
    result.best_f_per_site = result.optima.front().f_per_site;
  } else {
    double best = 0.0;
    bool have = false;
    for (const Descent& d : runs)
      if (!have || d.value < best) {
        best = d.value;
        have = true;
      }
    result.best_f_per_site = best;
  }
  result.best_r = 0.5 * (1.0 - result.best_f_per_site);
  return result;
}

double LandscapeGrid::axis_value(int index) const {
  return index * (kHalfPi / resolution);
}

double LandscapeGrid::value_at(const std::vector<int>& coords) const {
  if (static_cast<int>(coords.size()) != dims())
    throw std::invalid_argument("coordinate rank mismatch");
  std::size_t flat = 0;
  for (int c : coords) {
    if (c < 0 || c >= resolution) throw std::out_of_range("grid coordinate out of range");
    flat = flat * resolution + static_cast<std::size_t>(c);
  }
  return values[flat];
}

LandscapeGrid landscape_scan(const ManifoldSpec& spec, int resolution, int n) {
  const int dims = spec.free_count();
  if (dims > 3) throw std::invalid_argument("scan refuses grids beyond 3 dimensions");
  if (resolution < 8) throw std::invalid_argument("scan resolution must be >= 8");

  LandscapeGrid grid;
  grid.manifold = spec;
  grid.resolution = resolution;
  grid.n = n > 0 ? n : 2 * spec.p + 2;

  std::size_t cells = 1;
  for (int i = 0; i < dims; ++i) cells *= static_cast<std::size_t>(resolution);
  grid.values.resize(cells);

  std::vector<double> free_params(dims);
  std::vector<int> coords(dims, 0);
  for (std::size_t flat = 0; flat < cells; ++flat) {
    std::size_t rem = flat;
    for (int d = dims - 1; d >= 0; --d) {
      coords[d] = static_cast<int>(rem % resolution);
      rem /= resolution;
    }
    for (int d = 0; d < dims; ++d) free_params[d] = grid.axis_value(coords[d]);
    grid.values[flat] =
        ring_expectation(grid.n, expand_manifold(free_params, spec)).f_per_site;
  }
  return grid;
}

BasinAnalysis analyze_basins(const LandscapeGrid& grid, const OptimizerConfig& cfg) {
  const int dims = grid.dims();
  const int res = grid.resolution;
  const ManifoldSpec spec = grid.manifold;

  const auto objective = [&](const std::vector<double>& free_params) {
    return ring_expectation(grid.n, expand_manifold(free_params, spec)).f_per_site;
  };

  // Strict local minima under the full torus neighborhood.
  BasinAnalysis out;
  std::vector<int> coords(dims, 0), nbr(dims, 0);
  const std::size_t cells = grid.values.size();
  for (std::size_t flat = 0; flat < cells; ++flat) {
    std::size_t rem = flat;
    for (int d = dims - 1; d >= 0; --d) {
      coords[d] = static_cast<int>(rem % res);
      rem /= res;
    }
    const double v = grid.values[flat];
    bool strict_min = true;
    std::vector<int> offset(dims, -1);
    while (strict_min) {
      bool all_zero = true;
      for (int d = 0; d < dims; ++d) {
        nbr[d] = (coords[d] + offset[d] + res) % res;
        if (offset[d] != 0) all_zero = false;
      }
      if (!all_zero && grid.value_at(nbr) <= v) strict_min = false;
      int d = dims - 1;
      for (; d >= 0; --d) {
        if (++offset[d] <= 1) break;
        offset[d] = -1;
      }
      if (d < 0) break;
    }
    if (strict_min) out.strict_local_minima.push_back(coords);
  }

  // Descend from each strict minimum and cluster the endpoints.
  const double cluster_tol = 1e-3;
  out.worst_descent_value = -std::numeric_limits<double>::infinity();
  for (const auto& cell : out.strict_local_minima) {
    std::vector<double> x0(dims);
    for (int d = 0; d < dims; ++d) x0[d] = grid.axis_value(cell[d]);
    Descent d = descend(objective, std::move(x0), cfg);
    out.descent_values.push_back(d.value);
    out.worst_descent_value = std::max(out.worst_descent_value, d.value);

    std::vector<double> endpoint(dims);
    for (int i = 0; i < dims; ++i) endpoint[i] = mod_half_pi(d.point[i]);
    bool merged = false;
    for (const auto& kept : out.basin_minima) {
      double dist = 0.0;
      for (int i = 0; i < dims; ++i) dist = std::max(dist, wrap_distance(endpoint[i] - kept[i]));
      if (dist < cluster_tol) {
        merged = true;
        break;
      }
    }
    if (!merged) out.basin_minima.push_back(std::move(endpoint));
  }
  if (out.descent_values.empty()) out.worst_descent_value = 0.0;
  return out;
}

}  // namespace qaoa
