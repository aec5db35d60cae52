// End-to-end acceptance suite. Each check prints one pass/fail line; the
// binary exits nonzero if any check fails or overruns its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qaoa/graph.hpp"
#include "qaoa/maxcut_p1.hpp"
#include "qaoa/optimize.hpp"
#include "qaoa/ring.hpp"
#include "qaoa/schedule.hpp"
#include "qaoa/statevector.hpp"

using namespace qaoa;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;

int g_failures = 0;

struct Criterion {
  std::string detail;
  bool ok = true;

  void expect(bool cond, const std::string& why) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += why;
    }
  }
  void note(const std::string& info) {
    if (!detail.empty()) detail += "; ";
    detail += info;
  }
};

void run(int number, const std::string& name, double budget_seconds,
         const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  body(c);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_seconds > 0 && dt > budget_seconds) {
    c.ok = false;
    c.detail += "; exceeded " + std::to_string(budget_seconds) + " s budget";
  }
  std::printf("[%s] %2d. %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", number, name.c_str(), dt,
              c.detail.empty() ? "" : " -- ", c.detail.c_str());
  std::fflush(stdout);
  if (!c.ok) ++g_failures;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (static_cast<double>(rng() >> 11) * 0x1.0p-53) * (hi - lo);
}

AngleSchedule random_ring_schedule(std::mt19937_64& rng, int p) {
  std::vector<double> g(p), b(p);
  for (double& v : g) v = uniform(rng, 0, kHalfPi);
  for (double& v : b) v = uniform(rng, 0, kHalfPi);
  return AngleSchedule::ring(std::move(g), std::move(b));
}

double wrap_gap(double x) {
  double r = x - kHalfPi * std::floor(x / kHalfPi);
  if (r < 0) r += kHalfPi;
  return std::min(r, kHalfPi - r);
}

double orbit_distance(const AngleSchedule& a, const AngleSchedule& b) {
  const int p = a.p();
  const auto dist = [&](const std::vector<double>& g, const std::vector<double>& bt) {
    double worst = 0.0;
    for (int i = 0; i < p; ++i) {
      worst = std::max(worst, wrap_gap(g[i] - b.gammas[i]));
      worst = std::max(worst, wrap_gap(bt[i] - b.betas[i]));
    }
    return worst;
  };
  std::vector<double> grev(a.gammas.rbegin(), a.gammas.rend());
  std::vector<double> brev(a.betas.rbegin(), a.betas.rend());
  std::vector<double> gneg(a.gammas), bneg(a.betas), grevneg(grev), brevneg(brev);
  for (double& v : gneg) v = -v;
  for (double& v : bneg) v = -v;
  for (double& v : grevneg) v = -v;
  for (double& v : brevneg) v = -v;
  return std::min({dist(a.gammas, a.betas), dist(brev, grev), dist(gneg, bneg),
                   dist(brevneg, grevneg)});
}

const std::vector<std::vector<double>> kTableRows = {
    {0.1250},
    {0.2052, 0.1026},
    {0.2268, 0.1888, 0.0918},
    {0.2357, 0.2161, 0.1791, 0.0850},
    {0.2403, 0.2282, 0.2094, 0.1724, 0.0802},
};

}  // namespace

int main() {
  std::printf("acceptance: QAOA MaxCut / ring-of-disagrees suite\n");

  run(1, "ring p=1 optimum from optimizer and 64x64 full scan", 1.0, [](Criterion& c) {
    const OptimizationResult res = optimize(ManifoldSpec{ManifoldKind::Full, 1}, {}, 101);
    c.expect(std::abs(res.best_f_per_site + 0.5) < 1e-9,
             "optimizer best F/n = " + std::to_string(res.best_f_per_site));
    if (!res.optima.empty()) {
      const AngleSchedule reference = AngleSchedule::ring({3 * kPi / 8}, {kPi / 8});
      c.expect(orbit_distance(res.optima.front().canonical, reference) < 1e-6,
               "canonical angles not equivalent to (3pi/8, pi/8)");
      const RingMetrics m = ring_expectation(
          4, expand_manifold(res.optima.front().free_params, ManifoldSpec{ManifoldKind::Full, 1}));
      c.expect(m.r == 0.5 * (1.0 - m.f_per_site), "r must equal (1 - F/n)/2 exactly");
      c.expect(std::abs(m.r - 0.75) < 1e-9, "r = " + std::to_string(m.r));
    } else {
      c.expect(false, "no converged optimum");
    }

    const LandscapeGrid grid = landscape_scan(ManifoldSpec{ManifoldKind::Full, 1}, 64, 4);
    std::size_t argmin = 0;
    for (std::size_t i = 1; i < grid.values.size(); ++i)
      if (grid.values[i] < grid.values[argmin]) argmin = i;
    c.expect(std::abs(grid.values[argmin] + 0.5) < 1e-9,
             "scan minimum " + std::to_string(grid.values[argmin]));
    const int gi = static_cast<int>(argmin / 64), bi = static_cast<int>(argmin % 64);
    c.expect((gi == 48 && bi == 16) || (gi == 16 && bi == 48),
             "scan argmin at (" + std::to_string(gi) + "," + std::to_string(bi) + ")");
  });

  run(2, "optimal-angle table p=1..10 via multi-start M1 descent", 60.0, [](Criterion& c) {
    for (int p = 1; p <= 10; ++p) {
      const OptimizationResult res = optimize(ManifoldSpec{ManifoldKind::M1, p}, {}, 101);
      const double target = -static_cast<double>(p) / (p + 1);
      const double tol = p <= 5 ? 1e-6 : 1e-4;
      c.expect(std::abs(res.best_f_per_site - target) < tol,
               "p=" + std::to_string(p) + " best=" + std::to_string(res.best_f_per_site));
    }
  });

  run(3, "table-row replay through expand_manifold", 5.0, [](Criterion& c) {
    for (std::size_t i = 0; i < kTableRows.size(); ++i) {
      const int p = static_cast<int>(i) + 1;
      std::vector<double> free_params(kTableRows[i]);
      for (double& v : free_params) v *= kPi;
      const AngleSchedule sched = expand_manifold(free_params, ManifoldSpec{ManifoldKind::M1, p});
      const double fps = ring_expectation(2 * p + 2, sched).f_per_site;
      const double target = -static_cast<double>(p) / (p + 1);
      c.expect(std::abs(fps - target) < 1e-4,
               "row p=" + std::to_string(p) + " gives " + std::to_string(fps));
    }
  });

  run(4, "ring oracle equivalence, n in {4..12}, p in {1,2,3}, 50 schedules", 30.0,
      [](Criterion& c) {
        std::mt19937_64 rng(2027);
        double worst = 0.0;
        for (int n : {4, 6, 8, 10, 12})
          for (int p : {1, 2, 3})
            for (int trial = 0; trial < 50; ++trial) {
              const AngleSchedule sched = random_ring_schedule(rng, p);
              const double reduced = ring_expectation(n, sched).f;
              const double oracle = simulate_expectation(Graph::ring(n), sched);
              worst = std::max(worst, std::abs(reduced - oracle));
            }
        c.note("max |pseudospin - statevector| = " + std::to_string(worst));
        c.expect(worst < 1e-9, "oracle gap too large");
      });

  run(5, "level-1 closed form equivalence on 30 random graphs x 10 angle pairs", 60.0,
      [](Criterion& c) {
        std::mt19937_64 rng(2028);
        double worst = 0.0;
        int graphs = 0;
        while (graphs < 30) {
          const int n = 3 + static_cast<int>(rng() % 8);  // up to 10 vertices
          const Graph g = Graph::erdos_renyi(n, 0.5, rng());
          if (g.n_edges() == 0) continue;
          ++graphs;
          for (int trial = 0; trial < 10; ++trial) {
            const double gamma = uniform(rng, -kPi, kPi);
            const double beta = uniform(rng, -kPi, kPi);
            const double analytic = graph_expectation_p1(g, gamma, beta);
            const double oracle =
                simulate_expectation(g, AngleSchedule::maxcut({gamma}, {beta}));
            worst = std::max(worst, std::abs(analytic - oracle));
          }
        }
        c.note("max |analytic - statevector| = " + std::to_string(worst));
        c.expect(worst < 1e-9, "closed form disagrees with the oracle");
      });

  run(6, "triangle-free corollary on K_{3,3} over a 256x256 grid", 60.0, [](Criterion& c) {
    const Graph k33 = Graph::complete_bipartite(3, 3);
    const double target = 0.5 * (1.0 + (1.0 / std::sqrt(3.0)) * (2.0 / 3.0));
    StateVectorSim sim(k33, Convention::MaxCut);
    double best = -1.0;
    int best_i = -1, best_j = -1;
    const int res = 256;
    for (int i = 0; i < res; ++i) {
      const double gamma = i * (kHalfPi / res);
      for (int j = 0; j < res; ++j) {
        const double beta = j * (kHalfPi / res);
        sim.run(AngleSchedule::maxcut({gamma}, {beta}));
        const double value = sim.expectation() / k33.n_edges();
        if (value > best) {
          best = value;
          best_i = i;
          best_j = j;
        }
      }
    }
    c.note("grid max F/|E| = " + std::to_string(best));
    c.expect(std::abs(best - target) < 2e-4, "grid maximum misses the corollary value");
    const int opt_i = static_cast<int>(std::lround(std::atan(1 / std::sqrt(2.0)) / (kHalfPi / res)));
    const int opt_j = static_cast<int>(std::lround((kPi / 8) / (kHalfPi / res)));
    c.expect(std::abs(best_i - opt_i) <= 1 && std::abs(best_j - opt_j) <= 1,
             "maximizing cell (" + std::to_string(best_i) + "," + std::to_string(best_j) +
                 ") not adjacent to (arctan(1/sqrt 2), pi/8) = (" + std::to_string(opt_i) + "," +
                 std::to_string(opt_j) + ")");
  });

  run(7, "size independence and Fourier cutoff, p in {1,2,3}, 20 schedules", 30.0,
      [](Criterion& c) {
        std::mt19937_64 rng(2029);
        for (int p : {1, 2, 3}) {
          for (int trial = 0; trial < 20; ++trial) {
            const AngleSchedule sched = random_ring_schedule(rng, p);
            const double base = ring_expectation(2 * p + 2, sched).f_per_site;
            double spread = 0.0;
            for (int n = 2 * p + 2; n <= 2 * p + 20; n += 2)
              spread = std::max(spread,
                                std::abs(ring_expectation(n, sched).f_per_site - base));
            c.expect(spread < 1e-12, "F/n varies with n by " + std::to_string(spread));

            const int s_max = p + 3;
            const FourierSpectrum spec =
                fourier_spectrum(sched, fourier_default_probe(s_max), s_max);
            for (int s = p + 1; s <= s_max; ++s)
              c.expect(std::abs(spec.coefficients[s]) < 1e-9,
                       "d_" + std::to_string(2 * s) + " = " +
                           std::to_string(spec.coefficients[s]));
          }
        }
      });

  run(8, "symmetry suite and manifold-normal derivatives", 60.0, [](Criterion& c) {
    std::mt19937_64 rng(2030);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int p = 1 + static_cast<int>(rng() % 6);
      const AngleSchedule sched = random_ring_schedule(rng, p);
      const double theta = uniform(rng, 0, kPi);
      const double base = pseudospin_expectation(theta, sched);

      std::vector<double> grev(sched.gammas.rbegin(), sched.gammas.rend());
      std::vector<double> brev(sched.betas.rbegin(), sched.betas.rend());
      std::vector<double> gneg(sched.gammas), bneg(sched.betas);
      for (double& v : gneg) v = -v;
      for (double& v : bneg) v = -v;
      std::vector<double> grevneg(grev), brevneg(brev);
      for (double& v : grevneg) v = -v;
      for (double& v : brevneg) v = -v;

      worst = std::max(worst, std::abs(base - pseudospin_expectation(
                                                  theta, AngleSchedule::ring(brevneg, grevneg))));
      worst = std::max(
          worst, std::abs(base - pseudospin_expectation(theta, AngleSchedule::ring(brev, grev))));
      worst = std::max(
          worst, std::abs(base - pseudospin_expectation(theta, AngleSchedule::ring(gneg, bneg))));

      AngleSchedule shifted = sched;
      const int which = static_cast<int>(rng() % p);
      if (rng() & 1)
        shifted.gammas[which] += kHalfPi;
      else
        shifted.betas[which] += kHalfPi;
      worst = std::max(worst, std::abs(base - pseudospin_expectation(theta, shifted)));
    }
    c.note("max symmetry defect = " + std::to_string(worst));
    c.expect(worst < 1e-12, "symmetry relation violated");

    double worst_normal = 0.0;
    for (int p : {1, 2, 3}) {
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> free_params(p);
        for (double& v : free_params) v = uniform(rng, 0, kHalfPi);
        const AngleSchedule sched =
            expand_manifold(free_params, ManifoldSpec{ManifoldKind::M1, p});
        worst_normal = std::max(worst_normal, normal_derivative_check(sched));
      }
    }
    c.note("max normal derivative = " + std::to_string(worst_normal));
    c.expect(worst_normal < 1e-6, "gradient not tangent to M1");
  });

  run(9, "no-trap reproduction for p=2 in M1", 60.0, [](Criterion& c) {
    OptimizerConfig cfg;
    cfg.starts = 100;
    const OptimizationResult res = optimize(ManifoldSpec{ManifoldKind::M1, 2}, cfg, 404);
    double worst = 0.0;
    for (const StartOutcome& s : res.start_outcomes)
      worst = std::max(worst, std::abs(s.f_per_site + 2.0 / 3.0));
    c.note("worst start deviation = " + std::to_string(worst));
    c.expect(worst < 1e-6, "a descent missed the global value");

    const LandscapeGrid grid = landscape_scan(ManifoldSpec{ManifoldKind::M1, 2}, 100, 6);
    const BasinAnalysis basins = analyze_basins(grid, {});
    c.note(std::to_string(basins.strict_local_minima.size()) + " strict grid minima, " +
           std::to_string(basins.basin_minima.size()) + " basins");
    c.expect(basins.basin_minima.size() == 4, "expected exactly 4 global-minimum basins");
    c.expect(basins.worst_descent_value <= -2.0 / 3.0 + 1e-6,
             "a grid-minimum descent terminated at " +
                 std::to_string(basins.worst_descent_value));
  });

  run(10, "level-2 closed forms vs the pseudospin evaluator, 100 tuples", 10.0,
      [](Criterion& c) {
        std::mt19937_64 rng(2031);
        double worst_closed = 0.0, worst_manifold = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
          const double g1 = uniform(rng, -kPi, kPi), b1 = uniform(rng, -kPi, kPi);
          const double g2 = uniform(rng, -kPi, kPi), b2 = uniform(rng, -kPi, kPi);
          const double closed = ring_p2_closed_form(g1, b1, g2, b2);
          const double reduced =
              ring_expectation(12, AngleSchedule::ring({g1, g2}, {b1, b2})).f_per_site;
          worst_closed = std::max(worst_closed, std::abs(closed - reduced));

          const double manifold = ring_p2_manifold_form(g1, b1);
          const double reduced_m =
              ring_expectation(12, AngleSchedule::ring({g1, -b1}, {b1, -g1})).f_per_site;
          worst_manifold = std::max(worst_manifold, std::abs(manifold - reduced_m));
        }
        c.note("max gaps: closed " + std::to_string(worst_closed) + ", manifold " +
               std::to_string(worst_manifold));
        c.expect(worst_closed < 1e-9, "26-term expansion disagrees");
        c.expect(worst_manifold < 1e-9, "manifold expansion disagrees");
      });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
