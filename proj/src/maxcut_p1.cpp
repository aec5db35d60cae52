#include "qaoa/maxcut_p1.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qaoa {

namespace {

// x^k for k >= 0 with the convention x^0 = 1 (also at x = 0).
double ipow(double x, int k) {
  double r = 1.0;
  for (double b = x; k > 0; k >>= 1, b *= b)
    if (k & 1) r *= b;
  return r;
}

}  // namespace

double edge_expectation_p1(const EdgeLocalEnv& env, double gamma, double beta) {
  if (env.d < 0 || env.e < 0 || env.f < 0 || env.f > std::min(env.d, env.e))
    throw std::invalid_argument("invalid edge environment");
  const double cg = std::cos(gamma);
  const double neighbor_term =
      0.25 * std::sin(4.0 * beta) * std::sin(gamma) * (ipow(cg, env.d) + ipow(cg, env.e));
  const double s2b = std::sin(2.0 * beta);
  const double triangle_term = 0.25 * s2b * s2b * ipow(cg, env.d + env.e - 2 * env.f) *
                               (1.0 - ipow(std::cos(2.0 * gamma), env.f));
  return 0.5 + neighbor_term - triangle_term;
}

double graph_expectation_p1(const Graph& g, double gamma, double beta) {
  double total = 0.0;
  for (const auto& [key, chi] : classify_edges(g))
    total += chi * edge_expectation_p1(EdgeLocalEnv{key.d, key.e, key.f}, gamma, beta);
  return total;
}

double graph_expectation_p1_edgewise(const Graph& g, double gamma, double beta) {
  double total = 0.0;
  for (const auto& [u, v] : g.edges())
    total += edge_expectation_p1(edge_local_env(g, u, v), gamma, beta);
  return total;
}

RegularOptimum regular_triangle_free_optimum(int d) {
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  RegularOptimum opt;
  opt.d = d;
  opt.beta_star = std::numbers::pi / 8.0;
  if (d == 0) {
    // Perfect matching: every edge is cut with certainty at gamma = pi/2.
    opt.gamma_star = std::numbers::pi / 2.0;
    opt.ratio = 1.0;
    return opt;
  }
  opt.gamma_star = std::atan(1.0 / std::sqrt(static_cast<double>(d)));
  opt.ratio = 0.5 * (1.0 + std::pow(d / (d + 1.0), d / 2.0) / std::sqrt(d + 1.0));
  return opt;
}

}  // namespace qaoa
