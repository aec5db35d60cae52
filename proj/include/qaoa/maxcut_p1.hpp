#pragma once

#include "qaoa/graph.hpp"

namespace qaoa {

/// Closed-form level-1 expectation <C_uv> of a single cut term for an edge
/// with local environment (d, e, f):
///
///   1/2 + (1/4) sin(4b) sin(g) (cos^d g + cos^e g)
///       - (1/4) sin^2(2b) cos^(d+e-2f)(g) (1 - cos^f(2g))
///
/// with the convention cos^0(x) = 1, so the triangle term vanishes at f = 0.
/// The value lies in [0, 1]. MaxCut convention angles.
double edge_expectation_p1(const EdgeLocalEnv& env, double gamma, double beta);

/// Whole-graph level-1 F(gamma, beta), aggregated as sum over the edge class
/// table of chi * edge_expectation_p1.
double graph_expectation_p1(const Graph& g, double gamma, double beta);

/// Same value via a direct per-edge loop (no class aggregation); exposed for
/// cross-checking the aggregation path.
double graph_expectation_p1_edgewise(const Graph& g, double gamma, double beta);

struct RegularOptimum {
  int d = 0;            // the graph is (d+1)-regular
  double ratio = 0.0;   // F*/|E| = (1 + (d+1)^{-1/2} (d/(d+1))^{d/2}) / 2
  double gamma_star = 0.0;
  double beta_star = 0.0;
};

/// Optimal level-1 angles and approximation ratio for a triangle-free
/// (d+1)-regular graph: gamma* = arctan(1/sqrt(d)) (pi/2 for d = 0),
/// beta* = pi/8.
RegularOptimum regular_triangle_free_optimum(int d);

}  // namespace qaoa
