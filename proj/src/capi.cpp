#include "qaoa/capi.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "qaoa/errors.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/maxcut_p1.hpp"
#include "qaoa/optimize.hpp"
#include "qaoa/ring.hpp"
#include "qaoa/schedule.hpp"
#include "qaoa/statevector.hpp"
#include "qaoa/version.hpp"

struct qaoa_graph_s {
  qaoa::Graph graph;
};

struct qaoa_opt_result_s {
  qaoa::OptimizationResult result;
  int p = 0;
  int free_count = 0;
};

struct qaoa_grid_s {
  qaoa::LandscapeGrid grid;
};

namespace {

thread_local std::string g_last_error;

qaoa_status fail(qaoa_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs the body and maps exceptions onto status codes.
template <typename Fn>
qaoa_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const qaoa::ParseError& e) {
    return fail(QAOA_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QAOA_ERR_DOMAIN, e.what());
  } catch (const std::out_of_range& e) {
    return fail(QAOA_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QAOA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QAOA_ERR_INTERNAL, e.what());
  }
}

qaoa::Convention convert(qaoa_convention conv) {
  return conv == QAOA_CONVENTION_MAXCUT ? qaoa::Convention::MaxCut : qaoa::Convention::Ring;
}

qaoa::ManifoldKind convert(qaoa_manifold kind) {
  switch (kind) {
    case QAOA_MANIFOLD_FULL:
      return qaoa::ManifoldKind::Full;
    case QAOA_MANIFOLD_M1:
      return qaoa::ManifoldKind::M1;
    default:
      return qaoa::ManifoldKind::M2;
  }
}

qaoa::AngleSchedule make_schedule(qaoa_convention conv, const double* gammas, const double* betas,
                                  int p) {
  if (p < 0) throw std::invalid_argument("level must be >= 0");
  if (p > 0 && (!gammas || !betas)) throw std::invalid_argument("angle arrays are null");
  return qaoa::AngleSchedule(convert(conv), std::vector<double>(gammas, gammas + p),
                             std::vector<double>(betas, betas + p));
}

bool null_arg(const void* ptr) { return ptr == nullptr; }

}  // namespace

extern "C" {

const char* qaoa_version(void) { return QAOA_VERSION_STRING; }

const char* qaoa_last_error(void) { return g_last_error.c_str(); }

qaoa_status qaoa_graph_parse(const char* text, qaoa_graph** out) {
  if (null_arg(text) || null_arg(out)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    *out = new qaoa_graph_s{qaoa::Graph::parse(text)};
    return QAOA_OK;
  });
}

qaoa_status qaoa_graph_ring(int n, qaoa_graph** out) {
  if (null_arg(out)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    *out = new qaoa_graph_s{qaoa::Graph::ring(n)};
    return QAOA_OK;
  });
}

qaoa_status qaoa_graph_complete(int n, qaoa_graph** out) {
  if (null_arg(out)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    *out = new qaoa_graph_s{qaoa::Graph::complete(n)};
    return QAOA_OK;
  });
}

void qaoa_graph_free(qaoa_graph* g) { delete g; }

int qaoa_graph_vertex_count(const qaoa_graph* g) { return g ? g->graph.n_vertices() : 0; }

int qaoa_graph_edge_count(const qaoa_graph* g) { return g ? g->graph.n_edges() : 0; }

qaoa_status qaoa_graph_edge(const qaoa_graph* g, int index, int* u, int* v) {
  if (null_arg(g) || null_arg(u) || null_arg(v)) return fail(QAOA_ERR_NULLPTR, "null argument");
  if (index < 0 || index >= g->graph.n_edges())
    return fail(QAOA_ERR_DOMAIN, "edge index out of range");
  *u = g->graph.edges()[index].first;
  *v = g->graph.edges()[index].second;
  return QAOA_OK;
}

qaoa_status qaoa_graph_edge_env(const qaoa_graph* g, int u, int v, int* d, int* e, int* f) {
  if (null_arg(g) || null_arg(d) || null_arg(e) || null_arg(f))
    return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    const qaoa::EdgeLocalEnv env = qaoa::edge_local_env(g->graph, u, v);
    *d = env.d;
    *e = env.e;
    *f = env.f;
    return QAOA_OK;
  });
}

qaoa_status qaoa_graph_classify(const qaoa_graph* g, int capacity, int* out_count, int* d, int* e,
                                int* f, int* chi) {
  if (null_arg(g) || null_arg(out_count)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    const qaoa::EdgeClassTable table = qaoa::classify_edges(g->graph);
    *out_count = static_cast<int>(table.size());
    if (capacity <= 0) return QAOA_OK;
    if (capacity < *out_count) return fail(QAOA_ERR_DOMAIN, "class buffer too small");
    if (null_arg(d) || null_arg(e) || null_arg(f) || null_arg(chi))
      return fail(QAOA_ERR_NULLPTR, "null class arrays");
    int i = 0;
    for (const auto& [key, mult] : table) {
      d[i] = key.d;
      e[i] = key.e;
      f[i] = key.f;
      chi[i] = mult;
      ++i;
    }
    return QAOA_OK;
  });
}

qaoa_status qaoa_simulate_expectation(const qaoa_graph* g, qaoa_convention conv,
                                      const double* gammas, const double* betas, int p,
                                      int qubit_cap, double* out_f) {
  if (null_arg(g) || null_arg(out_f)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    const int cap = qubit_cap <= 0 ? qaoa::kDefaultQubitCap : qubit_cap;
    *out_f = qaoa::simulate_expectation(g->graph, make_schedule(conv, gammas, betas, p), cap);
    return QAOA_OK;
  });
}

qaoa_status qaoa_sample_bitstrings(const qaoa_graph* g, qaoa_convention conv,
                                   const double* gammas, const double* betas, int p, int count,
                                   uint64_t seed, int qubit_cap, uint64_t* bits_out,
                                   int* cuts_out) {
  if (null_arg(g) || null_arg(bits_out) || null_arg(cuts_out))
    return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    const int cap = qubit_cap <= 0 ? qaoa::kDefaultQubitCap : qubit_cap;
    const auto samples =
        qaoa::sample_bitstrings(g->graph, make_schedule(conv, gammas, betas, p), count, seed, cap);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      bits_out[i] = samples[i].bits;
      cuts_out[i] = samples[i].cut_value;
    }
    return QAOA_OK;
  });
}

qaoa_status qaoa_maxcut_bruteforce(const qaoa_graph* g, long long* c_max, uint64_t* best_bits) {
  if (null_arg(g) || null_arg(c_max)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    const qaoa::MaxCutSolution sol = qaoa::maxcut_bruteforce(g->graph);
    *c_max = sol.c_max;
    if (best_bits) *best_bits = sol.bits;
    return QAOA_OK;
  });
}

qaoa_status qaoa_edge_expectation_p1(int d, int e, int f, double gamma, double beta,
                                     double* out) {
  if (null_arg(out)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    *out = qaoa::edge_expectation_p1(qaoa::EdgeLocalEnv{d, e, f}, gamma, beta);
    return QAOA_OK;
  });
}

qaoa_status qaoa_graph_expectation_p1(const qaoa_graph* g, double gamma, double beta,
                                      double* out) {
  if (null_arg(g) || null_arg(out)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    *out = qaoa::graph_expectation_p1(g->graph, gamma, beta);
    return QAOA_OK;
  });
}

qaoa_status qaoa_regular_triangle_free_optimum(int d, double* ratio, double* gamma_star,
                                               double* beta_star) {
  if (null_arg(ratio) || null_arg(gamma_star) || null_arg(beta_star))
    return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    const qaoa::RegularOptimum opt = qaoa::regular_triangle_free_optimum(d);
    *ratio = opt.ratio;
    *gamma_star = opt.gamma_star;
    *beta_star = opt.beta_star;
    return QAOA_OK;
  });
}

qaoa_status qaoa_pseudospin_expectation(double theta, const double* gammas, const double* betas,
                                        int p, double* out_fk) {
  if (null_arg(out_fk)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    *out_fk = qaoa::pseudospin_expectation(
        theta, make_schedule(QAOA_CONVENTION_RING, gammas, betas, p));
    return QAOA_OK;
  });
}

qaoa_status qaoa_ring_expectation(int n, const double* gammas, const double* betas, int p,
                                  double* out_f, double* out_f_per_site, double* out_r) {
  return guarded([&] {
    const qaoa::RingMetrics m =
        qaoa::ring_expectation(n, make_schedule(QAOA_CONVENTION_RING, gammas, betas, p));
    if (out_f) *out_f = m.f;
    if (out_f_per_site) *out_f_per_site = m.f_per_site;
    if (out_r) *out_r = m.r;
    return QAOA_OK;
  });
}

qaoa_status qaoa_fourier_spectrum(const double* gammas, const double* betas, int p, int n_probe,
                                  int s_max, double* coefficients, double* max_residual) {
  if (null_arg(coefficients)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    const qaoa::FourierSpectrum spec = qaoa::fourier_spectrum(
        make_schedule(QAOA_CONVENTION_RING, gammas, betas, p), n_probe, s_max);
    for (std::size_t s = 0; s < spec.coefficients.size(); ++s)
      coefficients[s] = spec.coefficients[s];
    if (max_residual) *max_residual = spec.max_residual;
    return QAOA_OK;
  });
}

qaoa_status qaoa_ring_p2_closed_form(double gamma1, double beta1, double gamma2, double beta2,
                                     double* out_f_per_site) {
  if (null_arg(out_f_per_site)) return fail(QAOA_ERR_NULLPTR, "null argument");
  *out_f_per_site = qaoa::ring_p2_closed_form(gamma1, beta1, gamma2, beta2);
  return QAOA_OK;
}

qaoa_status qaoa_ring_p2_manifold_form(double gamma1, double beta1, double* out_f_per_site) {
  if (null_arg(out_f_per_site)) return fail(QAOA_ERR_NULLPTR, "null argument");
  *out_f_per_site = qaoa::ring_p2_manifold_form(gamma1, beta1);
  return QAOA_OK;
}

void qaoa_convention_map(double tilde_gamma, double tilde_beta, double* gamma, double* beta) {
  const auto [g, b] = qaoa::convention_map(tilde_gamma, tilde_beta);
  if (gamma) *gamma = g;
  if (beta) *beta = b;
}

double qaoa_tilde_value(double f, int n) { return qaoa::tilde_value(f, n); }

int qaoa_manifold_free_count(qaoa_manifold kind, int p) {
  return qaoa::ManifoldSpec{convert(kind), p}.free_count();
}

qaoa_status qaoa_expand_manifold(qaoa_manifold kind, int p, const double* free_params,
                                 int free_count, double* gammas, double* betas) {
  if (null_arg(free_params) || null_arg(gammas) || null_arg(betas))
    return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    const qaoa::AngleSchedule sched = qaoa::expand_manifold(
        std::vector<double>(free_params, free_params + free_count),
        qaoa::ManifoldSpec{convert(kind), p});
    for (int i = 0; i < p; ++i) {
      gammas[i] = sched.gammas[i];
      betas[i] = sched.betas[i];
    }
    return QAOA_OK;
  });
}

qaoa_status qaoa_canonicalize(const double* gammas_in, const double* betas_in, int p,
                              double* gammas_out, double* betas_out) {
  if (null_arg(gammas_out) || null_arg(betas_out)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    const qaoa::AngleSchedule canon =
        qaoa::canonicalize(make_schedule(QAOA_CONVENTION_RING, gammas_in, betas_in, p));
    for (int i = 0; i < p; ++i) {
      gammas_out[i] = canon.gammas[i];
      betas_out[i] = canon.betas[i];
    }
    return QAOA_OK;
  });
}

qaoa_status qaoa_normal_derivative_check(const double* gammas, const double* betas, int p,
                                         double* out_max_abs) {
  if (null_arg(out_max_abs)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    *out_max_abs = qaoa::normal_derivative_check(
        make_schedule(QAOA_CONVENTION_RING, gammas, betas, p));
    return QAOA_OK;
  });
}

void qaoa_optimizer_config_init(qaoa_optimizer_config* cfg) {
  if (!cfg) return;
  const qaoa::OptimizerConfig defaults;
  cfg->starts = defaults.starts;
  cfg->max_iterations = defaults.max_iterations;
  cfg->grad_step = defaults.grad_step;
  cfg->grad_tol = defaults.grad_tol;
  cfg->armijo_c = defaults.armijo_c;
  cfg->backtrack = defaults.backtrack;
  cfg->ring_size = defaults.ring_size;
  cfg->dedup_tol = defaults.dedup_tol;
}

qaoa_status qaoa_optimize(qaoa_manifold kind, int p, const qaoa_optimizer_config* cfg,
                          uint64_t seed, const double* warm_start, int warm_len,
                          qaoa_opt_result** out) {
  if (null_arg(out)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    qaoa::OptimizerConfig config;
    if (cfg) {
      config.starts = cfg->starts;
      config.max_iterations = cfg->max_iterations;
      config.grad_step = cfg->grad_step;
      config.grad_tol = cfg->grad_tol;
      config.armijo_c = cfg->armijo_c;
      config.backtrack = cfg->backtrack;
      config.ring_size = cfg->ring_size;
      config.dedup_tol = cfg->dedup_tol;
    }
    if (warm_start && warm_len > 0)
      config.warm_start = std::vector<double>(warm_start, warm_start + warm_len);
    const qaoa::ManifoldSpec spec{convert(kind), p};
    auto* handle = new qaoa_opt_result_s;
    handle->result = qaoa::optimize(spec, config, seed);
    handle->p = p;
    handle->free_count = spec.free_count();
    *out = handle;
    return QAOA_OK;
  });
}

void qaoa_opt_result_free(qaoa_opt_result* r) { delete r; }

double qaoa_opt_result_best_f_per_site(const qaoa_opt_result* r) {
  return r ? r->result.best_f_per_site : 0.0;
}

double qaoa_opt_result_best_r(const qaoa_opt_result* r) { return r ? r->result.best_r : 0.0; }

int qaoa_opt_result_starts(const qaoa_opt_result* r) { return r ? r->result.starts : 0; }

int qaoa_opt_result_converged(const qaoa_opt_result* r) { return r ? r->result.converged : 0; }

int qaoa_opt_result_optimum_count(const qaoa_opt_result* r) {
  return r ? static_cast<int>(r->result.optima.size()) : 0;
}

qaoa_status qaoa_opt_result_optimum(const qaoa_opt_result* r, int index, double* free_params,
                                    double* gammas, double* betas, double* f_per_site) {
  if (null_arg(r)) return fail(QAOA_ERR_NULLPTR, "null argument");
  if (index < 0 || index >= static_cast<int>(r->result.optima.size()))
    return fail(QAOA_ERR_DOMAIN, "optimum index out of range");
  const qaoa::Optimum& opt = r->result.optima[index];
  if (free_params)
    for (int i = 0; i < r->free_count; ++i) free_params[i] = opt.free_params[i];
  if (gammas)
    for (int i = 0; i < r->p; ++i) gammas[i] = opt.canonical.gammas[i];
  if (betas)
    for (int i = 0; i < r->p; ++i) betas[i] = opt.canonical.betas[i];
  if (f_per_site) *f_per_site = opt.f_per_site;
  return QAOA_OK;
}

qaoa_status qaoa_landscape_scan(qaoa_manifold kind, int p, int resolution, int n,
                                qaoa_grid** out) {
  if (null_arg(out)) return fail(QAOA_ERR_NULLPTR, "null argument");
  return guarded([&] {
    *out = new qaoa_grid_s{
        qaoa::landscape_scan(qaoa::ManifoldSpec{convert(kind), p}, resolution, n)};
    return QAOA_OK;
  });
}

void qaoa_grid_free(qaoa_grid* grid) { delete grid; }

int qaoa_grid_dims(const qaoa_grid* grid) { return grid ? grid->grid.dims() : 0; }

int qaoa_grid_resolution(const qaoa_grid* grid) { return grid ? grid->grid.resolution : 0; }

int qaoa_grid_ring_size(const qaoa_grid* grid) { return grid ? grid->grid.n : 0; }

long long qaoa_grid_cell_count(const qaoa_grid* grid) {
  return grid ? static_cast<long long>(grid->grid.values.size()) : 0;
}

double qaoa_grid_axis_value(const qaoa_grid* grid, int index) {
  return grid ? grid->grid.axis_value(index) : 0.0;
}

double qaoa_grid_value(const qaoa_grid* grid, long long flat_index) {
  if (!grid || flat_index < 0 ||
      flat_index >= static_cast<long long>(grid->grid.values.size()))
    return 0.0;
  return grid->grid.values[static_cast<std::size_t>(flat_index)];
}

}  // extern "C"
