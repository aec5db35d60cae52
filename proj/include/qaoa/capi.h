/* C interface to the QAOA MaxCut library. All functions that can fail return
 * a qaoa_status; on failure qaoa_last_error() holds a message (thread-local,
 * valid until the next failing call on the same thread). Handles returned
 * through out-parameters are owned by the caller and released with the
 * matching *_free function. */

#ifndef QAOA_CAPI_H
#define QAOA_CAPI_H

#include <stdint.h>

#if defined(_WIN32)
#define QAOA_API __declspec(dllexport)
#else
#define QAOA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qaoa_status {
  QAOA_OK = 0,
  QAOA_ERR_PARSE = 1,    /* malformed graph document */
  QAOA_ERR_DOMAIN = 2,   /* invalid argument or domain error (odd n, cap exceeded, ...) */
  QAOA_ERR_NULLPTR = 3,  /* required pointer argument was NULL */
  QAOA_ERR_INTERNAL = 4
} qaoa_status;

typedef enum qaoa_convention {
  QAOA_CONVENTION_MAXCUT = 0,
  QAOA_CONVENTION_RING = 1
} qaoa_convention;

typedef enum qaoa_manifold {
  QAOA_MANIFOLD_FULL = 0,
  QAOA_MANIFOLD_M1 = 1,
  QAOA_MANIFOLD_M2 = 2
} qaoa_manifold;

typedef struct qaoa_graph_s qaoa_graph;
typedef struct qaoa_opt_result_s qaoa_opt_result;
typedef struct qaoa_grid_s qaoa_grid;

QAOA_API const char* qaoa_version(void);
QAOA_API const char* qaoa_last_error(void);

/* ---- graphs ---- */

QAOA_API qaoa_status qaoa_graph_parse(const char* text, qaoa_graph** out);
QAOA_API qaoa_status qaoa_graph_ring(int n, qaoa_graph** out);
QAOA_API qaoa_status qaoa_graph_complete(int n, qaoa_graph** out);
QAOA_API void qaoa_graph_free(qaoa_graph* g);

QAOA_API int qaoa_graph_vertex_count(const qaoa_graph* g);
QAOA_API int qaoa_graph_edge_count(const qaoa_graph* g);
QAOA_API qaoa_status qaoa_graph_edge(const qaoa_graph* g, int index, int* u, int* v);
QAOA_API qaoa_status qaoa_graph_edge_env(const qaoa_graph* g, int u, int v, int* d, int* e,
                                         int* f);

/* Edge classes (d <= e) with multiplicities. Call with capacity 0 to query
 * the class count; arrays may then be NULL. */
QAOA_API qaoa_status qaoa_graph_classify(const qaoa_graph* g, int capacity, int* out_count,
                                         int* d, int* e, int* f, int* chi);

/* ---- state-vector oracle ---- */

/* qubit_cap <= 0 selects the default (22); the hard cap is 26. */
QAOA_API qaoa_status qaoa_simulate_expectation(const qaoa_graph* g, qaoa_convention conv,
                                               const double* gammas, const double* betas, int p,
                                               int qubit_cap, double* out_f);

/* bits_out/cuts_out must hold `count` entries. Deterministic per seed. */
QAOA_API qaoa_status qaoa_sample_bitstrings(const qaoa_graph* g, qaoa_convention conv,
                                            const double* gammas, const double* betas, int p,
                                            int count, uint64_t seed, int qubit_cap,
                                            uint64_t* bits_out, int* cuts_out);

QAOA_API qaoa_status qaoa_maxcut_bruteforce(const qaoa_graph* g, long long* c_max,
                                            uint64_t* best_bits);

/* ---- level-1 closed forms (MaxCut convention) ---- */

QAOA_API qaoa_status qaoa_edge_expectation_p1(int d, int e, int f, double gamma, double beta,
                                              double* out);
QAOA_API qaoa_status qaoa_graph_expectation_p1(const qaoa_graph* g, double gamma, double beta,
                                               double* out);
QAOA_API qaoa_status qaoa_regular_triangle_free_optimum(int d, double* ratio, double* gamma_star,
                                                        double* beta_star);

/* ---- ring pseudospin reduction (Ring convention) ---- */

QAOA_API qaoa_status qaoa_pseudospin_expectation(double theta, const double* gammas,
                                                 const double* betas, int p, double* out_fk);
QAOA_API qaoa_status qaoa_ring_expectation(int n, const double* gammas, const double* betas,
                                           int p, double* out_f, double* out_f_per_site,
                                           double* out_r);
/* coefficients[s] = d_{2s} for s = 0..s_max; s_max < 0 means s_max = p. */
QAOA_API qaoa_status qaoa_fourier_spectrum(const double* gammas, const double* betas, int p,
                                           int n_probe, int s_max, double* coefficients,
                                           double* max_residual);
QAOA_API qaoa_status qaoa_ring_p2_closed_form(double gamma1, double beta1, double gamma2,
                                              double beta2, double* out_f_per_site);
QAOA_API qaoa_status qaoa_ring_p2_manifold_form(double gamma1, double beta1,
                                                double* out_f_per_site);
QAOA_API void qaoa_convention_map(double tilde_gamma, double tilde_beta, double* gamma,
                                  double* beta);
QAOA_API double qaoa_tilde_value(double f, int n);

/* ---- parameter optimization ---- */

QAOA_API int qaoa_manifold_free_count(qaoa_manifold kind, int p);
QAOA_API qaoa_status qaoa_expand_manifold(qaoa_manifold kind, int p, const double* free_params,
                                          int free_count, double* gammas, double* betas);
QAOA_API qaoa_status qaoa_canonicalize(const double* gammas_in, const double* betas_in, int p,
                                       double* gammas_out, double* betas_out);
QAOA_API qaoa_status qaoa_normal_derivative_check(const double* gammas, const double* betas,
                                                  int p, double* out_max_abs);

typedef struct qaoa_optimizer_config {
  int starts;
  int max_iterations;
  double grad_step;
  double grad_tol;
  double armijo_c;
  double backtrack;
  int ring_size; /* 0: evaluate at n = 2p + 2 */
  double dedup_tol;
} qaoa_optimizer_config;

QAOA_API void qaoa_optimizer_config_init(qaoa_optimizer_config* cfg);

/* warm_start (length warm_len, zero-padded to the free-parameter count)
 * replaces start 0 when non-NULL. cfg NULL means defaults. */
QAOA_API qaoa_status qaoa_optimize(qaoa_manifold kind, int p, const qaoa_optimizer_config* cfg,
                                   uint64_t seed, const double* warm_start, int warm_len,
                                   qaoa_opt_result** out);
QAOA_API void qaoa_opt_result_free(qaoa_opt_result* r);

QAOA_API double qaoa_opt_result_best_f_per_site(const qaoa_opt_result* r);
QAOA_API double qaoa_opt_result_best_r(const qaoa_opt_result* r);
QAOA_API int qaoa_opt_result_starts(const qaoa_opt_result* r);
QAOA_API int qaoa_opt_result_converged(const qaoa_opt_result* r);
QAOA_API int qaoa_opt_result_optimum_count(const qaoa_opt_result* r);
/* free_params has manifold_free_count entries, gammas/betas p entries each;
 * any output pointer may be NULL. */
QAOA_API qaoa_status qaoa_opt_result_optimum(const qaoa_opt_result* r, int index,
                                             double* free_params, double* gammas, double* betas,
                                             double* f_per_site);

/* ---- landscape scans ---- */

QAOA_API qaoa_status qaoa_landscape_scan(qaoa_manifold kind, int p, int resolution, int n,
                                         qaoa_grid** out);
QAOA_API void qaoa_grid_free(qaoa_grid* grid);
QAOA_API int qaoa_grid_dims(const qaoa_grid* grid);
QAOA_API int qaoa_grid_resolution(const qaoa_grid* grid);
QAOA_API int qaoa_grid_ring_size(const qaoa_grid* grid);
QAOA_API long long qaoa_grid_cell_count(const qaoa_grid* grid);
QAOA_API double qaoa_grid_axis_value(const qaoa_grid* grid, int index);
/* Row-major flat index, last axis fastest. */
QAOA_API double qaoa_grid_value(const qaoa_grid* grid, long long flat_index);

#ifdef __cplusplus
}
#endif

#endif /* QAOA_CAPI_H */
