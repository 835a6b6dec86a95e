/* C API for the rumor source-detection library.
 *
 * All functions return an error code (RUMOR_OK on success) and write results
 * through out-parameters. Objects are opaque handles released with the
 * matching *_free function. Strings returned through char** out-parameters
 * are heap-allocated; release them with rumor_string_free. Error details for
 * the most recent failing call on the current thread are available via
 * rumor_last_error().
 */
#ifndef RUMOR_H
#define RUMOR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    RUMOR_OK = 0,
    RUMOR_E_PARAM = 1,      /* invalid parameters or malformed input */
    RUMOR_E_RESOURCE = 2,   /* budget exceeded (enumeration, tree size, depth cap) */
    RUMOR_E_IO = 3,         /* file errors */
    RUMOR_E_INFEASIBLE = 4, /* observation impossible under every source */
    RUMOR_E_NULLPTR = 5
};

typedef struct rumor_graph rumor_graph;
typedef struct rumor_snapshot rumor_snapshot;
typedef struct rumor_candidates rumor_candidates;

const char* rumor_last_error(void);
void rumor_string_free(char* str);

/* ---- graphs -------------------------------------------------------------- */

int rumor_graph_erdos_renyi(uint32_t n, double avg_degree, uint64_t seed, rumor_graph** out);
int rumor_graph_config_regular(uint32_t n, uint32_t d, uint64_t seed, rumor_graph** out);
int rumor_graph_geometric(uint32_t n, double expected_degree, uint64_t seed, rumor_graph** out);
int rumor_graph_read(const char* path, rumor_graph** out);
int rumor_graph_write(const rumor_graph* g, const char* path);
uint32_t rumor_graph_node_count(const rumor_graph* g);
uint64_t rumor_graph_edge_count(const rumor_graph* g);
uint32_t rumor_graph_degree(const rumor_graph* g, uint32_t v);
void rumor_graph_free(rumor_graph* g);

/* Multi-source BFS hop distances truncated at depth_cap; unreachable nodes
 * get UINT32_MAX. distances must hold node_count entries. */
int rumor_bfs_distances(const rumor_graph* g, const uint32_t* sources, size_t n_sources,
                        uint32_t depth_cap, uint32_t* distances);

/* ---- cascade ------------------------------------------------------------- */

int rumor_cascade_run(const rumor_graph* g, uint32_t source, double p, int rounds, uint64_t seed,
                      rumor_snapshot** out);
uint32_t rumor_snapshot_source(const rumor_snapshot* s);
int rumor_snapshot_rounds(const rumor_snapshot* s);
size_t rumor_snapshot_active_count(const rumor_snapshot* s);
/* buf must hold active_count entries. */
void rumor_snapshot_active(const rumor_snapshot* s, uint32_t* buf);
int rumor_snapshot_json(const rumor_snapshot* s, char** out);
void rumor_snapshot_free(rumor_snapshot* s);

/* ---- inference ----------------------------------------------------------- */

enum {
    RUMOR_CANDIDATES_OK = 0,
    RUMOR_CANDIDATES_EMPTY_ACTIVE_SET = 1
};

int rumor_candidate_set(const rumor_graph* g, const uint32_t* active, size_t n_active,
                        uint32_t depth_cap, rumor_candidates** out);
int rumor_candidates_status(const rumor_candidates* c);
uint32_t rumor_candidates_t_prime(const rumor_candidates* c);
size_t rumor_candidates_count(const rumor_candidates* c);
void rumor_candidates_nodes(const rumor_candidates* c, uint32_t* buf);
int rumor_candidates_json(const rumor_candidates* c, char** out);
void rumor_candidates_free(rumor_candidates* c);

enum {
    RUMOR_RUN_SUCCESS = 0,
    RUMOR_RUN_WRONG = 1,
    RUMOR_RUN_EMPTY = 2
};

/* Classifies a candidate set against the true source and fills the distance
 * statistics (valid only when classification != RUMOR_RUN_EMPTY). */
int rumor_evaluate_run(const rumor_graph* g, uint32_t source, const rumor_candidates* c,
                       int* classification, double* avg_distance, uint32_t* max_distance);

/* ---- likelihood ---------------------------------------------------------- */

int rumor_exact_likelihood(const rumor_graph* g, const uint32_t* x, size_t n_x, uint32_t v,
                           double p, int t, double* out);
int rumor_mc_likelihood(const rumor_graph* g, const uint32_t* x, size_t n_x, uint32_t v, double p,
                        int t, uint64_t runs, uint64_t seed, double* estimate, double* std_error);
/* Normalizes likelihoods into posterior (uniform prior); arrays of length n. */
int rumor_posterior(const double* likelihoods, size_t n, double* posterior_out);

/* ---- analytics ----------------------------------------------------------- */

/* values must hold T+1 entries (x_0..x_T). */
int rumor_extinction_binomial(uint32_t d, double p, size_t T, double* values,
                              double* fixed_point);
int rumor_extinction_poisson(double mu, size_t T, double* values, double* fixed_point);

enum {
    RUMOR_OFFSPRING_BINOMIAL = 0,
    RUMOR_OFFSPRING_POISSON = 1
};
enum {
    RUMOR_ROLE_CLOSEST_CANDIDATE = 0,
    RUMOR_ROLE_OTHER_CANDIDATE = 1
};

int rumor_yv_probability(int offspring_kind, double d_or_lambda, double p, uint32_t k,
                         uint32_t t_star, int role, double* out);
/* *is_log is set when x > 700 and *out then carries log I_0(x). */
int rumor_bessel_i0(double x, double* out, int* is_log);
int rumor_prob_all_children_activated(double lambda, double p, double* out);

/* ---- trees --------------------------------------------------------------- */

enum {
    RUMOR_TREE_DREGULAR = 0,
    RUMOR_TREE_GW_POISSON = 1
};
enum {
    RUMOR_TREE_DIED_OUT = 0,
    RUMOR_TREE_SURVIVED = 1
};

/* One lazy infinite-tree cascade plus the closest-candidate estimator.
 * heuristic_depth is set to UINT32_MAX on heuristic failure (frontier <= 1).
 * node_budget 0 selects the built-in default. */
int rumor_tree_run(int tree_kind, double d_or_lambda, double p, int t, uint64_t seed,
                   uint64_t node_budget, int* status, uint32_t* frontier_size,
                   uint32_t* heuristic_depth, int* success);

/* ---- experiments --------------------------------------------------------- */

/* spec_json schema:
 *   {"generator": {"kind": "erdos_renyi"|"config_regular"|"geometric",
 *                  "n": int, "avg_degree"|"d"|"expected_degree": num},
 *    "p_grid": [num...], "rounds": [int...], "runs_per_cell": int,
 *    "master_seed": int, "fixed_graph": bool, "threads": int}
 * csv_out receives the summary table; runlog_json_out (optional, may be NULL)
 * receives the per-run JSON log. */
int rumor_experiment_run(const char* spec_json, char** csv_out, char** runlog_json_out);

/* spec_json schema:
 *   {"kind": "dregular"|"gw_poisson", "d"|"lambda": num, "p_grid": [num...],
 *    "t": int, "runs": int, "master_seed": int, "node_budget": int,
 *    "threads": int}
 * summary_csv_out receives the per-p table, runs_csv_out (optional) the
 * per-run batch CSV. */
int rumor_tree_sweep(const char* spec_json, char** summary_csv_out, char** runs_csv_out);

/* Reruns one of the built-in experiment presets ("table1", "table2",
 * "table3", "fig3", "fig4") and writes its output files under out_dir. */
int rumor_replicate(const char* preset, uint64_t master_seed, const char* out_dir, int threads);

#ifdef __cplusplus
}
#endif

#endif /* RUMOR_H */
