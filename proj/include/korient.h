/* korient: (k-1,1)-orientation of k-uniform hypergraphs.
 *
 * Every function that can fail returns a korient_status; on failure
 * korient_last_error() holds a thread-local message valid until the next
 * failing call on the same thread. Output handles are written only on
 * KORIENT_OK and must be released with the matching *_free function.
 */
#ifndef KORIENT_H
#define KORIENT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  if defined(KORIENT_BUILD)
#    define KORIENT_API __declspec(dllexport)
#  else
#    define KORIENT_API __declspec(dllimport)
#  endif
#else
#  define KORIENT_API __attribute__((visibility("default")))
#endif

typedef enum korient_status {
  KORIENT_OK = 0,
  KORIENT_ERROR_INVALID_ARGUMENT = 1,
  KORIENT_ERROR_PARSE = 2,
  KORIENT_ERROR_IO = 3,
  KORIENT_ERROR_LIMIT = 4, /* instance exceeds an enumeration/size guard */
  KORIENT_ERROR_NO_MEMORY = 5,
  KORIENT_ERROR_INTERNAL = 6
} korient_status;

/* Sentinel for "no edge" in slots and failed-edge queries. */
#define KORIENT_NO_EDGE UINT64_MAX

typedef struct korient_hypergraph korient_hypergraph;
typedef struct korient_orientation korient_orientation;
typedef struct korient_process korient_process;

KORIENT_API const char* korient_status_name(korient_status status);
KORIENT_API const char* korient_last_error(void);
KORIENT_API void korient_string_free(char* text);

/* ---- hypergraphs -------------------------------------------------------- */

/* m distinct edges uniform over all k-subsets of [0, n). */
KORIENT_API korient_status korient_gen_uniform(uint64_t n, uint64_t m,
                                               uint32_t k, uint64_t seed,
                                               korient_hypergraph** out);

/* Each k-subset is an edge independently with probability p. */
KORIENT_API korient_status korient_gen_binomial(uint64_t n, double p,
                                                uint32_t k, uint64_t seed,
                                                korient_hypergraph** out);

/* Text format: header "k n m", then m lines of k ascending vertex ids. */
KORIENT_API korient_status korient_hypergraph_parse(const char* text,
                                                    korient_hypergraph** out);
KORIENT_API korient_status korient_hypergraph_load(const char* path,
                                                   korient_hypergraph** out);
KORIENT_API korient_status korient_hypergraph_save(const korient_hypergraph* h,
                                                   const char* path);
/* Caller frees *out with korient_string_free. */
KORIENT_API korient_status korient_hypergraph_format(const korient_hypergraph* h,
                                                     char** out);
KORIENT_API void korient_hypergraph_free(korient_hypergraph* h);

KORIENT_API uint64_t korient_hypergraph_vertex_count(const korient_hypergraph* h);
KORIENT_API uint64_t korient_hypergraph_edge_count(const korient_hypergraph* h);
KORIENT_API uint32_t korient_hypergraph_arity(const korient_hypergraph* h);
/* vertices_out must hold arity entries. */
KORIENT_API korient_status korient_hypergraph_edge(const korient_hypergraph* h,
                                                   uint64_t edge,
                                                   uint64_t* vertices_out);

/* ---- round-by-round process -------------------------------------------- */

/* Each round draws k vertices independently and uniformly; the round adds an
 * edge only when the draws are pairwise distinct and the k-set is new.
 * rounds == edge count + no-adds at all times. */
KORIENT_API korient_status korient_process_create(uint64_t n, uint32_t k,
                                                  uint64_t seed,
                                                  korient_process** out);
KORIENT_API korient_status korient_process_run(korient_process* process,
                                               uint64_t rounds);
KORIENT_API uint64_t korient_process_rounds(const korient_process* process);
KORIENT_API uint64_t korient_process_no_adds(const korient_process* process);
/* Copy of the accumulated hypergraph. */
KORIENT_API korient_status korient_process_snapshot(const korient_process* process,
                                                    korient_hypergraph** out);
KORIENT_API void korient_process_free(korient_process* process);

/* ---- insertion walk ----------------------------------------------------- */

/* Inserts all edges in id order with the displacement walk, assigning each
 * edge to k-1 of its vertices, at most one edge per vertex. On an infeasible
 * instance the result reports the first rejected edge; earlier edges stay
 * placed. audit != 0 enables structural self-checks (failures surface as
 * KORIENT_ERROR_INTERNAL). */
KORIENT_API korient_status korient_orient(const korient_hypergraph* h,
                                          int audit,
                                          korient_orientation** out);
KORIENT_API int korient_orientation_success(const korient_orientation* o);
KORIENT_API uint64_t korient_orientation_while_evals(const korient_orientation* o);
KORIENT_API uint64_t korient_orientation_edges_inserted(const korient_orientation* o);
/* First rejected edge id, or KORIENT_NO_EDGE on success. */
KORIENT_API uint64_t korient_orientation_failed_edge(const korient_orientation* o);
/* Edge oriented toward `vertex`, or KORIENT_NO_EDGE. */
KORIENT_API uint64_t korient_orientation_slot(const korient_orientation* o,
                                              uint64_t vertex);
KORIENT_API double korient_orientation_susceptibility(const korient_orientation* o);
KORIENT_API korient_status korient_orientation_components(
    const korient_orientation* o, uint64_t* hypertrees, uint64_t* unicyclic,
    uint64_t* complex_count, uint64_t* max_size);
/* Checks the inserted edges hold exactly k-1 slots each and everything else
 * is empty. *ok is set to 1/0; on violations *diagnostics (if non-NULL)
 * receives newline-separated "VIOLATION <kind> <vertex> <edge>" lines (free
 * with korient_string_free); clean tables set it to NULL. */
KORIENT_API korient_status korient_orientation_verify(
    const korient_hypergraph* h, const korient_orientation* o, int* ok,
    char** diagnostics);
KORIENT_API void korient_orientation_free(korient_orientation* o);

/* ---- exact feasibility oracles ------------------------------------------ */

/* (d, b)-orientation: each edge assigned to d of its vertices, no vertex
 * assigned more than b edges. Decided exactly by max-flow. */
KORIENT_API korient_status korient_feasible_flow(const korient_hypergraph* h,
                                                 uint32_t d, uint32_t b,
                                                 int* feasible);
/* witness must hold edge_count * d entries; written (ascending d vertices
 * per edge, edge-major) only when feasible. */
KORIENT_API korient_status korient_feasible_witness(const korient_hypergraph* h,
                                                    uint32_t d, uint32_t b,
                                                    int* feasible,
                                                    uint64_t* witness);
/* Exhaustive search; KORIENT_ERROR_LIMIT unless C(k,d)^m <= 10^6. */
KORIENT_API korient_status korient_brute_force(const korient_hypergraph* h,
                                               uint32_t d, uint32_t b,
                                               int* feasible);
/* Subset capacity check; KORIENT_ERROR_LIMIT unless 2^m <= 10^6. */
KORIENT_API korient_status korient_capacity_criterion(const korient_hypergraph* h,
                                                      uint32_t d, uint32_t b,
                                                      int* feasible);

/* ---- reference curves ---------------------------------------------------- */

typedef struct korient_reference {
  double x;                     /* susceptibility curve at (1-eps)/(k(k-1)) */
  double f;                     /* cubed curve (error-term growth) */
  double delta;                 /* concentration margin */
  double susceptibility_bound;  /* high-probability susceptibility ceiling */
  double iteration_bound;       /* ceiling on total walk iterations */
} korient_reference;

/* eps in (0, 1/2]; logs are natural. */
KORIENT_API korient_status korient_reference_at(uint64_t n, uint32_t k,
                                                double eps,
                                                korient_reference* out);

/* ---- experiment harness -------------------------------------------------- */

typedef enum korient_model {
  KORIENT_MODEL_UNIFORM = 0,
  KORIENT_MODEL_BINOMIAL = 1,
  KORIENT_MODEL_PROCESS = 2
} korient_model;

/* Density c maps to m = round(c n / (k(k-1))) edges (c = 1 is the
 * orientability threshold), or for the binomial model to edge probability
 * c (k-2)! / n^(k-1). Explicit edge counts may be given instead. */
typedef struct korient_sweep_config {
  uint32_t k;
  uint64_t n;
  const double* densities;
  size_t density_count;
  const uint64_t* edge_counts;
  size_t edge_count_count;
  uint32_t trials;
  uint64_t master_seed;
  korient_model model;
  int include_timing; /* 0 zeroes wall_ns so reruns are byte-identical */
  int audit;
} korient_sweep_config;

/* Writes one CSV row per trial:
 * k,n,m,model,seed,trial,success,while_evals,susceptibility,max_component,
 * hypertrees,unicyclic,complex,wall_ns */
KORIENT_API korient_status korient_run_sweep(const korient_sweep_config* config,
                                             const char* csv_path);

/* Susceptibility trace of the round process, checkpointed every max(1, n/100)
 * rounds up to (1-eps) n / (k(k-1)) rounds. CSV columns:
 * k,n,eps,trial,t,theta,chi,x_theta */
KORIENT_API korient_status korient_run_trace(uint32_t k, uint64_t n, double eps,
                                             uint32_t trials,
                                             uint64_t master_seed,
                                             const char* csv_path);

#ifdef __cplusplus
}
#endif

#endif /* KORIENT_H */
