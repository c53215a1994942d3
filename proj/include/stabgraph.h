/*
 * stabgraph -- stabilizer-state simulation on decorated graphs.
 *
 * C interface to the shared library.  All objects are opaque handles owned
 * by the library; every function that can fail returns an sg_status, with a
 * human-readable message available from sg_last_error() (thread-local, valid
 * until the next failing call on the same thread).
 *
 * A graph handle represents an n-qubit stabilizer state as a simple graph
 * with three per-node decorations: hollow fill (terminal H), self loop
 * (terminal S) and negative sign (terminal Z).  Node indices are 0-based
 * throughout this interface.
 *
 * Handles are not internally synchronized: share a handle across threads
 * only behind your own lock, or clone it.
 */

#ifndef STABGRAPH_H
#define STABGRAPH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
    SG_OK = 0,
    SG_ERR_INDEX_OUT_OF_RANGE,
    SG_ERR_SELF_EDGE,
    SG_ERR_EDGE_REQUIRED,
    SG_ERR_LOOP_REQUIRED,
    SG_ERR_LOOP_FORBIDDEN,
    SG_ERR_PRECONDITION,
    SG_ERR_NOT_SIMPLIFIED,
    SG_ERR_CHOSEN_NOT_ELIGIBLE,
    SG_ERR_IMPOSSIBLE_OUTCOME,
    SG_ERR_TOO_MANY_QUBITS,
    SG_ERR_LENGTH_MISMATCH,
    SG_ERR_SCHEMA,
    SG_ERR_SYNTAX,
    SG_ERR_SEMANTIC,
    SG_ERR_USAGE,
    SG_ERR_INVALID_ARGUMENT,
    SG_ERR_INTERNAL
} sg_status;

const char* sg_status_name(sg_status status);

/* Message for the most recent failure on this thread; never NULL. */
const char* sg_last_error(void);

/* For parser failures (SG_ERR_SYNTAX / SG_ERR_SEMANTIC): 1-based location
 * of the most recent error on this thread, or 0 when not applicable. */
int sg_last_error_line(void);
int sg_last_error_col(void);

typedef struct sg_graph sg_graph;
typedef struct sg_record sg_record;
typedef struct sg_program sg_program;
typedef struct sg_run_result sg_run_result;
typedef struct sg_rng sg_rng;

/* Frees any string returned through a char** out-parameter. */
void sg_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Graphs                                                              */

/* Builds a graph from parts.  `edge_pairs` holds 2*edge_count node indices;
 * duplicate pairs toggle (odd multiplicity means present).  Self pairs are
 * rejected: loops belong in `loops`. */
sg_status sg_graph_create(uint32_t n, const uint32_t* edge_pairs, size_t edge_count,
                          const uint32_t* hollow, size_t hollow_count, const uint32_t* loops,
                          size_t loop_count, const uint32_t* signs, size_t sign_count,
                          sg_graph** out);
sg_graph* sg_graph_clone(const sg_graph* g);
void sg_graph_free(sg_graph* g);

uint32_t sg_graph_node_count(const sg_graph* g);
/* Predicates return 1, 0, or -1 on bad arguments. */
int sg_graph_has_edge(const sg_graph* g, uint32_t j, uint32_t k);
int sg_graph_is_hollow(const sg_graph* g, uint32_t j);
int sg_graph_has_loop(const sg_graph* g, uint32_t j);
int sg_graph_has_sign(const sg_graph* g, uint32_t j);
int sg_graph_equal(const sg_graph* a, const sg_graph* b);

/* Writes up to `cap` neighbors of j into `out` (ascending) and stores the
 * degree in `count`. */
sg_status sg_graph_neighbors(const sg_graph* g, uint32_t j, uint32_t* out, size_t cap,
                             size_t* count);

/* In-place transforms.  The handle's state is replaced; clone first if the
 * previous value is still needed. */
sg_status sg_graph_toggle_edge(sg_graph* g, uint32_t j, uint32_t k);
sg_status sg_graph_apply_gate(sg_graph* g, char letter, uint32_t node); /* 'H','S','Z' */
sg_status sg_graph_apply_word(sg_graph* g, uint32_t node, const char* word);
sg_status sg_graph_apply_e1(sg_graph* g, uint32_t node);
sg_status sg_graph_apply_e2(sg_graph* g, uint32_t j, uint32_t k);
sg_status sg_graph_reduce(sg_graph* g, const uint32_t* targets, size_t target_count);
sg_status sg_graph_disconnect_hollow_measured(sg_graph* g, const uint32_t* measured,
                                              size_t measured_count);

/* Serialization.  JSON schema (0-indexed):
 *   {"n":int,"edges":[[j,k],...],"hollow":[...],"loops":[...],"signs":[...]}
 * with j < k, edges sorted lexicographically and node arrays strictly
 * ascending. */
sg_status sg_graph_to_json(const sg_graph* g, char** out_text);
sg_status sg_graph_from_json(const char* text, sg_graph** out);
sg_status sg_graph_to_dot(const sg_graph* g, char** out_text);

/* ------------------------------------------------------------------ */
/* Measurements                                                        */

sg_rng* sg_rng_create(uint64_t seed);
void sg_rng_free(sg_rng* rng);

/* Measures a Pauli product given as one letter per node ('I','X','Y','Z').
 * `forced_outcome` is +1 or -1 to force, or 0 to sample from `rng` (which
 * may be NULL when forcing).  Forcing the impossible branch of a
 * deterministic measurement fails with SG_ERR_IMPOSSIBLE_OUTCOME.
 * The input graph is not modified. */
sg_status sg_measure_pauli(const sg_graph* g, const char* letters, int forced_outcome,
                           sg_rng* rng, sg_record** out);
sg_status sg_measure_single(const sg_graph* g, uint32_t node, char letter, int forced_outcome,
                            sg_rng* rng, sg_record** out);

int sg_record_is_deterministic(const sg_record* record);
int sg_record_outcome(const sg_record* record); /* +1 or -1 */
double sg_record_probability(const sg_record* record);
/* Chosen node, or -1 for deterministic records. */
int64_t sg_record_chosen_node(const sg_record* record);
int sg_record_parity_b(const sg_record* record);
const char* sg_record_product(const sg_record* record);
/* Post-measurement graph; owned by the record. */
const sg_graph* sg_record_post_graph(const sg_record* record);
/* Basis-change words as JSON: {"basis_changes":[{"node":..,"word":..}],
 * "undo":[...]} with 0-based nodes. */
sg_status sg_record_words_json(const sg_record* record, char** out_text);
void sg_record_free(sg_record* record);

/* ------------------------------------------------------------------ */
/* Circuit programs                                                    */

/* Parses the line-oriented program text (see README for the grammar).
 * On SG_ERR_SYNTAX / SG_ERR_SEMANTIC the location is available from
 * sg_last_error_line() / sg_last_error_col(). */
sg_status sg_program_parse(const char* text, sg_program** out);
sg_status sg_program_print(const sg_program* program, char** out_text);
uint32_t sg_program_qubits(const sg_program* program);
void sg_program_free(sg_program* program);

/* Runs a program.  `forced_outcomes` (entries +1/-1, or NULL) feeds
 * measurements that are random and carry no program-level outcome; the list
 * must be consumed exactly or the run fails with SG_ERR_USAGE. */
sg_status sg_program_run(const sg_program* program, uint64_t seed, const int* forced_outcomes,
                         size_t forced_count, sg_run_result** out);
size_t sg_run_record_count(const sg_run_result* result);
const sg_record* sg_run_record(const sg_run_result* result, size_t index);
const sg_graph* sg_run_final_graph(const sg_run_result* result);
/* Renders the run: mode is "trace", "json" or "dot".  Deterministic: equal
 * runs produce byte-identical text. */
sg_status sg_run_format(const sg_run_result* result, const char* mode, char** out_text);
void sg_run_result_free(sg_run_result* result);

/* ------------------------------------------------------------------ */
/* Verification and benchmarking                                       */

/* Runs the oracle sweep suites (gate rules, equivalence rules, exhaustive
 * and randomized measurement checks).  Writes a JSON report and sets
 * *out_passed to 1/0.  Returns SG_OK even when suites fail; inspect
 * *out_passed. */
sg_status sg_verify(uint32_t max_qubits, uint32_t cases, uint64_t seed, char** out_report,
                    int* out_passed);

/* Random single-qubit measurements on a sparse random graph; letter is
 * 'X','Y','Z' or 0 for random.  Stores the elapsed seconds. */
sg_status sg_bench(uint32_t nodes, uint32_t measurements, uint64_t seed, char letter,
                   double* out_seconds);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STABGRAPH_H */
