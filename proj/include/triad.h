/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the triad library: wave/particle/mixedness analysis of
 * d-path interferometer states, coherence-axiom certification, two-path
 * duality relations, and coined quantum walks.
 *
 * Conventions: every fallible call returns triad_status and writes results
 * through out-parameters. On failure the out-parameters are untouched and
 * triad_last_error() returns a one-line diagnostic (thread-local storage).
 * Handles are freed with the matching *_destroy call; strings returned
 * through char** with triad_string_destroy.
 */
#ifndef TRIAD_H
#define TRIAD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define TRIAD_VERSION "0.1.0"

typedef enum triad_status {
  TRIAD_OK = 0,
  TRIAD_ERR_VALIDATION = 1, /* caller input violates a precondition */
  TRIAD_ERR_INTERNAL = 2    /* library invariant breach; never expected */
} triad_status;

typedef enum triad_measure {
  TRIAD_MEASURE_L1_RAW = 0,
  TRIAD_MEASURE_L1 = 1,        /* l1 normalized by d - 1 */
  TRIAD_MEASURE_RELENT_RAW = 2,
  TRIAD_MEASURE_RELENT = 3     /* relative entropy normalized by log2 d */
} triad_measure;

typedef struct triad_state triad_state; /* validated density matrix */
typedef struct triad_table triad_table; /* numeric table with named columns */

const char* triad_version(void);

/* Diagnostic for the most recent failure on this thread. */
const char* triad_last_error(void);

void triad_string_destroy(char* s);

/* ---- states ---------------------------------------------------------- */

/* Row-major re/im parts, each dim*dim doubles; im may be NULL for real. */
triad_status triad_state_create(int dim, const double* re, const double* im, triad_state** out);

/* {"dim","re","im"} density JSON or {"probs","gram_re","gram_im"}
 * interferometer JSON (auto-detected). */
triad_status triad_state_from_json(const char* json_text, triad_state** out);

/* Reduced state of a d-path interferometer: probs has dim entries,
 * gram_re/gram_im are row-major dim*dim (gram_im may be NULL). */
triad_status triad_state_interferometer(int dim, const double* probs, const double* gram_re,
                                        const double* gram_im, triad_state** out);

/* rho = G G^dagger / trace, G a dim-by-rank standard complex Gaussian
 * matrix; deterministic per seed. */
triad_status triad_state_random(int dim, int rank, uint64_t seed, triad_state** out);

int triad_state_dim(const triad_state* s);

/* Copies the matrix out; re/im must each hold dim*dim doubles (im may be
 * NULL to skip the imaginary part). */
triad_status triad_state_get(const triad_state* s, double* re, double* im);

void triad_state_destroy(triad_state* s);

/* ---- analysis -------------------------------------------------------- */

triad_status triad_state_coherence(const triad_state* s, triad_measure m, double* out);

/* out[0..3] = C, D, M, C+D+M; requires a normalized measure. */
triad_status triad_state_triality(const triad_state* s, triad_measure m, double out[4]);

/* JSON {"measure","C","D","M","sum"}; free with triad_string_destroy. */
triad_status triad_state_triality_json(const triad_state* s, triad_measure m, char** out);

/* Fringe visibility over phase_steps analyzer phases; qubit states only. */
triad_status triad_state_visibility(const triad_state* s, int phase_steps, double* out);

/* ---- sweeps and grids ------------------------------------------------ */

/* Two-path l1 triality sweep; columns p,C,D,M. */
triad_status triad_example1(double overlap, int steps, triad_table** out);

/* Two-path relative-entropy triality sweep; columns p,C,D,M,r. */
triad_status triad_example2(double overlap, int steps, triad_table** out);

/* n-by-n (p, overlap) duality grid; columns
 * p,overlap,P_s,Acc,eq16_lhs,eq17_lhs. eq17_lhs is NaN at p = 0 and 1. */
triad_status triad_bagan_grid(int n, triad_table** out);

/* Helstrom success probability for priors (p, 1-p) and pure detector
 * states with |<eta1|eta2>| = overlap. */
triad_status triad_helstrom(double p, double overlap, double* out);

/* Accessible information (bits) maximized over projective analyzers. */
triad_status triad_accessible_info(double p, double overlap, double* out);

/* Coined-walk trace; columns t,C_coin,D_coin,M_coin,C_pos_l1,mean_x,var_x.
 * config_json may be NULL for the Hadamard walk over `steps` steps; when
 * given, it fully defines the walk (including steps). */
triad_status triad_walk_trace(const char* config_json, int steps, triad_measure m,
                              triad_table** out);

/* Coherence-axiom certification for d = 2, 3, 4; JSON array of reports.
 * Free with triad_string_destroy. */
triad_status triad_axioms_json(triad_measure m, int trials, uint64_t seed, char** out);

/* ---- tables ---------------------------------------------------------- */

int triad_table_rows(const triad_table* t);
int triad_table_cols(const triad_table* t);

/* Column name; owned by the table. NULL when col is out of range. */
const char* triad_table_col_name(const triad_table* t, int col);

triad_status triad_table_value(const triad_table* t, int row, int col, double* out);

void triad_table_destroy(triad_table* t);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRIAD_H */
