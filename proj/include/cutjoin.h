/* C API for the cutjoin engine: exact cut-and-join operator calculus on
 * symmetric functions, symmetric-group class algebras, Gaussian
 * beta-ensemble constraints, Jack bases, and Hilbert-scheme fixed-point
 * transport.
 *
 * Conventions:
 *   - every object is an opaque handle, freed by the matching *_free call;
 *   - functions return CJ_OK (0) on success and a nonzero code otherwise;
 *     cj_last_error() describes the most recent failure on this thread;
 *   - strings returned through char** are heap-allocated; release them
 *     with cj_string_free.
 *
 * Rationals travel as "num/den" strings so exactness survives the ABI.
 */

#ifndef CUTJOIN_H
#define CUTJOIN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cj_status {
    CJ_OK = 0,
    CJ_EINVAL = 1, /* malformed input or unknown name */
    CJ_EDOMAIN = 2, /* parameter outside a documented cap */
    CJ_EINTERNAL = 3
} cj_status;

typedef struct cj_symfun cj_symfun;
typedef struct cj_operator cj_operator;

/* Optional operator parameters; zero-initialize and set what applies.
 * Rational-valued fields are "num/den" strings; NULL means the default. */
typedef struct cj_op_params {
    const char* beta;  /* default "1" */
    const char* n_rat; /* ensemble size N, default "0" */
    int index;         /* n for Ln / Wn */
    int shifted;       /* Ln only: include Gaussian + zero-mode terms */
    int window;        /* validity window for commutator-built operators */
    const char* alpha; /* jack basis parameter */
    const char* eps1;  /* equivariant weights for the fixed-point basis */
    const char* eps2;
} cj_op_params;

const char* cj_version(void);
const char* cj_last_error(void);
void cj_string_free(char* s);

/* --- symmetric functions ------------------------------------------------ */

/* Grammar: "3/2*p[2,1] + p[4] - v[1,1]" (v[...] = p[...]/z). */
cj_status cj_symfun_parse(const char* text, cj_symfun** out);
cj_status cj_symfun_format(const cj_symfun* f, int v_coords, char** out);
cj_status cj_symfun_to_json(const cj_symfun* f, char** out);
void cj_symfun_free(cj_symfun* f);

/* --- operators ----------------------------------------------------------- */

/* Names: W2, C, J, D, E, E1, W0beta, Ln, Wn. */
cj_status cj_op_create(const char* name, const cj_op_params* params, cj_operator** out);
cj_status cj_op_apply(const cj_operator* op, const cj_symfun* f, cj_symfun** out);
/* Serialized term list of the operator instantiated at `degree`. */
cj_status cj_op_terms_json(const cj_operator* op, int degree, char** out);
void cj_op_free(cj_operator* op);

/* --- emitters ------------------------------------------------------------ */

/* basis: "p", "v", "jack" (needs alpha), "fixed" (needs eps1, eps2);
 * format: "json" or "csv". */
cj_status cj_matrix(const char* op_name, const cj_op_params* params, int n, const char* basis,
                    const char* format, char** out);

/* Rim-hook cut/join move graph of W_[2]; format "json" or "dot". */
cj_status cj_graph(int n, const char* format, char** out);

/* W^(n) term list with its degree-shift check, valid on the window. */
cj_status cj_hierarchy(int n, int window, char** out);

/* Gaussian beta-ensemble moment table up to max_weight.
 * params_json: {"N": int, "beta": int, "d": int} */
cj_status cj_moments(const char* params_json, char** out);

/* Equivariant weight table (tangent, tautological, Euler) for all fixed
 * points of size n at rational (eps1, eps2). */
cj_status cj_weights(int n, const char* eps1, const char* eps2, char** out);

/* --- verification suites -------------------------------------------------- */

/* suite: cutjoin | ladder | jm | virasoro | w0constraint | jack |
 *        heisenberg | hurwitz | hierarchy.
 * params_json: suite-specific keys (JSON object, may be "{}" or NULL).
 * *passed is 1 when every check in the suite passed. */
cj_status cj_verify(const char* suite, const char* params_json, char** report_json, int* passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CUTJOIN_H */
