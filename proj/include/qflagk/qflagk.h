#ifndef QFLAGK_H
#define QFLAGK_H

/* C interface to the qflagk library.
 *
 * Every call returns a qflagk_status; on failure the message is available
 * from qflagk_last_error(ctx) until the next call on the same context.
 * Strings returned through char** outputs are owned by the caller and must
 * be released with qflagk_string_free. A context is not thread-safe; use one
 * per thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QFLAGK_API __declspec(dllexport)
#else
#define QFLAGK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qflagk_status {
  QFLAGK_OK = 0,
  QFLAGK_ERR_INVALID_ARGUMENT = 1,
  QFLAGK_ERR_PARSE = 2,
  QFLAGK_ERR_RANK_MISMATCH = 3,
  QFLAGK_ERR_OUT_OF_RANGE = 4,
  QFLAGK_ERR_SINGULAR = 5,
  QFLAGK_ERR_INEXACT_DIVISION = 6,
  QFLAGK_ERR_MAX_NOT_UNIQUE = 7,
  QFLAGK_ERR_RANK_BOUND = 8,
  QFLAGK_ERR_UNKNOWN_SUITE = 9,
  QFLAGK_ERR_USAGE = 10,
  QFLAGK_ERR_INTERNAL = 11
} qflagk_status;

typedef enum qflagk_format { QFLAGK_FORMAT_JSON = 0, QFLAGK_FORMAT_TEXT = 1 } qflagk_format;

typedef struct qflagk_context qflagk_context;
typedef struct qflagk_poly qflagk_poly;
typedef struct qflagk_schubert_table qflagk_schubert_table;

typedef struct qflagk_config {
  unsigned rank;
  uint64_t seed;
  unsigned trials;
  unsigned jobs;
  unsigned mutate;
  int timing;
} qflagk_config;

QFLAGK_API const char* qflagk_version(void);
QFLAGK_API const char* qflagk_status_name(qflagk_status status);

QFLAGK_API qflagk_status qflagk_context_create(qflagk_context** out);
QFLAGK_API void qflagk_context_destroy(qflagk_context* ctx);
QFLAGK_API const char* qflagk_last_error(const qflagk_context* ctx);
/* Largest rank accepted by rank-bounded calls (default 4). */
QFLAGK_API void qflagk_context_set_max_rank(qflagk_context* ctx, unsigned max_rank);
QFLAGK_API unsigned qflagk_context_max_rank(const qflagk_context* ctx);

QFLAGK_API void qflagk_string_free(char* s);

/* ---- polynomials ------------------------------------------------------ */

/* variables_x = 0: Laurent polynomial in x1..xn; otherwise polynomial in X1..Xn. */
QFLAGK_API qflagk_status qflagk_poly_parse(qflagk_context* ctx, const char* text, unsigned rank, int variables_x,
                                           qflagk_poly** out);
QFLAGK_API void qflagk_poly_destroy(qflagk_poly* p);
QFLAGK_API qflagk_status qflagk_poly_to_string(qflagk_context* ctx, const qflagk_poly* p, char** out);
QFLAGK_API qflagk_status qflagk_poly_to_json(qflagk_context* ctx, const qflagk_poly* p, char** out);
QFLAGK_API qflagk_status qflagk_poly_add(qflagk_context* ctx, const qflagk_poly* a, const qflagk_poly* b,
                                         qflagk_poly** out);
QFLAGK_API qflagk_status qflagk_poly_mul(qflagk_context* ctx, const qflagk_poly* a, const qflagk_poly* b,
                                         qflagk_poly** out);
QFLAGK_API int qflagk_poly_equal(const qflagk_poly* a, const qflagk_poly* b);
/* Divides a Laurent polynomial by prod (x^m - 1) over `factor_count` exponent
 * vectors stored row-major in `exponents`. *divisible is set to 0 or 1; the
 * quotient (or the remainder witness when not divisible) goes to *out. */
QFLAGK_API qflagk_status qflagk_poly_divide_binomials(qflagk_context* ctx, const qflagk_poly* f, const int* exponents,
                                                      size_t factor_count, int* divisible, qflagk_poly** out);
/* Divides an X-polynomial by X_mu - X_nu (1-based indices). */
QFLAGK_API qflagk_status qflagk_poly_divide_x(qflagk_context* ctx, const qflagk_poly* f, unsigned mu, unsigned nu,
                                              int* divisible, qflagk_poly** out);
/* JSON object mapping epsilon vectors to X-polynomials. */
QFLAGK_API qflagk_status qflagk_poly_basis_decompose(qflagk_context* ctx, const qflagk_poly* f, char** json_out);

/* ---- Schubert classes ---------------------------------------------------- */

QFLAGK_API qflagk_status qflagk_schubert_table_create(qflagk_context* ctx, unsigned rank,
                                                      qflagk_schubert_table** out);
QFLAGK_API void qflagk_schubert_table_destroy(qflagk_schubert_table* t);
QFLAGK_API unsigned qflagk_schubert_table_rank(const qflagk_schubert_table* t);
/* window: e.g. "[-2, 1]". */
QFLAGK_API qflagk_status qflagk_schubert_table_class(qflagk_context* ctx, const qflagk_schubert_table* t,
                                                     const char* window, char** json_out);
QFLAGK_API qflagk_status qflagk_schubert_table_json(qflagk_context* ctx, const qflagk_schubert_table* t,
                                                    char** json_out);

/* Maximal-length coset representatives, one per permutation. */
QFLAGK_API qflagk_status qflagk_basis(qflagk_context* ctx, unsigned rank, qflagk_format format, char** out);

/* ---- quaternionic flags --------------------------------------------------- */

/* Input: JSON matrix. Output: {"u", "tau", "b"} after a recomposition check. */
QFLAGK_API qflagk_status qflagk_decompose(qflagk_context* ctx, const char* matrix_json, char** json_out);
/* Output: {"tau": [...]} */
QFLAGK_API qflagk_status qflagk_cell_index(qflagk_context* ctx, const char* matrix_json, char** json_out);

/* ---- membership and suites ------------------------------------------------- */

/* model may be NULL to use the tuple's own "model" field. *member is 0 or 1. */
QFLAGK_API qflagk_status qflagk_check(qflagk_context* ctx, const char* model, const char* tuple_json,
                                      qflagk_format format, int* member, char** report_out);

QFLAGK_API void qflagk_config_default(qflagk_config* config);
/* Newline-separated suite names. */
QFLAGK_API const char* qflagk_suite_names(void);
/* *passed is 1 iff the suite reported no violations. */
QFLAGK_API qflagk_status qflagk_verify(qflagk_context* ctx, const char* suite, const qflagk_config* config,
                                       qflagk_format format, int* passed, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* QFLAGK_H */
