/* C interface to the overpartition / sums-of-squares library.
 *
 * Every function returns an overpart_status; on failure a message describing
 * the most recent error on the calling thread is available from
 * overpart_last_error(). Strings are copied into caller buffers: pass a
 * buffer and its capacity; *needed (when non-null) receives the required
 * capacity including the terminating NUL, and OVERPART_E_BUFFER_TOO_SMALL is
 * returned when it does not fit. */
#ifndef OVERPART_OVERPART_H
#define OVERPART_OVERPART_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define OVERPART_API __declspec(dllexport)
#else
#  define OVERPART_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum overpart_status {
  OVERPART_OK = 0,
  OVERPART_E_INVALID_ARGUMENT = 1,
  OVERPART_E_NOT_INVERTIBLE = 2,
  OVERPART_E_BUDGET_EXCEEDED = 3,
  /* Two computation routes disagreed: a mathematical or arithmetic failure. */
  OVERPART_E_ROUTE_MISMATCH = 4,
  OVERPART_E_UNKNOWN_CHECK = 5,
  OVERPART_E_BUFFER_TOO_SMALL = 6,
  OVERPART_E_INTERNAL = 7
} overpart_status;

OVERPART_API const char* overpart_last_error(void);
OVERPART_API const char* overpart_status_string(overpart_status status);

/* ---- Series ------------------------------------------------------------ */

typedef struct overpart_series overpart_series;

/* Builds a named series ("phi", "euler", "neg-euler", "overpartition",
 * "hs43-rhs") through q^order. modulus 0 selects exact integers. */
OVERPART_API overpart_status overpart_series_named(const char* name, int64_t order, uint64_t modulus,
                                                   overpart_series** out);

/* Expansion with route control for modular output: with exact != 0 the
 * series is built over the integers and reduced; otherwise it is built
 * modulo `modulus` directly. Either way the other construction is compared
 * on 16 pseudo-randomly chosen indices and OVERPART_E_ROUTE_MISMATCH is
 * returned on disagreement. modulus 0 means exact output and no comparison. */
OVERPART_API overpart_status overpart_series_expand(const char* name, int64_t order, uint64_t modulus, int exact,
                                                    overpart_series** out);

OVERPART_API overpart_status overpart_series_from_json(const char* json, overpart_series** out);
OVERPART_API void overpart_series_free(overpart_series* series);

OVERPART_API int64_t overpart_series_order(const overpart_series* series);
/* 0 for an exact series. */
OVERPART_API uint64_t overpart_series_modulus(const overpart_series* series);
OVERPART_API overpart_status overpart_series_coeff(const overpart_series* series, int64_t index, char* buf,
                                                   size_t capacity, size_t* needed);
OVERPART_API overpart_status overpart_series_to_json(const overpart_series* series, char* buf, size_t capacity,
                                                     size_t* needed);

/* ---- Sums of squares --------------------------------------------------- */

/* r_k(n) by route "series", "formula", "recursion" or "brute-force", written
 * as a decimal string. With cross_check != 0 every other valid route is
 * evaluated too (the lattice route only within its budget) and
 * OVERPART_E_ROUTE_MISMATCH is returned on any disagreement. */
OVERPART_API overpart_status overpart_rk(int k, int64_t n, const char* method, int cross_check, char* buf,
                                         size_t capacity, size_t* needed);

/* ---- Congruence checks ------------------------------------------------- */

OVERPART_API size_t overpart_check_count(void);
OVERPART_API const char* overpart_check_id(size_t index);
OVERPART_API const char* overpart_check_anchor(size_t index);

typedef struct overpart_budget {
  int64_t max_argument;
  int64_t max_prime;
  int64_t max_alpha;
} overpart_budget;

/* 10^4, 23, 3. */
OVERPART_API overpart_budget overpart_budget_default(void);

typedef struct overpart_summary {
  int64_t pass;
  int64_t fail;
  int64_t skipped;
} overpart_summary;

/* Receives one JSON object per call, without a trailing newline. */
typedef void (*overpart_line_sink)(const char* line, void* user);

typedef struct overpart_lab overpart_lab;

OVERPART_API overpart_status overpart_lab_new(const overpart_budget* budget, overpart_lab** out);
OVERPART_API void overpart_lab_free(overpart_lab* lab);

/* Runs the named checks (all when count == 0), streaming a manifest line, one
 * report line per check and a summary line. Unknown names fail with
 * OVERPART_E_UNKNOWN_CHECK before anything runs. A failing check is report
 * content, not an error status: inspect summary->fail. */
OVERPART_API overpart_status overpart_lab_run(overpart_lab* lab, const char* const* check_ids, size_t count,
                                              unsigned jobs, int stop_on_first, overpart_line_sink sink,
                                              void* user, overpart_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* OVERPART_OVERPART_H */
