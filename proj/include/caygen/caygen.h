/*
 * C interface to the caygen library: transposition sets, Cayley graphs of S_n
 * and the theorem-verification harness.
 *
 * Every fallible call returns a caygen_status. On failure a message (and, for
 * parse errors, a 1-based line/column) is available from caygen_last_error*()
 * on the calling thread until the next library call on that thread.
 *
 * Strings returned through char** are heap allocated; release them with
 * caygen_string_free(). Handles are released with their *_free function.
 */
#ifndef CAYGEN_CAYGEN_H
#define CAYGEN_CAYGEN_H

#include <stddef.h>

#if defined(CAYGEN_BUILDING_LIBRARY)
#define CAYGEN_API __attribute__((visibility("default")))
#else
#define CAYGEN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum caygen_status {
  CAYGEN_OK = 0,
  CAYGEN_ERR_INVALID_ARGUMENT = 1,
  CAYGEN_ERR_PARSE = 2,
  CAYGEN_ERR_IO = 3,
  CAYGEN_ERR_CAPACITY = 4,
  CAYGEN_ERR_PRECONDITION = 5,
  CAYGEN_ERR_INCONSISTENT = 6,
  CAYGEN_ERR_INTERNAL = 7
} caygen_status;

typedef struct caygen_tset caygen_tset;
typedef struct caygen_cayley caygen_cayley;

/* verification flags */
#define CAYGEN_VERIFY_EXTENDED_CONNECTIVITY 0x1u /* allow the connectivity claim at n = 5 */
#define CAYGEN_VERIFY_TIMINGS 0x2u               /* fill ms_fast / ms_oracle (otherwise null) */

CAYGEN_API const char* caygen_version(void);
CAYGEN_API const char* caygen_status_name(caygen_status status);
CAYGEN_API const char* caygen_last_error(void);
CAYGEN_API int caygen_last_error_line(void);
CAYGEN_API int caygen_last_error_column(void);
CAYGEN_API void caygen_string_free(char* s);

/* ---- transposition sets ------------------------------------------------ */

/* pairs holds num_pairs (i, j) pairs of 1-based points, flattened. */
CAYGEN_API caygen_status caygen_tset_create(int n, const int* pairs, size_t num_pairs, caygen_tset** out);
/* Edge-list text: '#' comments, "n m", then m lines "i j" with i < j. */
CAYGEN_API caygen_status caygen_tset_parse(const char* text, caygen_tset** out);
/* A "family:<name>:<n>" URI or a path to an edge-list file. */
CAYGEN_API caygen_status caygen_tset_load(const char* source, caygen_tset** out);
/* name is one of path, cycle, star, complete. */
CAYGEN_API caygen_status caygen_tset_family(const char* name, int n, caygen_tset** out);
CAYGEN_API void caygen_tset_free(caygen_tset* s);

CAYGEN_API int caygen_tset_degree(const caygen_tset* s);
CAYGEN_API size_t caygen_tset_size(const caygen_tset* s);
/* Writes 2 * caygen_tset_size(s) ints. */
CAYGEN_API caygen_status caygen_tset_pairs(const caygen_tset* s, int* out_pairs);
/* Serializes in the edge-list format. */
CAYGEN_API caygen_status caygen_tset_format(const caygen_tset* s, char** out_text);
CAYGEN_API caygen_status caygen_tset_is_generating(const caygen_tset* s, int* out);
/* Cayley edge-transitivity decided on T(S); in_range is 0 for n < 5. */
CAYGEN_API caygen_status caygen_fast_edge_transitive(const caygen_tset* s, int* out_verdict, int* out_in_range);

/* ---- Cayley graphs ----------------------------------------------------- */

CAYGEN_API caygen_status caygen_cayley_build(const caygen_tset* s, caygen_cayley** out);
CAYGEN_API void caygen_cayley_free(caygen_cayley* cg);
CAYGEN_API long long caygen_cayley_num_vertices(const caygen_cayley* cg);
CAYGEN_API long long caygen_cayley_num_edges(const caygen_cayley* cg);
/* Writes up to capacity neighbour ids (ascending) and reports the degree in out_count. */
CAYGEN_API caygen_status caygen_cayley_neighbors(const caygen_cayley* cg, long long v, long long* out_ids,
                                                 size_t capacity, size_t* out_count);

/* ---- analyses and reports (JSON documents) ----------------------------- */

CAYGEN_API caygen_status caygen_analyze(const caygen_tset* s, int materialize, char** out_json);
/* One report object. s2 must be non-null exactly for claim "part_a". */
CAYGEN_API caygen_status caygen_verify(const char* claim, const caygen_tset* s, const caygen_tset* s2,
                                       unsigned flags, char** out_json);
/* Array of reports over every connected class on n points (all pairs for part_a). */
CAYGEN_API caygen_status caygen_verify_sweep(const char* claim, int n, unsigned flags, char** out_json);
/* Array of {"n", "m", "s"} objects, one per isomorphism class, 2 <= n <= 7. */
CAYGEN_API caygen_status caygen_enumerate(int n, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CAYGEN_CAYGEN_H */
