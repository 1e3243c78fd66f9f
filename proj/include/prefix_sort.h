#ifndef PREFIX_SORT_H
#define PREFIX_SORT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PS_API __declspec(dllexport)
#else
#define PS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ps_status {
  PS_OK = 0,
  PS_INVALID_ARGUMENT = 1,
  PS_INVALID_PERMUTATION = 2,
  PS_INVALID_MOVE = 3,
  PS_RESOURCE_LIMIT = 4,
  PS_SIZE_MISMATCH = 5,
  PS_PLANNER_EXHAUSTED = 6,
  PS_IO = 7,
  PS_INTERNAL = 8
} ps_status;

typedef enum ps_move_kind {
  PS_BLANK = 0,
  PS_SINGLE = 1,
  PS_DOUBLE = 2,
  PS_SETUP = 3
} ps_move_kind;

typedef struct ps_perm ps_perm;
typedef struct ps_trace ps_trace;
typedef struct ps_table ps_table;

typedef struct ps_move_record {
  int i, j;
  int kind;  /* ps_move_kind */
  int delta;
  int adjacencies_after;
} ps_move_record;

typedef struct ps_epoch_record {
  int first_move, move_count;
  int m;
  int moved, visited, skipped;
  int special;
  int first_skip_interval;
} ps_epoch_record;

/* Message of the last failed call on this thread; never NULL. */
PS_API const char* ps_last_error(void);
PS_API const char* ps_status_name(ps_status s);
/* Strings returned through char** are owned by the caller. */
PS_API void ps_string_free(char* s);

/* Permutations of 0..n-1. */
PS_API ps_status ps_perm_parse(const char* text, ps_perm** out);
PS_API ps_status ps_perm_from_array(const int* values, size_t n, ps_perm** out);
PS_API ps_status ps_perm_random(int n, uint64_t seed, ps_perm** out);
PS_API ps_status ps_perm_reverse(int n, ps_perm** out);
PS_API void ps_perm_free(ps_perm* p);
PS_API size_t ps_perm_size(const ps_perm* p);
PS_API const int* ps_perm_data(const ps_perm* p);
PS_API ps_status ps_perm_format(const ps_perm* p, char** out);
/* alpha(i,j), 1-based, 2 <= i < j <= n+1 */
PS_API ps_status ps_perm_apply(ps_perm* p, int i, int j);
PS_API ps_status ps_perm_adjacencies(const ps_perm* p, int* out);

/* Strategies: sla, gsla-10/3, gsla-3, blocks-2, rn-direct. */
PS_API ps_status ps_sort(const ps_perm* p, const char* strategy, ps_trace** out);
PS_API void ps_trace_free(ps_trace* t);
PS_API size_t ps_trace_move_count(const ps_trace* t);
PS_API size_t ps_trace_epoch_count(const ps_trace* t);
PS_API ps_status ps_trace_move(const ps_trace* t, size_t k, ps_move_record* out);
PS_API ps_status ps_trace_move_lemma(const ps_trace* t, size_t k, char** out);
PS_API ps_status ps_trace_epoch(const ps_trace* t, size_t k, ps_epoch_record* out);
PS_API ps_status ps_trace_text(const ps_trace* t, int with_perm, char** out);
PS_API ps_status ps_trace_csv(const ps_trace* t, char** out);
/* Runs the harness checks; *violations receives the count, *report one line each. */
PS_API ps_status ps_trace_check(const ps_trace* t, uint64_t* violations, char** report);

/* Exact distances by breadth-first search, n <= 10. dir may be NULL for the
   default cache location: PREFIX_SORT_TABLE_DIR, else the user cache directory. */
PS_API ps_status ps_table_load_or_build(int n, const char* dir, ps_table** out);
PS_API ps_status ps_table_build(int n, ps_table** out);
PS_API void ps_table_free(ps_table* t);
PS_API int ps_table_size(const ps_table* t);
PS_API int ps_table_max_distance(const ps_table* t);
PS_API ps_status ps_table_distance(const ps_table* t, const ps_perm* p, int* out);
/* moves holds 2*count ints (i, j pairs) on success */
PS_API ps_status ps_table_geodesic(const ps_table* t, const ps_perm* p, int** moves, size_t* count);
PS_API void ps_ints_free(int* v);

/* strategies is a comma-separated list or NULL for all. table may be NULL. */
PS_API ps_status ps_verify(int n, const char* strategies, const ps_table* table, int structure_checks,
                           uint64_t* violations, char** report);
PS_API ps_status ps_bench(int n, int samples, uint64_t seed, const char* strategies,
                          const ps_table* table, int structure_checks, uint64_t* violations,
                          char** csv, char** summary);
PS_API ps_status ps_bounds(const int* ns, size_t count, char** table);

#ifdef __cplusplus
}
#endif

#endif
