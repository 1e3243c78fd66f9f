#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "prefix_sort.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);   \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static void test_perm(void) {
  ps_perm* p = NULL;
  EXPECT(ps_perm_parse("2 5 4 3 7 1 6 0", &p) == PS_OK);
  EXPECT(ps_perm_size(p) == 8);
  EXPECT(ps_perm_apply(p, 4, 7) == PS_OK);
  const int want[] = {3, 7, 1, 2, 5, 4, 6, 0};
  EXPECT(memcmp(ps_perm_data(p), want, sizeof want) == 0);
  char* s = NULL;
  EXPECT(ps_perm_format(p, &s) == PS_OK);
  EXPECT(strcmp(s, "3 7 1 2 5 4 6 0") == 0);
  ps_string_free(s);

  EXPECT(ps_perm_apply(p, 1, 3) == PS_INVALID_MOVE);
  EXPECT(strstr(ps_last_error(), "2 <= i") != NULL);
  EXPECT(ps_perm_apply(p, 2, 10) == PS_INVALID_MOVE);
  ps_perm_free(p);

  ps_perm* q = NULL;
  EXPECT(ps_perm_parse("0 0 1", &q) == PS_INVALID_PERMUTATION);
  EXPECT(q == NULL);
  EXPECT(strlen(ps_last_error()) > 0);
  EXPECT(ps_perm_parse(NULL, &q) == PS_INVALID_ARGUMENT);
  const int bad[] = {0, 2};
  EXPECT(ps_perm_from_array(bad, 2, &q) == PS_INVALID_PERMUTATION);
  EXPECT(strcmp(ps_status_name(PS_SIZE_MISMATCH), "size-mismatch") == 0);

  int adj = -1;
  EXPECT(ps_perm_reverse(5, &q) == PS_OK);
  EXPECT(ps_perm_adjacencies(q, &adj) == PS_OK);
  EXPECT(adj == 0);
  ps_perm_free(q);
  ps_perm_free(NULL);
}

static void test_sort(void) {
  ps_perm* p = NULL;
  ps_trace* t = NULL;
  EXPECT(ps_perm_reverse(16, &p) == PS_OK);
  EXPECT(ps_sort(p, "rn-direct", &t) == PS_OK);
  EXPECT(ps_trace_move_count(t) == 12);
  ps_trace_free(t);

  EXPECT(ps_sort(p, "blocks-2", &t) == PS_OK);
  size_t moves = ps_trace_move_count(t);
  EXPECT(moves <= 15);
  int adj = 0;
  for (size_t k = 0; k < moves; ++k) {
    ps_move_record r;
    EXPECT(ps_trace_move(t, k, &r) == PS_OK);
    EXPECT(ps_perm_apply(p, r.i, r.j) == PS_OK);
    EXPECT(ps_perm_adjacencies(p, &adj) == PS_OK);
    EXPECT(adj == r.adjacencies_after);
  }
  EXPECT(adj == 15);
  EXPECT(ps_perm_data(p)[0] == 0);
  ps_move_record r;
  EXPECT(ps_trace_move(t, moves, &r) == PS_INVALID_ARGUMENT);
  size_t total = 0;
  for (size_t k = 0; k < ps_trace_epoch_count(t); ++k) {
    ps_epoch_record e;
    EXPECT(ps_trace_epoch(t, k, &e) == PS_OK);
    EXPECT(e.skipped == e.moved - e.visited);
    total += (size_t)e.move_count;
  }
  EXPECT(total == moves);

  uint64_t v = 99;
  char* report = NULL;
  EXPECT(ps_trace_check(t, &v, &report) == PS_OK);
  ps_string_free(report);
  char* csv = NULL;
  EXPECT(ps_trace_csv(t, &csv) == PS_OK);
  EXPECT(csv && strchr(csv, '\n') != NULL);
  ps_string_free(csv);
  ps_trace_free(t);

  EXPECT(ps_sort(p, "bogus", &t) == PS_INVALID_ARGUMENT);
  ps_perm_free(p);
}

static void test_table(void) {
  ps_table* tb = NULL;
  ps_perm* p = NULL;
  EXPECT(ps_table_build(11, &tb) == PS_RESOURCE_LIMIT);
  EXPECT(ps_table_build(6, &tb) == PS_OK);
  EXPECT(ps_table_size(tb) == 6);
  EXPECT(ps_perm_reverse(6, &p) == PS_OK);
  int d = -1;
  EXPECT(ps_table_distance(tb, p, &d) == PS_OK);
  EXPECT(d > 0 && d <= ps_table_max_distance(tb));
  int* g = NULL;
  size_t count = 0;
  EXPECT(ps_table_geodesic(tb, p, &g, &count) == PS_OK);
  EXPECT((int)count == d);
  for (size_t k = 0; k < count; ++k) EXPECT(ps_perm_apply(p, g[2 * k], g[2 * k + 1]) == PS_OK);
  for (int k = 0; k < 6; ++k) EXPECT(ps_perm_data(p)[k] == k);
  ps_ints_free(g);
  ps_perm_free(p);

  EXPECT(ps_perm_reverse(5, &p) == PS_OK);
  EXPECT(ps_table_distance(tb, p, &d) == PS_SIZE_MISMATCH);
  ps_perm_free(p);

  uint64_t v = 99;
  char* report = NULL;
  EXPECT(ps_verify(6, "blocks-2,gsla-3", tb, 1, &v, &report) == PS_OK);
  EXPECT(v == 0);
  ps_string_free(report);
  ps_table_free(tb);
}

static void test_harness(void) {
  uint64_t v = 99;
  char* csv = NULL;
  char* summary = NULL;
  EXPECT(ps_bench(40, 5, 3, "blocks-2", NULL, 1, &v, &csv, &summary) == PS_OK);
  EXPECT(v == 0);
  EXPECT(strncmp(csv, "strategy,n,seed,", 16) == 0);
  ps_string_free(csv);
  ps_string_free(summary);
  EXPECT(ps_bench(40, 0, 3, NULL, NULL, 1, &v, NULL, NULL) == PS_INVALID_ARGUMENT);

  const int ns[] = {1024};
  char* table = NULL;
  EXPECT(ps_bounds(ns, 1, &table) == PS_OK);
  EXPECT(strstr(table, "1014.0000") != NULL);
  ps_string_free(table);
}

int main(void) {
  test_perm();
  test_sort();
  test_table();
  test_harness();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  puts("capi_test: ok");
  return 0;
}
