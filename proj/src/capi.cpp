#include "prefix_sort.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "prefix_sort/harness.hpp"

using namespace prefix_sort;

struct ps_perm {
  Perm p;
};
struct ps_trace {
  SortTrace t;
  Strategy s;
};
struct ps_table {
  DistanceTable t;
};

namespace {

thread_local std::string g_error;

ps_status fail(ps_status s, const std::string& msg) {
  g_error = msg;
  return s;
}

template <class F>
ps_status guard(F&& f) {
  try {
    f();
    g_error.clear();
    return PS_OK;
  } catch (const Error& e) {
    return fail(static_cast<ps_status>(e.status()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PS_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(PS_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* c = static_cast<char*>(std::malloc(s.size() + 1));
  if (!c) throw std::bad_alloc();
  std::memcpy(c, s.c_str(), s.size() + 1);
  return c;
}

void need(const void* p, const char* what) {
  if (!p) throw Error(Status::invalid_argument, std::string(what) + " is NULL");
}

std::vector<Strategy> parse_strategies(const char* list) {
  if (!list || !*list) return all_strategies();
  std::vector<Strategy> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto s = parse_strategy(item);
    if (!s) throw Error(Status::invalid_argument, "unknown strategy " + item);
    out.push_back(*s);
  }
  if (out.empty()) throw Error(Status::invalid_argument, "no strategies given");
  return out;
}

ps_status make_perm(Perm p, ps_perm** out) {
  return guard([&] {
    need(out, "out");
    validate(p);
    *out = new ps_perm{std::move(p)};
  });
}

}  // namespace

extern "C" {

const char* ps_last_error(void) { return g_error.c_str(); }

const char* ps_status_name(ps_status s) {
  switch (s) {
    case PS_OK: return "ok";
    case PS_INVALID_ARGUMENT: return "invalid-argument";
    case PS_INVALID_PERMUTATION: return "invalid-permutation";
    case PS_INVALID_MOVE: return "invalid-move";
    case PS_RESOURCE_LIMIT: return "resource-limit";
    case PS_SIZE_MISMATCH: return "size-mismatch";
    case PS_PLANNER_EXHAUSTED: return "planner-exhausted";
    case PS_IO: return "io";
    case PS_INTERNAL: return "internal";
  }
  return "unknown";
}

void ps_string_free(char* s) { std::free(s); }
void ps_ints_free(int* v) { std::free(v); }

ps_status ps_perm_parse(const char* text, ps_perm** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new ps_perm{parse_perm(text)};
  });
}

ps_status ps_perm_from_array(const int* values, size_t n, ps_perm** out) {
  if (!values && n) return fail(PS_INVALID_ARGUMENT, "values is NULL");
  return make_perm(Perm(values, values + n), out);
}

ps_status ps_perm_random(int n, uint64_t seed, ps_perm** out) {
  if (n < 1) return fail(PS_INVALID_ARGUMENT, "n must be positive");
  return guard([&] {
    need(out, "out");
    *out = new ps_perm{random_perm(n, seed)};
  });
}

ps_status ps_perm_reverse(int n, ps_perm** out) {
  if (n < 1) return fail(PS_INVALID_ARGUMENT, "n must be positive");
  return guard([&] {
    need(out, "out");
    *out = new ps_perm{reverse_perm(n)};
  });
}

void ps_perm_free(ps_perm* p) { delete p; }
size_t ps_perm_size(const ps_perm* p) { return p ? p->p.size() : 0; }
const int* ps_perm_data(const ps_perm* p) { return p ? p->p.data() : nullptr; }

ps_status ps_perm_format(const ps_perm* p, char** out) {
  return guard([&] {
    need(p, "perm");
    need(out, "out");
    *out = dup(format_perm(p->p));
  });
}

ps_status ps_perm_apply(ps_perm* p, int i, int j) {
  return guard([&] {
    need(p, "perm");
    apply_move_inplace(p->p, {i, j});
  });
}

ps_status ps_perm_adjacencies(const ps_perm* p, int* out) {
  return guard([&] {
    need(p, "perm");
    need(out, "out");
    *out = adjacency_count(p->p);
  });
}

ps_status ps_sort(const ps_perm* p, const char* strategy, ps_trace** out) {
  return guard([&] {
    need(p, "perm");
    need(strategy, "strategy");
    need(out, "out");
    auto s = parse_strategy(strategy);
    if (!s) throw Error(Status::invalid_argument, std::string("unknown strategy ") + strategy);
    *out = new ps_trace{run_sort(p->p, *s), *s};
  });
}

void ps_trace_free(ps_trace* t) { delete t; }
size_t ps_trace_move_count(const ps_trace* t) { return t ? t->t.moves.size() : 0; }
size_t ps_trace_epoch_count(const ps_trace* t) { return t ? t->t.epochs.size() : 0; }

ps_status ps_trace_move(const ps_trace* t, size_t k, ps_move_record* out) {
  return guard([&] {
    need(t, "trace");
    need(out, "out");
    if (k >= t->t.moves.size()) throw Error(Status::invalid_argument, "move index out of range");
    const MoveRecord& r = t->t.moves[k];
    *out = {r.move.i, r.move.j, static_cast<int>(r.kind), r.delta, r.adjacencies_after};
  });
}

ps_status ps_trace_move_lemma(const ps_trace* t, size_t k, char** out) {
  return guard([&] {
    need(t, "trace");
    need(out, "out");
    if (k >= t->t.moves.size()) throw Error(Status::invalid_argument, "move index out of range");
    *out = dup(t->t.moves[k].lemma_id);
  });
}

ps_status ps_trace_epoch(const ps_trace* t, size_t k, ps_epoch_record* out) {
  return guard([&] {
    need(t, "trace");
    need(out, "out");
    if (k >= t->t.epochs.size()) throw Error(Status::invalid_argument, "epoch index out of range");
    const EpochRecord& e = t->t.epochs[k];
    *out = {e.first_move, e.move_count, e.m, e.moved, e.visited, e.skipped, e.special ? 1 : 0,
            e.first_skip_interval};
  });
}

ps_status ps_trace_text(const ps_trace* t, int with_perm, char** out) {
  return guard([&] {
    need(t, "trace");
    need(out, "out");
    *out = dup(format_trace_text(t->t, with_perm != 0));
  });
}

ps_status ps_trace_csv(const ps_trace* t, char** out) {
  return guard([&] {
    need(t, "trace");
    need(out, "out");
    *out = dup(format_trace_csv(t->t));
  });
}

ps_status ps_trace_check(const ps_trace* t, uint64_t* violations, char** report) {
  return guard([&] {
    need(t, "trace");
    std::vector<Violation> v;
    check_trace(t->t, t->s, {}, v);
    if (violations) *violations = v.size();
    if (report) {
      std::string s;
      for (const auto& x : v) s += format_violation(x) + "\n";
      *report = dup(s);
    }
  });
}

ps_status ps_table_load_or_build(int n, const char* dir, ps_table** out) {
  return guard([&] {
    need(out, "out");
    *out = new ps_table{load_or_build_table(n, dir ? dir : "")};
  });
}

ps_status ps_table_build(int n, ps_table** out) {
  return guard([&] {
    need(out, "out");
    *out = new ps_table{build_table(n)};
  });
}

void ps_table_free(ps_table* t) { delete t; }
int ps_table_size(const ps_table* t) { return t ? t->t.n : 0; }
int ps_table_max_distance(const ps_table* t) { return t ? t->t.max_distance : 0; }

ps_status ps_table_distance(const ps_table* t, const ps_perm* p, int* out) {
  return guard([&] {
    need(t, "table");
    need(p, "perm");
    need(out, "out");
    *out = exact_distance(p->p, t->t);
  });
}

ps_status ps_table_geodesic(const ps_table* t, const ps_perm* p, int** moves, size_t* count) {
  return guard([&] {
    need(t, "table");
    need(p, "perm");
    need(moves, "moves");
    need(count, "count");
    std::vector<Move> g = geodesic(p->p, t->t);
    int* v = static_cast<int*>(std::malloc(sizeof(int) * (2 * g.size() + 1)));
    if (!v) throw std::bad_alloc();
    for (size_t k = 0; k < g.size(); ++k) {
      v[2 * k] = g[k].i;
      v[2 * k + 1] = g[k].j;
    }
    *moves = v;
    *count = g.size();
  });
}

ps_status ps_verify(int n, const char* strategies, const ps_table* table, int structure_checks,
                    uint64_t* violations, char** report) {
  return guard([&] {
    CheckOptions o;
    o.structure = structure_checks != 0;
    VerifyReport r = verify_exhaustive(n, parse_strategies(strategies), table ? &table->t : nullptr, o);
    if (violations) *violations = r.violation_count;
    if (report) *report = dup(format_verify_report(r));
  });
}

ps_status ps_bench(int n, int samples, uint64_t seed, const char* strategies,
                   const ps_table* table, int structure_checks, uint64_t* violations, char** csv,
                   char** summary) {
  return guard([&] {
    BenchOptions o;
    o.n = n;
    o.samples = samples;
    o.seed = seed;
    o.strategies = parse_strategies(strategies);
    o.table = table ? &table->t : nullptr;
    o.checks.structure = structure_checks != 0;
    BenchReport r = bench_random(o);
    if (violations) *violations = r.violation_count;
    char* c = csv ? dup(r.csv) : nullptr;
    if (summary) *summary = dup(format_bench_summary(r));
    if (csv) *csv = c;
  });
}

ps_status ps_bounds(const int* ns, size_t count, char** table) {
  return guard([&] {
    need(table, "out");
    if (!ns && count) throw Error(Status::invalid_argument, "ns is NULL");
    *table = dup(format_bound_table(bound_table(std::vector<int>(ns, ns + count))));
  });
}

}  // extern "C"
