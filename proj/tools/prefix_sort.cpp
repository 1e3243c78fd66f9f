#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prefix_sort.h"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct PermArgs {
  std::string text;
  int random_n = 0;
  uint64_t seed = 1;
  int reverse_n = 0;
};

void add_perm_options(CLI::App* cmd, PermArgs& a) {
  cmd->add_option("perm", a.text, "permutation of 0..n-1, e.g. \"2 0 1\"");
  cmd->add_option("--random", a.random_n, "uniform random permutation of size N");
  cmd->add_option("--seed", a.seed, "seed for --random");
  cmd->add_option("--reverse", a.reverse_n, "reverse permutation of size N");
}

struct UsageError {
  std::string msg;
};

// Errors from bad input are usage errors; anything else is a violation.
int exit_for(ps_status s) {
  switch (s) {
    case PS_INVALID_ARGUMENT:
    case PS_INVALID_PERMUTATION:
    case PS_INVALID_MOVE:
    case PS_RESOURCE_LIMIT:
    case PS_SIZE_MISMATCH: return kExitUsage;
    default: return kExitViolation;
  }
}

struct Failure {
  ps_status status;
};

void check(ps_status s) {
  if (s != PS_OK) throw Failure{s};
}

ps_perm* make_perm(const PermArgs& a) {
  int given = !a.text.empty() + (a.random_n > 0) + (a.reverse_n > 0);
  if (given != 1) throw UsageError{"give exactly one of <perm>, --random N, --reverse N"};
  ps_perm* p = nullptr;
  if (!a.text.empty()) check(ps_perm_parse(a.text.c_str(), &p));
  else if (a.random_n > 0) check(ps_perm_random(a.random_n, a.seed, &p));
  else check(ps_perm_reverse(a.reverse_n, &p));
  return p;
}

std::string take(char* s) {
  std::string r = s ? s : "";
  ps_string_free(s);
  return r;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

int cmd_sort(const PermArgs& a, const std::string& strategy, bool trace, bool csv) {
  ps_perm* p = make_perm(a);
  ps_trace* t = nullptr;
  ps_status st = ps_sort(p, strategy.c_str(), &t);
  if (st != PS_OK) {
    char* text = nullptr;
    ps_perm_format(p, &text);
    std::cerr << "error: " << ps_last_error() << "\npermutation: " << take(text) << "\n";
    ps_perm_free(p);
    throw Failure{st};
  }
  char* text = nullptr;
  check(ps_perm_format(p, &text));
  std::cout << "strategy " << strategy << "\nn " << ps_perm_size(p) << "\ninitial "
            << take(text) << "\nmoves " << ps_trace_move_count(t) << "\nepochs "
            << ps_trace_epoch_count(t) << "\n";
  if (trace) {
    char* s = nullptr;
    check(csv ? ps_trace_csv(t, &s) : ps_trace_text(t, 1, &s));
    std::cout << take(s);
  }
  uint64_t bad = 0;
  char* report = nullptr;
  check(ps_trace_check(t, &bad, &report));
  std::string r = take(report);
  if (bad) std::cerr << r;
  ps_trace_free(t);
  ps_perm_free(p);
  return bad ? kExitViolation : 0;
}

int cmd_distance(const PermArgs& a, bool show_geodesic) {
  ps_perm* p = make_perm(a);
  ps_table* t = nullptr;
  ps_status st = ps_table_load_or_build((int)ps_perm_size(p), nullptr, &t);
  if (st != PS_OK) {
    ps_perm_free(p);
    throw Failure{st};
  }
  int d = 0;
  check(ps_table_distance(t, p, &d));
  std::cout << d << "\n";
  if (show_geodesic) {
    int* moves = nullptr;
    size_t count = 0;
    check(ps_table_geodesic(t, p, &moves, &count));
    for (size_t k = 0; k < count; ++k)
      std::cout << "alpha(" << moves[2 * k] << "," << moves[2 * k + 1] << ")\n";
    ps_ints_free(moves);
  }
  ps_table_free(t);
  ps_perm_free(p);
  return 0;
}

ps_table* maybe_table(int n, bool want) {
  if (!want) return nullptr;
  ps_table* t = nullptr;
  check(ps_table_load_or_build(n, nullptr, &t));
  return t;
}

int cmd_verify(int n, const std::vector<std::string>& strategies, bool oracle, bool structure) {
  ps_table* t = maybe_table(n, oracle);
  uint64_t bad = 0;
  char* report = nullptr;
  ps_status st = ps_verify(n, join(strategies).c_str(), t, structure, &bad, &report);
  ps_table_free(t);
  check(st);
  std::cout << take(report);
  return bad ? kExitViolation : 0;
}

int cmd_bench(int n, int samples, uint64_t seed, const std::vector<std::string>& strategies,
              const std::string& out, bool oracle, bool structure) {
  ps_table* t = maybe_table(n, oracle);
  uint64_t bad = 0;
  char *csv = nullptr, *summary = nullptr;
  ps_status st = ps_bench(n, samples, seed, join(strategies).c_str(), t, structure, &bad, &csv,
                          &summary);
  ps_table_free(t);
  check(st);
  std::string c = take(csv);
  if (out.empty() || out == "-") {
    std::cout << c;
    std::cerr << take(summary);
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << c)) {
      std::cerr << "error: cannot write " << out << "\n";
      return kExitViolation;
    }
    std::cout << take(summary);
  }
  return bad ? kExitViolation : 0;
}

int cmd_bounds(const std::vector<int>& ns) {
  char* s = nullptr;
  check(ps_bounds(ns.data(), ns.size(), &s));
  std::cout << take(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sorting permutations by prefix transpositions"};
  app.require_subcommand(1);

  PermArgs sort_perm, dist_perm;
  std::string strategy = "blocks-2";
  bool trace = false, csv = false, geo = false;
  auto* sort = app.add_subcommand("sort", "sort one permutation and report the move count");
  add_perm_options(sort, sort_perm);
  sort->add_option("--strategy", strategy, "sla, gsla-10/3, gsla-3, blocks-2 or rn-direct");
  sort->add_flag("--trace", trace, "print every move");
  sort->add_flag("--csv", csv, "with --trace, print the trace as CSV");

  auto* dist = app.add_subcommand("distance", "exact distance from the cached BFS table");
  add_perm_options(dist, dist_perm);
  dist->add_flag("--geodesic", geo, "also print one shortest move sequence");

  int vn = 0;
  std::vector<std::string> vstrat;
  bool voracle = true, vnostruct = false;
  auto* verify = app.add_subcommand("verify", "sort every permutation of size n and check all invariants");
  verify->add_option("--n", vn, "size")->required();
  verify->add_option("--strategies", vstrat, "comma separated; default all")->delimiter(',');
  verify->add_flag("!--no-oracle", voracle, "skip the exact-distance comparison");
  verify->add_flag("--no-structure", vnostruct, "skip labeling and block checks");

  int bn = 0, bsamples = 100;
  uint64_t bseed = 1;
  std::string bout;
  std::vector<std::string> bstrat;
  bool boracle = false, bnostruct = false;
  auto* bench = app.add_subcommand("bench", "sort seeded random permutations and write CSV");
  bench->add_option("--n", bn, "size")->required();
  bench->add_option("--samples", bsamples, "number of permutations");
  bench->add_option("--seed", bseed, "base seed");
  bench->add_option("--out", bout, "CSV file; stdout when omitted");
  bench->add_option("--strategies", bstrat, "comma separated; default all")->delimiter(',');
  bench->add_flag("--oracle", boracle, "add exact distances (n <= 10)");
  bench->add_flag("--no-structure", bnostruct, "skip labeling and block checks");

  std::vector<int> ns;
  auto* bounds = app.add_subcommand("bounds", "n - log_beta n for each beta, and 3n/4");
  bounds->add_option("--n", ns, "sizes")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sort) return cmd_sort(sort_perm, strategy, trace, csv);
    if (*dist) return cmd_distance(dist_perm, geo);
    if (*verify) return cmd_verify(vn, vstrat, voracle, !vnostruct);
    if (*bench) return cmd_bench(bn, bsamples, bseed, bstrat, bout, boracle, !bnostruct);
    if (*bounds) return cmd_bounds(ns);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.msg << "\n";
    return kExitUsage;
  } catch (const Failure& f) {
    std::cerr << "error (" << ps_status_name(f.status) << "): " << ps_last_error() << "\n";
    return exit_for(f.status);
  }
  return kExitUsage;
}
