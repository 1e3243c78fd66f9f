// One PASS/FAIL line per acceptance criterion. --long adds n = 8 to the
// exhaustive pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "prefix_sort/blocks.hpp"
#include "prefix_sort/harness.hpp"
#include "prefix_sort/oracle.hpp"
#include "prefix_sort/sla.hpp"

using namespace prefix_sort;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_time(double s) {
  char buf[32];
  if (s < 1) std::snprintf(buf, sizeof buf, "%.3f ms", s * 1e3);
  else std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail, double seconds) {
  std::printf("%s %d %s: %s (%s)\n", ok ? "PASS" : "FAIL", id, name, detail.c_str(), fmt_time(seconds).c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string counts(const std::map<std::string, std::uint64_t>& m) {
  if (m.empty()) return "none";
  std::string s;
  for (const auto& [k, v] : m) s += (s.empty() ? "" : ", ") + k + "=" + std::to_string(v);
  return s;
}

// Largest reduced size m among epoch-bound violations seen.
int worst_m = 0;
void note_m(const Violation& v) {
  auto at = v.detail.find("with m=");
  if (v.check == "epoch-bound" && at != std::string::npos)
    worst_m = std::max(worst_m, std::stoi(v.detail.substr(at + 7)));
}

bool is_structural(const std::string& check) {
  return check == "labeling" || check == "block-minimum" || check == "epoch-bound" || check == "first-skip" ||
         check == "structure" || check == "note";
}

// Criteria 1 to 3 and their traces.
struct Small {
  std::vector<std::pair<SortTrace, Strategy>> traces;
};

void criterion1(Small& out) {
  Perm p{12, 14, 13, 8, 11, 9, 3, 6, 5, 1, 4, 7, 2, 0, 10};
  auto t0 = Clock::now();
  SortTrace t = run_sort(p, Strategy::sla);
  LabeledPermutation lp = label(p);
  double secs = since(t0);
  const EpochRecord& e = t.epochs.at(0);
  std::string kinds;
  for (int k = 0; k < e.move_count; ++k)
    kinds += std::string(k ? "," : "") + kind_name(t.moves[k].kind);
  bool ok = kinds == "single,single,double" && lp.visited == std::vector<int>{12, 8, 1} &&
            t.moves[0].move == Move{4, 6} && t.moves[1].move == Move{10, 13} &&
            t.moves[2].move == Move{10, 15} && is_sorted(t.final_perm);
  std::string vis;
  for (int v : lp.visited) vis += (vis.empty() ? "" : ",") + std::to_string(v);
  report(1, "worked example", ok && secs < 1e-3,
         "first epoch " + kinds + ", visited " + vis + ", total " + std::to_string(t.total_moves()) + " moves",
         secs);
  out.traces.push_back({t, Strategy::sla});
}

void criterion2() {
  auto t0 = Clock::now();
  std::vector<std::string> bad;
  if (format_perm(apply_move({2, 5, 4, 3, 7, 1, 6, 0}, {4, 7})) != "3 7 1 2 5 4 6 0") bad.push_back("alpha(4,7)");
  if (format_perm(collapse_runs({4, 6, 1, 2, 3, 0, 5, 7}).reduced) != "2 4 1 0 3 5") bad.push_back("reduction 1");
  if (format_perm(reduce({3, 2, 1, 0, 4}).reduced) != "3 2 1 0") bad.push_back("reduction 2");
  if (cyclic_dist(5, 2, 8) != 3 || cyclic_dist(2, 5, 8) != 5) bad.push_back("dist");
  Perm p{6, 5, 7, 0, 4, 2, 1, 3, 8};
  std::string inv;
  for (const Block& b : prefix_blocks(p))
    inv += "(" + format_perm(Perm(p.begin(), p.begin() + b.size()), ',') + ")";
  if (inv != "(6,5)(6,5,7)(6,5,7,0,4,2,1,3)(6,5,7,0,4,2,1,3,8)") bad.push_back("blocks " + inv);
  double secs = since(t0);
  std::string detail = bad.empty() ? "all examples match" : "mismatch:";
  for (auto& b : bad) detail += " " + b;
  report(2, "micro examples", bad.empty() && secs < 1e-3, detail, secs);
}

void criterion3(Small& out) {
  auto t0 = Clock::now();
  std::vector<std::string> bad;
  for (int n = 2; n <= 64; ++n) {
    SortTrace t = run_sort(reverse_perm(n), Strategy::rn_direct);
    int want = n - n / 4;
    if (!is_sorted(t.final_perm) || t.total_moves() != want)
      bad.push_back("n=" + std::to_string(n) + " got " + std::to_string(t.total_moves()) + " want " +
                    std::to_string(want));
    out.traces.push_back({std::move(t), Strategy::rn_direct});
  }
  double secs = since(t0);
  std::string detail = bad.empty() ? "n - floor(n/4) for n = 2..64" : "";
  for (auto& b : bad) detail += (detail.empty() ? "" : "; ") + b;
  report(3, "reverse permutations", bad.empty() && secs < 1, detail, secs);
}

struct Exhaustive {
  int max_n = 7;
  std::uint64_t perms = 0;
  std::map<std::string, std::uint64_t> c4, c5, c8;
  std::uint64_t c7 = 0;
  double t_sort = 0, t_ratio = 0, t_struct = 0, t_bound = 0;
};

void exhaustive(Exhaustive& x) {
  CheckOptions ratio_only{true, false, false, false};
  CheckOptions structural{false, true, true, true};
  for (int n = 1; n <= x.max_n; ++n) {
    auto tb0 = Clock::now();
    DistanceTable tb = build_table(n);
    x.t_bound += since(tb0);
    Perm p = identity(n);
    do {
      ++x.perms;
      auto t0 = Clock::now();
      int d = exact_distance(p, tb);
      if (2 * d < breakpoints_with_sentinel(p)) ++x.c7;
      x.t_bound += since(t0);
      for (Strategy s : all_strategies()) {
        t0 = Clock::now();
        SortTrace t;
        try {
          t = run_sort(p, s);
        } catch (const Error&) {
          ++x.c4["exception"];
          ++x.c8["exception"];
          continue;
        }
        if (!is_sorted(t.final_perm)) ++x.c4["identity"];
        if (t.total_moves() < d) ++x.c4["below-distance"];
        x.t_sort += since(t0);
        t0 = Clock::now();
        std::vector<Violation> v;
        check_trace(t, s, ratio_only, v);
        for (auto& y : v)
          if (y.check == "ratio") ++x.c5[y.strategy];
        x.t_ratio += since(t0);
        t0 = Clock::now();
        v.clear();
        check_trace(t, s, structural, v);
        for (auto& y : v)
          if (is_structural(y.check)) {
            ++x.c8[y.check];
            note_m(y);
          }
        x.t_struct += since(t0);
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

BenchReport bench(int n, CheckOptions c) {
  BenchOptions o;
  o.n = n;
  o.samples = 10000;
  o.seed = 20240601;
  o.strategies = all_strategies();
  o.checks = c;
  return bench_random(o);
}

}  // namespace

int main(int argc, char** argv) {
  bool long_run = argc > 1 && std::strcmp(argv[1], "--long") == 0;
  Small small;
  criterion1(small);
  criterion2();
  criterion3(small);

  Exhaustive x;
  x.max_n = long_run ? 8 : 7;
  exhaustive(x);
  report(4, "oracle soundness", x.c4.empty() && x.t_sort + x.t_bound < (long_run ? 1800 : 120),
         std::to_string(x.perms) + " permutations, n <= " + std::to_string(x.max_n) + ", 5 strategies; violations " +
             counts(x.c4),
         x.t_sort + x.t_bound);

  // Upper bound on 10^4 samples at n = 100 and n = 1000; ratios come from the n = 100 run.
  CheckOptions ratio_only{true, false, false, false};
  BenchReport b100 = bench(100, ratio_only);
  BenchReport b1000 = bench(1000, ratio_only);
  std::map<std::string, std::uint64_t> c6, c5 = x.c5;
  for (const auto* b : {&b100, &b1000})
    for (const auto& [k, v] : b->violations_by_check)
      if (k != "ratio") c6[k + "@n=" + std::to_string(b->n)] += v;
  for (const auto& v : b100.violations)
    if (v.check == "ratio") ++c5[v.strategy + "@n=100"];
  if (b100.violations_by_check.count("ratio") &&
      b100.violations_by_check.at("ratio") > (std::uint64_t)std::count_if(b100.violations.begin(), b100.violations.end(), [](auto& v) { return v.check == "ratio"; }))
    c5["ratio@n=100 (truncated)"] = b100.violations_by_check.at("ratio");
  double t5 = x.t_ratio + b100.seconds;
  report(5, "ratio law", c5.empty() && t5 < 300,
         "exhaustive n <= " + std::to_string(x.max_n) + " and 10^4 samples at n = 100; violations " + counts(c5),
         t5);

  std::string moves;
  for (const auto* b : {&b100, &b1000})
    for (const auto& s : b->stats)
      moves += " " + s.strategy + "@" + std::to_string(b->n) + " max " + std::to_string(s.max_moves);
  double t6 = b100.seconds + b1000.seconds;
  report(6, "upper bound n-1", c6.empty() && t6 < 120,
         "10^4 samples at n = 100 and 1000; violations " + counts(c6) + ";" + moves, t6);

  report(7, "breakpoint lower bound", x.c7 == 0,
         std::to_string(x.perms) + " permutations; violations " + std::to_string(x.c7), x.t_bound);

  // Structural checks on traces of criteria 1 to 6.
  auto t8 = Clock::now();
  std::map<std::string, std::uint64_t> c8 = x.c8;
  CheckOptions structural{false, true, true, true};
  std::string first;
  for (const auto& [t, s] : small.traces) {
    std::vector<Violation> v;
    check_trace(t, s, structural, v);
    for (auto& y : v) {
      ++c8[y.check];
      note_m(y);
      if (first.empty()) first = format_violation(y);
    }
  }
  double t_small = since(t8);
  BenchReport s100 = bench(100, structural);
  BenchReport s1000 = bench(1000, structural);
  for (const auto* b : {&s100, &s1000}) {
    for (const auto& [k, v] : b->violations_by_check)
      if (is_structural(k) || k == "exception") c8[k + "@n=" + std::to_string(b->n)] += v;
    for (const auto& y : b->violations) note_m(y);
    if (first.empty())
      for (const auto& y : b->violations)
        if (is_structural(y.check)) {
          first = format_violation(y);
          break;
        }
  }
  std::uint64_t total8 = 0;
  for (const auto& [k, v] : c8) total8 += v;
  report(8, "structural invariants", total8 == 0,
         "violations " + counts(c8) + (worst_m ? "; largest m failing the epoch bound " + std::to_string(worst_m) : "") +
             (first.empty() ? "" : "; e.g. " + first),
         x.t_struct + t_small + s100.seconds + s1000.seconds);

  auto t9 = Clock::now();
  BenchOptions o;
  o.n = 100;
  o.samples = 500;
  o.seed = 7;
  o.strategies = all_strategies();
  std::string a = bench_random(o).csv, b = bench_random(o).csv;
  report(9, "determinism", a == b && !a.empty(),
         a == b ? "identical CSV, " + std::to_string(a.size()) + " bytes" : "CSV differs", since(t9));

  std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
