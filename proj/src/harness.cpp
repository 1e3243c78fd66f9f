#include "prefix_sort/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "prefix_sort/alt_moves.hpp"
#include "prefix_sort/blocks.hpp"
#include "prefix_sort/sla.hpp"

namespace prefix_sort {

const std::vector<Strategy>& all_strategies() {
  static const std::vector<Strategy> v{Strategy::sla, Strategy::gsla_10_3, Strategy::gsla_3,
                                       Strategy::blocks_2, Strategy::rn_direct};
  return v;
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::sla: return "sla";
    case Strategy::gsla_10_3: return "gsla-10/3";
    case Strategy::gsla_3: return "gsla-3";
    case Strategy::blocks_2: return "blocks-2";
    case Strategy::rn_direct: return "rn-direct";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(const std::string& s) {
  for (Strategy x : all_strategies())
    if (s == strategy_name(x)) return x;
  return std::nullopt;
}

std::pair<int, int> strategy_beta(Strategy s) {
  switch (s) {
    case Strategy::gsla_10_3: return {10, 3};
    case Strategy::gsla_3: return {3, 1};
    case Strategy::blocks_2: return {2, 1};
    default: return {0, 0};
  }
}

namespace {

int first_skip_interval(const LabeledPermutation& lp) {
  for (int i = 2; i <= lp.k(); ++i)
    if (lp.interval_skips(i) > 0) return i;
  return 0;
}

// Plain sequence length epoch: R8' macro when present, else greedy to the double.
Macro sla_epoch(const Perm& q, EpochRecord& e) {
  if (auto d = detect_r8_prime(q)) {
    e.special = true;
    return r8_macro(q, *d);
  }
  LabeledPermutation lp = label_trusted(q);
  e.first_skip_interval = first_skip_interval(lp);
  Macro mac;
  mac.lemma_id = "SLA";
  for (const Step& s : lp.steps) mac.moves.push_back(s.move);
  auto a = account(q, mac.moves);
  mac.claimed_moved = a.moved;
  mac.claimed_visited = a.visited;
  mac.claimed_skipped = a.skipped;
  return mac;
}

// first: q is the whole input. A reduced R_3 met later is left to the
// sequence length epoch, which needs a single double.
Macro plan_epoch(Strategy s, const Perm& q, EpochRecord& e, bool first) {
  switch (s) {
    case Strategy::rn_direct:
      if (is_reverse(q) && (first || q.size() >= 4)) {
        Macro mac = sort_rn((int)q.size());
        mac.lemma_id = "Rn-tail";
        return mac;
      }
      return sla_epoch(q, e);
    case Strategy::gsla_10_3: return plan_generalised(q, 3, e);
    case Strategy::gsla_3: return plan_generalised(q, 4, e);
    case Strategy::blocks_2: return plan_blocks_epoch(q, e);
    case Strategy::sla: break;
  }
  return sla_epoch(q, e);
}

}  // namespace

namespace {

// Reduction of the full permutation from the previous reduction f and its
// reduced permutation after a macro.
Reduction compose(const Reduction& f, const Perm& q) {
  Reduction g = cyclic_reduce(q);
  const int m = (int)q.size();
  for (size_t k = 0; k < g.unit_start.size(); ++k) {
    int a = g.unit_start[k], len = 0;
    for (int u = 0, v = a; u < g.unit_len[k]; ++u, v = v + 1 == m ? 0 : v + 1)
      len += f.unit_len[v];
    g.unit_start[k] = f.unit_start[a];
    g.unit_len[k] = len;
  }
  return g;
}

}  // namespace

SortTrace run_sort(const Perm& p, Strategy s) {
  Driver d(p, strategy_name(s));
  int guard = 2 * (int)p.size() + 8;
  Reduction f = cyclic_reduce(d.perm());
  bool first = (int)f.reduced.size() == (int)p.size();
  while (!d.sorted()) {
    if (--guard < 0) throw Error(Status::internal, "sorter made no progress");
    if (f.reduced.size() == 1) {
      d.rotate_finish();
      break;
    }
    EpochRecord e;
    e.m = (int)f.reduced.size();
    Macro mac = plan_epoch(s, f.reduced, e, first);
    first = false;
    e.moved = mac.claimed_moved;
    e.visited = mac.claimed_visited;
    e.skipped = mac.claimed_skipped;
    e.special = e.special || mac.special_case;
    f = compose(f, d.apply_macro(f, mac, e));
  }
  SortTrace t = d.finish();
  std::string bad = replay_check(t);
  if (!bad.empty()) throw Error(Status::internal, "trace replay failed: " + bad);
  return t;
}

SortTrace sla_sort(const Perm& p) { return run_sort(p, Strategy::sla); }
SortTrace blocks_sort(const Perm& p) { return run_sort(p, Strategy::blocks_2); }

namespace {

void add(std::vector<Violation>& out, const std::string& check, const SortTrace& t,
         std::string detail) {
  out.push_back({check, t.strategy, t.initial, std::move(detail)});
}

bool sla_like(const EpochRecord& e) { return e.lemma_id == "SLA"; }

}  // namespace

void check_trace(const SortTrace& t, Strategy s, const CheckOptions& o, std::vector<Violation>& out) {
  const int n = (int)t.initial.size();
  if (!is_sorted(t.final_perm)) add(out, "identity", t, "final permutation is not the identity");
  if (t.total_moves() > std::max(n - 1, 0) && !(s == Strategy::rn_direct && n <= 3))
    add(out, "upper-bound", t, std::to_string(t.total_moves()) + " moves > n-1");
  auto [num, den] = strategy_beta(s);
  Perm p = t.initial;
  for (size_t k = 0; k < t.epochs.size(); ++k) {
    const EpochRecord& e = t.epochs[k];
    const std::string where = "epoch " + std::to_string(k + 1) + " (" + e.lemma_id + ")";
    if (o.ratio && den && !e.special && (long long)e.moved * den > (long long)e.skipped * num)
      add(out, "ratio", t,
          where + ": moved " + std::to_string(e.moved) + " > " + std::to_string(num) + "/" +
              std::to_string(den) + " x skipped " + std::to_string(e.skipped));
    if (o.epoch_bound && sla_like(e) && 8 * e.move_count > 7 * (e.m - 3))
      add(out, "epoch-bound", t,
          where + ": " + std::to_string(e.move_count) + " moves > 7(m-3)/8 with m=" +
              std::to_string(e.m));
    if (o.first_skip && e.first_skip_interval > 8)
      add(out, "first-skip", t, where + ": first skip in interval " + std::to_string(e.first_skip_interval));
    if (o.structure && e.m >= 3 && !e.special) {
      Reduction f = cyclic_reduce(p);
      if ((int)f.reduced.size() != e.m) {
        add(out, "structure", t, where + ": reduced size mismatch");
      } else if (!is_sorted(f.reduced)) {
        LabeledPermutation lp = label(f.reduced);
        LabelCheck lc = check_label_conditions(lp);
        if (!lc.ok) add(out, "labeling", t, where + ": " + lc.failure);
        Perm c(e.m);
        for (int q = 0; q < e.m; ++q) c[q] = lp.canon(f.reduced[q]);
        std::string bm = check_block_minimum(c);
        if (!bm.empty()) add(out, "block-minimum", t, where + ": " + bm);
      }
    }
    if (o.structure)
      for (int q = 0; q < e.move_count; ++q) apply_move_inplace(p, t.moves[e.first_move + q].move);
  }
  for (const auto& note : t.notes) add(out, "note", t, note);
}

VerifyReport verify_exhaustive(int n, const std::vector<Strategy>& strategies,
                               const DistanceTable* table, const CheckOptions& o) {
  if (n < 1) throw Error(Status::invalid_argument, "n must be positive");
  if (n > kDefaultOracleCap) throw Error(Status::resource_limit, "n exceeds the oracle cap");
  if (table && table->n != n) throw Error(Status::size_mismatch, "oracle table size differs from n");
  VerifyReport r;
  r.n = n;
  if (table) r.histogram = table->histogram;
  Perm p = identity(n);
  auto record = [&](Violation v) {
    ++r.violation_count;
    if (r.violations.size() < 100) r.violations.push_back(std::move(v));
  };
  do {
    ++r.permutations;
    int dist = table ? exact_distance(p, *table) : -1;
    for (Strategy s : strategies) {
      SortTrace t;
      try {
        t = run_sort(p, s);
      } catch (const Error& e) {
        record({"exception", strategy_name(s), p, e.what()});
        continue;
      }
      std::vector<Violation> v;
      check_trace(t, s, o, v);
      if (dist >= 0 && t.total_moves() < dist)
        v.push_back({"oracle", t.strategy, p,
                     std::to_string(t.total_moves()) + " moves < distance " + std::to_string(dist)});
      for (auto& x : v) record(std::move(x));
      for (const auto& e : t.epochs) ++r.lemma_counts[t.strategy + " " + e.lemma_id];
      int& mx = r.max_moves[t.strategy];
      mx = std::max(mx, t.total_moves());
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return r;
}

namespace {

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t idx) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (idx + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string format_ratio(double r) {
  if (std::isinf(r)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r);
  return buf;
}

struct SampleResult {
  std::string rows;
  std::vector<Violation> violations;
  struct PerStrategy {
    int moves = -1;
    int epochs = 0, special = 0, ratio_epochs = 0;
    double ratio_sum = 0;
  };
  std::vector<PerStrategy> per;
};

}  // namespace

BenchReport bench_random(const BenchOptions& o) {
  if (o.samples < 1) throw Error(Status::invalid_argument, "samples must be at least 1");
  if (o.n < 1) throw Error(Status::invalid_argument, "n must be positive");
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Strategy> strategies = o.strategies.empty() ? all_strategies() : o.strategies;
  const DistanceTable* table = o.table && o.table->n == o.n ? o.table : nullptr;
  std::vector<SampleResult> results(o.samples);
  auto work = [&](int idx) {
    SampleResult& out = results[idx];
    Perm p = random_perm(o.n, sample_seed(o.seed, idx));
    int dist = table ? exact_distance(p, *table) : -1;
    std::string dist_text = dist >= 0 ? std::to_string(dist) : "";
    out.per.resize(strategies.size());
    for (size_t k = 0; k < strategies.size(); ++k) {
      Strategy s = strategies[k];
      SortTrace t;
      try {
        t = run_sort(p, s);
      } catch (const Error& e) {
        out.violations.push_back({"exception", strategy_name(s), p, e.what()});
        continue;
      }
      check_trace(t, s, o.checks, out.violations);
      if (dist >= 0 && t.total_moves() < dist)
        out.violations.push_back({"oracle", t.strategy, p, "count below oracle distance"});
      auto& ps = out.per[k];
      ps.moves = t.total_moves();
      ps.epochs = (int)t.epochs.size();
      for (const auto& e : t.epochs) {
        ps.special += e.special;
        if (!e.special && e.skipped > 0) {
          ps.ratio_sum += (double)e.moved / e.skipped;
          ++ps.ratio_epochs;
        }
      }
      out.rows += t.strategy + "," + std::to_string(o.n) + "," + std::to_string(o.seed) + "," +
                  std::to_string(idx) + "," + std::to_string(t.total_moves()) + "," +
                  std::to_string(t.epochs.size()) + "," + std::to_string(t.special_epochs()) + "," +
                  format_ratio(t.max_ratio()) + "," + dist_text + "\n";
    }
  };
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  int threads = (int)std::min<unsigned>(hw, (unsigned)o.samples);
  if (threads <= 1) {
    for (int idx = 0; idx < o.samples; ++idx) work(idx);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          for (int idx = w; idx < o.samples; idx += threads) work(idx);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  BenchReport r;
  r.n = o.n;
  r.samples = o.samples;
  r.seed = o.seed;
  r.csv = "strategy,n,seed,sample_idx,moves,epochs,special_epochs,max_ratio,oracle_distance_or_blank\n";
  struct Acc {
    double moves = 0, ratio = 0;
    long long epochs = 0, special = 0, ratio_epochs = 0;
    int sorted = 0, max = 0;
  };
  std::vector<Acc> acc(strategies.size());
  for (auto& res : results) {
    r.csv += res.rows;
    for (auto& v : res.violations) {
      ++r.violation_count;
      ++r.violations_by_check[v.check];
      if (r.violations.size() < 100) r.violations.push_back(std::move(v));
    }
    for (size_t k = 0; k < res.per.size(); ++k) {
      const auto& ps = res.per[k];
      if (ps.moves < 0) continue;
      Acc& a = acc[k];
      ++a.sorted;
      a.moves += ps.moves;
      a.max = std::max(a.max, ps.moves);
      a.epochs += ps.epochs;
      a.special += ps.special;
      a.ratio += ps.ratio_sum;
      a.ratio_epochs += ps.ratio_epochs;
    }
  }
  for (size_t k = 0; k < strategies.size(); ++k) {
    const Acc& a = acc[k];
    BenchStats st;
    st.strategy = strategy_name(strategies[k]);
    st.sorted = a.sorted;
    if (a.sorted) st.mean_moves = a.moves / a.sorted;
    st.max_moves = a.max;
    if (a.ratio_epochs) st.mean_epoch_ratio = a.ratio / a.ratio_epochs;
    if (a.epochs) st.special_fraction = (double)a.special / a.epochs;
    auto [num, den] = strategy_beta(strategies[k]);
    st.bound = den ? bound_value(num, den, o.n) : std::nan("");
    r.stats.push_back(st);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string format_violation(const Violation& v) {
  return v.check + " [" + v.strategy + "] " + format_perm(v.perm) + ": " + v.detail;
}

std::string format_verify_report(const VerifyReport& r) {
  std::string s = "n=" + std::to_string(r.n) + " permutations=" + std::to_string(r.permutations) +
                  " violations=" + std::to_string(r.violation_count) + "\n";
  for (const auto& [name, mx] : r.max_moves) s += "max_moves " + name + " " + std::to_string(mx) + "\n";
  for (size_t d = 0; d < r.histogram.size(); ++d)
    s += "distance " + std::to_string(d) + " " + std::to_string(r.histogram[d]) + "\n";
  for (const auto& [name, c] : r.lemma_counts) s += "lemma " + name + " " + std::to_string(c) + "\n";
  for (const auto& v : r.violations) s += "violation " + format_violation(v) + "\n";
  return s;
}

std::string format_bench_summary(const BenchReport& r) {
  char buf[256];
  std::string s = "n=" + std::to_string(r.n) + " samples=" + std::to_string(r.samples) +
                  " seed=" + std::to_string(r.seed) + " violations=" +
                  std::to_string(r.violation_count) + "\n";
  s += "strategy mean_moves max_moves mean_epoch_ratio special_fraction bound\n";
  for (const auto& st : r.stats) {
    std::string bound = "-";
    if (!std::isnan(st.bound)) {
      std::snprintf(buf, sizeof buf, "%.3f", st.bound);
      bound = buf;
    }
    std::snprintf(buf, sizeof buf, "%s %.3f %d %.4f %.4f %s\n", st.strategy.c_str(), st.mean_moves,
                  st.max_moves, st.mean_epoch_ratio, st.special_fraction, bound.c_str());
    s += buf;
  }
  for (const auto& [check, c] : r.violations_by_check) s += "violations " + check + " " + std::to_string(c) + "\n";
  for (size_t k = 0; k < r.violations.size() && k < 10; ++k)
    s += "violation " + format_violation(r.violations[k]) + "\n";
  return s;
}

std::string format_bound_table(const std::vector<BoundRow>& rows) {
  std::string s = "n";
  for (const auto& c : bound_columns()) s += "," + c;
  s += "\n";
  char buf[64];
  for (const auto& row : rows) {
    s += std::to_string(row.n);
    for (double v : row.values) {
      std::snprintf(buf, sizeof buf, ",%.4f", v);
      s += buf;
    }
    s += "\n";
  }
  return s;
}

std::vector<std::string> bound_columns() {
  return {"beta=8", "beta=9/2", "beta=7/2", "beta=10/3", "beta=3", "beta=2", "3n/4"};
}

double bound_value(int num, int den, int n) {
  if (num <= den || den <= 0) throw Error(Status::invalid_argument, "base must exceed 1");
  if (n < 1) throw Error(Status::invalid_argument, "n must be positive");
  return n - std::log((double)n) / std::log((double)num / den);
}

std::vector<BoundRow> bound_table(const std::vector<int>& ns) {
  static const std::pair<int, int> bases[] = {{8, 1}, {9, 2}, {7, 2}, {10, 3}, {3, 1}, {2, 1}};
  std::vector<BoundRow> rows;
  for (int n : ns) {
    BoundRow row{n, {}};
    for (auto [num, den] : bases) row.values.push_back(bound_value(num, den, n));
    row.values.push_back(0.75 * n);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace prefix_sort
