#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prefix_sort/oracle.hpp"
#include "prefix_sort/trace.hpp"

namespace prefix_sort {

enum class Strategy { sla, gsla_10_3, gsla_3, blocks_2, rn_direct };

const std::vector<Strategy>& all_strategies();
const char* strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& s);
// beta as num/den; sla and rn-direct carry no ratio claim (den = 0)
std::pair<int, int> strategy_beta(Strategy s);

SortTrace run_sort(const Perm& p, Strategy s);
SortTrace sla_sort(const Perm& p);
SortTrace blocks_sort(const Perm& p);

struct Violation {
  std::string check;
  std::string strategy;
  Perm perm;
  std::string detail;
};

struct CheckOptions {
  bool ratio = true;
  bool epoch_bound = true;
  bool first_skip = true;
  bool structure = true;  // labeling conditions, block minimum, consecutive skips
};

// Per-trace checks shared by verify and bench. Appends to out.
void check_trace(const SortTrace& t, Strategy s, const CheckOptions& o, std::vector<Violation>& out);

struct VerifyReport {
  int n = 0;
  std::uint64_t permutations = 0;
  std::vector<Violation> violations;
  std::uint64_t violation_count = 0;
  std::vector<std::uint64_t> histogram;  // oracle distance histogram
  std::map<std::string, std::uint64_t> lemma_counts;
  std::map<std::string, int> max_moves;
};

VerifyReport verify_exhaustive(int n, const std::vector<Strategy>& strategies,
                               const DistanceTable* table = nullptr, const CheckOptions& o = {});

struct BenchOptions {
  int n = 100;
  int samples = 100;
  std::uint64_t seed = 1;
  std::vector<Strategy> strategies;
  const DistanceTable* table = nullptr;
  CheckOptions checks;
};

struct BenchStats {
  std::string strategy;
  int sorted = 0;
  double mean_moves = 0;
  int max_moves = 0;
  double mean_epoch_ratio = 0;  // over non-special epochs with skipped > 0
  double special_fraction = 0;  // of all epochs
  double bound = 0;             // n - log_beta n, NaN when the strategy has no beta
};

struct BenchReport {
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string csv;
  std::vector<Violation> violations;
  std::uint64_t violation_count = 0;
  std::map<std::string, std::uint64_t> violations_by_check;
  std::vector<BenchStats> stats;  // in strategy order
  double seconds = 0;
};

BenchReport bench_random(const BenchOptions& o);

std::string format_violation(const Violation& v);
std::string format_verify_report(const VerifyReport& r);
std::string format_bench_summary(const BenchReport& r);

struct BoundRow {
  int n;
  std::vector<double> values;  // one per bound_columns() entry
};
std::vector<std::string> bound_columns();
double bound_value(int num, int den, int n);
std::vector<BoundRow> bound_table(const std::vector<int>& ns);
std::string format_bound_table(const std::vector<BoundRow>& rows);

}  // namespace prefix_sort
