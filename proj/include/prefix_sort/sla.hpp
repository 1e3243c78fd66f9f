#pragma once

#include <optional>
#include <vector>

#include "prefix_sort/macro.hpp"
#include "prefix_sort/perm.hpp"

namespace prefix_sort {

// Collapse maximal runs under mod-n adjacency and relabel the runs by the
// cyclic order of their first symbols. The result has no mod-m adjacency.
Reduction cyclic_reduce(const Perm& p);
bool is_cyclically_reduced(const Perm& p);

enum class CaseId { case1, case2, case3a, case3b, case4, case5, r8_macro };
const char* case_name(CaseId c);

enum class Label : unsigned char { visited, skipped, terminal };

struct Step {
  CaseId id = CaseId::case1;
  Move move;
  bool degenerate = false;  // Case 5 with u = t
};

struct LabeledPermutation {
  Perm base;
  int m = 0;
  int x = 0;
  int y = 0;
  std::vector<Label> labels;       // by position
  std::vector<int> visited;        // t_1..t_k
  std::vector<int> visited_pos;    // 0-based positions in base
  std::vector<int> skipped_before; // s_i for each t_i, -1 if none
  std::vector<Step> steps;         // regular greedy moves of the epoch

  // canonical value: x+1 maps to 0 and x to m-1, so canon(v) = dist(v, x+1)
  int canon(int v) const {
    int d = v - x - 1;
    return d < 0 ? d + m : d;
  }
  int k() const { return (int)visited.size(); }
  // interval i (2..k) covers positions [visited_pos[i-2], visited_pos[i-1])
  int interval_skips(int i) const { return visited_pos[i - 1] - visited_pos[i - 2] - 1; }
};

// Regular greedy move for the working copy with epoch terminals x, y.
Step regular_step(const Work& w, int x, int y);

LabeledPermutation label(const Perm& p);
// label without input checks. With stop_at_gap the epoch is followed only
// up to the first visited symbol preceded by a skipped one; labels after it
// are not meaningful and steps stop short.
LabeledPermutation label_trusted(const Perm& p, bool stop_at_gap = false);
std::pair<CaseId, Move> classify_case(const LabeledPermutation& lp);

struct LabelCheck {
  bool ok = true;
  std::string failure;
};
// Conditions 1-4 of the labeling: t_k = x+1, decreasing distances,
// t_i - 1 right of s_{i+1}, moved symbols never first again.
LabelCheck check_label_conditions(const LabeledPermutation& lp);

struct R8Decomposition {
  int offset = 0;      // i, taken mod m
  int alpha_len = 0;   // symbols between 7+i and 6+i
  int beta_start = 0;  // 0-based position after i
};
std::optional<R8Decomposition> detect_r8_prime(const Perm& p);
Macro r8_macro(const Perm& p, const R8Decomposition& d);
const std::vector<Move>& r8_moves();

Macro sort_rn(int n);

}  // namespace prefix_sort
