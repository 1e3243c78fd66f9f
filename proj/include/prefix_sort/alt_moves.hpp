#pragma once

#include <optional>

#include "prefix_sort/macro.hpp"
#include "prefix_sort/sla.hpp"
#include "prefix_sort/trace.hpp"

namespace prefix_sort {

// Symbols are those of lp.base; arithmetic on symbols is mod m.
struct GapContext {
  int i = 0;      // first interval holding a skipped symbol (1-based, >= 2)
  int s = 0;      // s_i, the skipped symbol just before t_i
  int c = -1;     // first skipped symbol of interval i, -1 when s is the only one
  int l = 0;      // t_{i-1} = s - l (mod m)
  int skips = 0;  // skipped symbols in interval i
  int t_prev = 0; // t_{i-1}
  int t_i = 0;
  // 0-based positions in lp.base
  int pos_t_i = 0;
  int pos_s_plus_1 = 0;
  int pos_s_minus_1 = 0;
  int pos_a = 0;   // s - l + 1
  int pos_a2 = 0;  // s - l + 2
  int pos_c_plus_1 = -1;
  int pos_c_minus_1 = -1;
};

std::optional<GapContext> gap_context(const LabeledPermutation& lp);

// Throw Error(planner_exhausted) when the dispatched case does not validate.
Macro plan_ch3(const LabeledPermutation& lp, const GapContext& ctx);
Macro plan_ch4(const LabeledPermutation& lp, const GapContext& ctx);

// One macro of the generalised algorithm; variant 3 targets beta 10/3, variant 4 beta 3.
Macro plan_generalised(const Perm& q, int variant, EpochRecord& e);

}  // namespace prefix_sort
