#pragma once

#include <string>
#include <vector>

#include "prefix_sort/macro.hpp"
#include "prefix_sort/sla.hpp"
#include "prefix_sort/trace.hpp"

namespace prefix_sort {

// Contiguous range of positions whose symbols form an integer interval.
struct Block {
  int start = 0;  // 0-based, inclusive
  int end = 0;
  int min_symbol = 0;
  int max_symbol = 0;
  int size() const { return end - start + 1; }
};

// Blocks starting at position 0, shortest first; the whole permutation is
// always last.
std::vector<Block> prefix_blocks(const Perm& p);

struct BlockMinCheck {
  bool applicable = false;  // proper block with a visited symbol
  bool ok = true;
  int last_visited = -1;
  int min_symbol = -1;
  std::string detail;
};
// The last visited symbol of a proper block is its minimum, comparing
// symbols by lp.canon.
BlockMinCheck block_min_is_last_visited(const Perm& p, const Block& b,
                                        const LabeledPermutation& lp);

// Block minimum equals the last visited symbol, over every proper prefix block of a reduced permutation; empty
// when all hold.
std::string check_block_minimum(const Perm& q);

// One macro of the block sorter. lp must label a cyclically reduced
// permutation. Throws Error(planner_exhausted) when no case applies.
Macro plan_blocks(const LabeledPermutation& lp);

// Sorter entry: plan_blocks with R_8', R_n and generic recoveries.
Macro plan_blocks_epoch(const Perm& q, EpochRecord& e);

}  // namespace prefix_sort
