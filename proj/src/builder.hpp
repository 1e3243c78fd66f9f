#pragma once

#include <string>

#include "prefix_sort/macro.hpp"
#include "prefix_sort/sla.hpp"

namespace prefix_sort::detail {

// Builds a macro on a working copy of a reduced permutation. Every step must
// create at least one adjacency; the first failure poisons the builder.
class Builder {
 public:
  Builder(const Perm& q, int x, int y)
      : w_(q), x_(x), y_(y), moved_(q.size(), 0), first_(q.size(), 0) {}

  bool ok() const { return ok_; }
  const Work& work() const { return w_; }
  int first() const { return w_.first(); }
  int pos(int v) const { return w_.where(v); }
  int size() const { return (int)moves_.size(); }

  bool move(Move mv);
  // cut the prefix ending at a (after) or just before a (before); insert it
  // just before or just after b
  bool after_before(int a, int b) { return ok_ && move({pos(a) + 2, pos(b) + 1}); }
  bool after_after(int a, int b) { return ok_ && move({pos(a) + 2, pos(b) + 2}); }
  bool before_after(int a, int b) { return ok_ && move({pos(a) + 1, pos(b) + 2}); }
  bool before_before(int a, int b) { return ok_ && move({pos(a) + 1, pos(b) + 1}); }
  // regular greedy moves of the epoch until z is the first symbol; the
  // closing double is not allowed here
  bool regular_until(int z);
  // regular greedy moves through the closing double
  bool regular_to_double();

  void fail() { ok_ = false; }
  Macro finish(std::string lemma_id, bool special) const;

 private:
  Work w_;
  int x_, y_;
  bool ok_ = true;
  std::vector<Move> moves_;
  std::vector<MoveKind> kinds_;
  std::vector<char> moved_, first_;
  int n_moved_ = 0, n_first_ = 0;
};

// moved <= beta * skipped, beta = num/den
inline bool ratio_ok(const Macro& m, int num, int den) {
  return (long long)m.claimed_moved * den <= (long long)m.claimed_skipped * num;
}

}  // namespace prefix_sort::detail
