#pragma once

#include <string>
#include <vector>

#include "prefix_sort/macro.hpp"
#include "prefix_sort/perm.hpp"

namespace prefix_sort {

struct MoveRecord {
  Move move;
  MoveKind kind = MoveKind::blank;
  int delta = 0;
  int adjacencies_after = 0;
  std::string lemma_id;
};

struct EpochRecord {
  int first_move = 0;
  int move_count = 0;
  int m = 0;  // size of the reduced permutation the epoch was planned on
  int moved = 0;
  int visited = 0;
  int skipped = 0;
  bool special = false;
  bool ends_with_double = false;
  int first_skip_interval = 0;  // 0 when every symbol before x+1 is visited
  std::string lemma_id;
};

struct SortTrace {
  std::string strategy;
  Perm initial;
  Perm final_perm;
  std::vector<MoveRecord> moves;
  std::vector<EpochRecord> epochs;
  std::vector<std::string> notes;  // structural check failures observed while sorting

  int total_moves() const { return (int)moves.size(); }
  int special_epochs() const;
  double max_ratio() const;  // over non-special epochs; moved/skipped, inf if skipped == 0
};

// Applies macros planned on a reduced frame to the full permutation.
class Driver {
 public:
  Driver(const Perm& p, std::string strategy);
  const Perm& perm() const { return p_; }
  bool sorted() const { return adj_ + 1 == (int)p_.size() && p_[0] == 0; }
  // Moves of mac are in the coordinates of f.reduced; returns f.reduced
  // after the moves.
  Perm apply_macro(const Reduction& f, const Macro& mac, EpochRecord e);
  // A rotation of the identity is finished with one move to the end.
  void rotate_finish();
  void note(std::string s) { trace_.notes.push_back(std::move(s)); }
  SortTrace finish();

 private:
  Perm p_;
  int adj_;
  SortTrace trace_;
};

std::string format_trace_text(const SortTrace& t, bool with_perm = true);
std::string format_trace_csv(const SortTrace& t);
// Replays t.moves from t.initial; empty string when consistent.
std::string replay_check(const SortTrace& t);

}  // namespace prefix_sort
