#pragma once

#include <string>
#include <vector>

#include "prefix_sort/perm.hpp"

namespace prefix_sort {

struct Macro {
  std::vector<Move> moves;
  std::vector<MoveKind> kinds;  // kind of each move when applied in order
  int claimed_moved = 0;
  int claimed_skipped = 0;
  int claimed_visited = 0;
  std::string lemma_id;
  bool special_case = false;
};

struct Accounting {
  int moved = 0;
  int visited = 0;
  int skipped = 0;
};

// Replays moves on p: moved = symbols inside some moved prefix, visited =
// symbols that were first when a move was made, skipped = moved - visited.
Accounting account(const Perm& p, const std::vector<Move>& moves);

// Working copy with a position index; symbols compared mod m.
struct Work {
  Perm w;
  std::vector<int> pos;
  int m = 0;

  Work() = default;
  explicit Work(const Perm& p);
  int first() const { return w[0]; }
  int at(int k) const { return w[k]; }  // 0-based
  int where(int v) const { return pos[v]; }
  int succ(int v) const { return v + 1 == m ? 0 : v + 1; }
  int pred(int v) const { return v == 0 ? m - 1 : v - 1; }
  int delta(Move mv) const { return adjacency_delta(w, mv); }
  void apply(Move mv);
};

}  // namespace prefix_sort
