#include "prefix_sort/macro.hpp"

#include <algorithm>

namespace prefix_sort {

Accounting account(const Perm& p, const std::vector<Move>& moves) {
  Perm w = p;
  int n = (int)p.size();
  std::vector<char> moved(n, 0), first(n, 0);
  Accounting a;
  for (Move m : moves) {
    check_move(n, m);
    if (!first[w[0]]) {
      first[w[0]] = 1;
      ++a.visited;
    }
    for (int k = 0; k < m.i - 1; ++k)
      if (!moved[w[k]]) {
        moved[w[k]] = 1;
        ++a.moved;
      }
    std::rotate(w.begin(), w.begin() + (m.i - 1), w.begin() + (m.j - 1));
  }
  a.skipped = a.moved - a.visited;
  return a;
}

Work::Work(const Perm& p) : w(p), pos(p.size()), m((int)p.size()) {
  for (int k = 0; k < m; ++k) pos[w[k]] = k;
}

void Work::apply(Move mv) {
  check_move(m, mv);
  std::rotate(w.begin(), w.begin() + (mv.i - 1), w.begin() + (mv.j - 1));
  for (int k = 0; k < mv.j - 1; ++k) pos[w[k]] = k;
}

}  // namespace prefix_sort
