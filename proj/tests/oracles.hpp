#pragma once

// Naive reference implementations used to check the library.

#include <map>
#include <queue>
#include <set>
#include <vector>

#include "prefix_sort/perm.hpp"

namespace oracle {

using prefix_sort::Move;
using prefix_sort::Perm;

// alpha(i,j) by building the three pieces explicitly
inline Perm splice(const Perm& p, Move m) {
  Perm head(p.begin(), p.begin() + (m.i - 1));
  Perm mid(p.begin() + (m.i - 1), p.begin() + (m.j - 1));
  Perm tail(p.begin() + (m.j - 1), p.end());
  Perm out = mid;
  out.insert(out.end(), head.begin(), head.end());
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

inline int adjacencies(const Perm& p) {
  int n = (int)p.size(), c = 0;
  for (int k = 0; k + 1 < n; ++k)
    if ((p[k] + 1) % n == p[k + 1]) ++c;
  return c;
}

struct Tally {
  int moved = 0, visited = 0, skipped = 0;
};

inline Tally tally(Perm p, const std::vector<Move>& moves) {
  std::set<int> moved, first;
  for (Move m : moves) {
    first.insert(p[0]);
    for (int k = 0; k < m.i - 1; ++k) moved.insert(p[k]);
    p = splice(p, m);
  }
  return {(int)moved.size(), (int)first.size(), (int)(moved.size() - first.size())};
}

inline std::vector<Move> all_moves(int n) {
  std::vector<Move> v;
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) v.push_back({i, j});
  return v;
}

// forward BFS from p to the identity
inline int bfs_distance(const Perm& p) {
  int n = (int)p.size();
  Perm id(n);
  for (int k = 0; k < n; ++k) id[k] = k;
  std::map<Perm, int> d{{p, 0}};
  std::queue<Perm> q;
  q.push(p);
  auto moves = all_moves(n);
  while (!q.empty()) {
    Perm u = q.front();
    q.pop();
    if (u == id) return d[u];
    for (Move m : moves) {
      Perm v = splice(u, m);
      if (d.emplace(v, d[u] + 1).second) q.push(v);
    }
  }
  return -1;
}

}  // namespace oracle
