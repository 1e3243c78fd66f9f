#include "prefix_sort/sla.hpp"

#include <algorithm>

namespace prefix_sort {

Reduction cyclic_reduce(const Perm& p) {
  const int n = (int)p.size();
  // run index by start symbol, -1 elsewhere; run lengths by position order
  std::vector<int> run_of(n, -1), len(n);
  int u = 0;
  for (int k = 0; k < n;) {
    int e = k;
    while (e + 1 < n && adjacent_mod(p[e], p[e + 1], n)) ++e;
    run_of[p[k]] = u;
    len[u++] = e - k + 1;
    k = e + 1;
  }
  Reduction r;
  r.reduced.resize(u);
  r.unit_start.resize(u);
  r.unit_len.resize(u);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int q = run_of[v];
    if (q < 0) continue;
    r.reduced[q] = next;
    r.unit_start[next] = v;
    r.unit_len[next++] = len[q];
  }
  return r;
}

bool is_cyclically_reduced(const Perm& p) { return adjacency_count(p) == 0; }

const char* case_name(CaseId c) {
  switch (c) {
    case CaseId::case1: return "Case1";
    case CaseId::case2: return "Case2";
    case CaseId::case3a: return "Case3a";
    case CaseId::case3b: return "Case3b";
    case CaseId::case4: return "Case4";
    case CaseId::case5: return "Case5";
    case CaseId::r8_macro: return "R8Macro";
  }
  return "?";
}

Step regular_step(const Work& w, int x, int y) {
  int m = w.m;
  auto canon = [&](int v) { return ((v - x - 1) % m + m) % m; };
  // position (0-based) of the symbol in w[0..end) nearest to x+1
  auto argmin = [&](int end) {
    int best = 0;
    for (int k = 1; k < end; ++k)
      if (canon(w.at(k)) < canon(w.at(best))) best = k;
    return best;
  };
  int x1 = w.succ(x);
  int t = w.first();
  int py = w.where(y);
  Step s;
  if (t == x1) {
    s.id = CaseId::case1;
    s.move = {w.where(w.pred(y)) + 2, py + 1};
    return s;
  }
  if (t == w.succ(y)) {
    int pz = w.where(x1), pym = w.where(w.pred(y));
    if (pz <= pym) {
      s.id = CaseId::case2;
      s.move = {pz + 1, py + 2};
      return s;
    }
    int u = argmin(pym);
    if (u > 0) {
      s.id = CaseId::case3a;
      s.move = {u + 1, py + 2};
    } else {
      s.id = CaseId::case3b;
      s.move = {pym + 1, py + 2};
    }
    return s;
  }
  int ptm = w.where(w.pred(t)), pz = w.where(x1);
  if (ptm >= pz) {
    s.id = CaseId::case4;
    s.move = {pz + 1, ptm + 2};
    return s;
  }
  s.id = CaseId::case5;
  int u = argmin(ptm);
  if (u > 0) {
    s.move = {u + 1, ptm + 2};
  } else {
    s.degenerate = true;
    s.move = {ptm + 1, ptm + 2};
  }
  return s;
}

LabeledPermutation label(const Perm& p) {
  validate(p);
  if (p.size() < 3 || !is_cyclically_reduced(p))
    throw Error(Status::invalid_argument, "label expects a reduced permutation");
  return label_trusted(p);
}

LabeledPermutation label_trusted(const Perm& p, bool stop_at_gap) {
  int m = (int)p.size();
  LabeledPermutation lp;
  lp.base = p;
  lp.m = m;
  lp.x = p[m - 2];
  lp.y = p[m - 1];
  Work w(p);
  std::vector<int> orig(m);
  for (int k = 0; k < m; ++k) orig[p[k]] = k;
  for (int guard = 0; guard <= m; ++guard) {
    int t = w.first();
    lp.visited.push_back(t);
    lp.visited_pos.push_back(orig[t]);
    size_t k = lp.visited_pos.size();
    if (stop_at_gap && k >= 2 && lp.visited_pos[k - 1] > lp.visited_pos[k - 2] + 1) break;
    Step s = regular_step(w, lp.x, lp.y);
    lp.steps.push_back(s);
    if (s.id == CaseId::case1) break;
    w.apply(s.move);
  }
  lp.labels.assign(m, Label::skipped);
  lp.labels[m - 2] = lp.labels[m - 1] = Label::terminal;
  for (int q : lp.visited_pos) lp.labels[q] = Label::visited;
  for (int q : lp.visited_pos)
    lp.skipped_before.push_back(q > 0 && lp.labels[q - 1] == Label::skipped ? p[q - 1] : -1);
  return lp;
}

std::pair<CaseId, Move> classify_case(const LabeledPermutation& lp) {
  Work w(lp.base);
  Step s = regular_step(w, lp.x, lp.y);
  return {s.id, s.move};
}

LabelCheck check_label_conditions(const LabeledPermutation& lp) {
  LabelCheck c;
  auto fail = [&](std::string s) {
    if (c.ok) c.failure = std::move(s);
    c.ok = false;
  };
  int m = lp.m, k = lp.k();
  if (lp.visited.back() != (lp.x + 1) % m) fail("condition 1: last visited is not x+1");
  for (int i = 0; i + 1 < k; ++i) {
    if (lp.visited_pos[i + 1] <= lp.visited_pos[i]) fail("visited symbols out of position order");
    if (lp.canon(lp.visited[i + 1]) >= lp.canon(lp.visited[i]))
      fail("condition 2: distance to x does not decrease at t_" + std::to_string(i + 2));
    for (int q = lp.visited_pos[i] + 1; q < lp.visited_pos[i + 1] && q < m; ++q)
      if (lp.canon(lp.base[q]) <= lp.canon(lp.visited[i + 1]))
        fail("condition 2: skipped symbol " + std::to_string(lp.base[q]) + " nearer x than t_" +
             std::to_string(i + 2));
  }
  std::vector<int> pos(m);
  for (int q = 0; q < m; ++q) pos[lp.base[q]] = q;
  for (int i = 0; i + 1 < k; ++i) {
    int s = lp.skipped_before[i + 1];
    if (s < 0) continue;
    int tm = (lp.visited[i] + m - 1) % m;
    if (pos[tm] <= pos[s])
      fail("condition 3: t_" + std::to_string(i + 1) + "-1 not right of s_" + std::to_string(i + 2));
  }
  Work w(lp.base);
  std::vector<char> moved(m, 0);
  for (const Step& s : lp.steps) {
    if (moved[w.first()]) fail("condition 4: moved symbol " + std::to_string(w.first()) + " became first");
    for (int q = 0; q < s.move.i - 1; ++q) moved[w.at(q)] = 1;
    w.apply(s.move);
  }
  return c;
}

std::optional<R8Decomposition> detect_r8_prime(const Perm& p) {
  int m = (int)p.size();
  if (m < 8) return std::nullopt;
  int a = p[0];
  int k = (int)(std::find(p.begin(), p.end(), (a + m - 1) % m) - p.begin());
  if (k < 1 || k + 7 > m) return std::nullopt;
  for (int s = 1; s <= 7; ++s)
    if (p[k + s - 1] != ((a - s) % m + m) % m) return std::nullopt;
  R8Decomposition d;
  d.offset = ((a - 7) % m + m) % m;
  d.alpha_len = k - 1;
  d.beta_start = k + 7;
  return d;
}

const std::vector<Move>& r8_moves() {
  // First geodesic of R_8 in enumeration order, taken from the BFS table.
  static const std::vector<Move> moves{{4, 6}, {5, 8}, {3, 5}, {7, 9}, {4, 6}, {4, 8}};
  return moves;
}

Macro r8_macro(const Perm& p, const R8Decomposition& d) {
  auto again = detect_r8_prime(p);
  if (!again || again->offset != d.offset || again->alpha_len != d.alpha_len)
    throw Error(Status::invalid_argument, "stale R8' decomposition");
  // unit 0 is (7+i, alpha); units 1..7 are single symbols
  std::vector<int> len(8, 1);
  len[0] = 1 + d.alpha_len;
  std::vector<int> order{0, 1, 2, 3, 4, 5, 6, 7};
  Macro mac;
  mac.lemma_id = "R8'";
  mac.special_case = true;
  for (Move mv : r8_moves()) {
    int a = 1, b = 1;
    for (int k = 1; k < mv.j; ++k) {
      if (k < mv.i) a += len[order[k - 1]];
      b += len[order[k - 1]];
    }
    mac.moves.push_back({a, b});
    std::rotate(order.begin(), order.begin() + (mv.i - 1), order.begin() + (mv.j - 1));
  }
  Perm w = p;
  for (Move mv : mac.moves) {
    mac.kinds.push_back(classify_move(w, mv).kind);
    apply_move_inplace(w, mv);
  }
  auto a = account(p, mac.moves);
  mac.claimed_moved = a.moved;
  mac.claimed_visited = a.visited;
  mac.claimed_skipped = a.skipped;
  return mac;
}

Macro sort_rn(int n) {
  if (n < 1) throw Error(Status::invalid_argument, "n must be >= 1");
  Perm p = reverse_perm(n);
  Macro mac;
  mac.lemma_id = "Rn";
  mac.special_case = true;
  auto play = [&](int i, int j) {
    mac.moves.push_back({i, j});
    mac.kinds.push_back(classify_move(p, {i, j}).kind);
    apply_move_inplace(p, {i, j});
  };
  if (n == 2) {
    play(2, 3);
  } else if (n == 3) {
    play(2, 3);
    play(2, 4);
    play(2, 4);
  } else if (n >= 4) {
    int k = n / 4, m = n;
    for (int r = n % 4; r > 0; --r, --m) play(2, m + 1);  // R_m -> R_{m-1}
    int big = 4 * k;
    for (int t = 0; t + 1 < k; ++t) play(5, big - 2 * t);
    play(3, big / 2 + 2);
    for (int t = 0; t < k; ++t) play(3, big + 1 - 4 * t);
    // Remaining units form (1,3,2,5,4,...,2k-1,2k-2,0).
    std::vector<Move> q;
    if (k % 2 == 0) {
      for (int t = 0; t < k / 2; ++t) q.push_back({2 * k - 1 - 2 * t, 2 * k + 1 - 2 * t});
      q.push_back({2, k + 2});
      for (int t = 0; t + 1 < k / 2; ++t) q.push_back({3, k + 4 + 2 * t});
    } else {
      for (int t = 0; t < (k - 1) / 2; ++t) q.push_back({2 * k - 1 - 2 * t, 2 * k + 1 - 2 * t});
      q.push_back({k + 1, k + 2});
      for (int t = 0; t < (k - 1) / 2; ++t) q.push_back({3, k + 3 + 2 * t});
    }
    Reduction r = reduce(p);
    Perm cur = r.reduced;
    for (Move mv : q) {
      Move l = lift(r, cur, mv);
      play(l.i, l.j);
      apply_move_inplace(cur, mv);
    }
  }
  auto a = account(reverse_perm(n), mac.moves);
  mac.claimed_moved = a.moved;
  mac.claimed_visited = a.visited;
  mac.claimed_skipped = a.skipped;
  return mac;
}

}  // namespace prefix_sort
