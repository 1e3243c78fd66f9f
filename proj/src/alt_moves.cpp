#include "prefix_sort/alt_moves.hpp"

#include "builder.hpp"

namespace prefix_sort {

using detail::Builder;

std::optional<GapContext> gap_context(const LabeledPermutation& lp) {
  int k = lp.k();
  int i = 0;
  for (int a = 2; a <= k; ++a)
    if (lp.interval_skips(a) > 0) {
      i = a;
      break;
    }
  if (!i) return std::nullopt;
  int m = lp.m;
  auto add = [m](int v, int d) { return ((v + d) % m + m) % m; };
  std::vector<int> pos(m);
  for (int q = 0; q < m; ++q) pos[lp.base[q]] = q;
  GapContext g;
  g.i = i;
  g.t_prev = lp.visited[i - 2];
  g.t_i = lp.visited[i - 1];
  g.pos_t_i = lp.visited_pos[i - 1];
  g.skips = lp.interval_skips(i);
  g.s = lp.base[g.pos_t_i - 1];
  g.c = g.skips >= 2 ? lp.base[lp.visited_pos[i - 2] + 1] : -1;
  g.l = add(g.s, -g.t_prev);
  g.pos_s_plus_1 = pos[add(g.s, 1)];
  g.pos_s_minus_1 = pos[add(g.s, -1)];
  g.pos_a = pos[add(g.s, 1 - g.l)];
  g.pos_a2 = pos[add(g.s, 2 - g.l)];
  if (g.c >= 0) {
    g.pos_c_plus_1 = pos[add(g.c, 1)];
    g.pos_c_minus_1 = pos[add(g.c, -1)];
  }
  return g;
}

namespace {

// Position predicates relative to the gap, on the unmodified permutation.
struct View {
  const LabeledPermutation& lp;
  const GapContext& g;
  std::vector<int> pos;
  int pos_prev;

  View(const LabeledPermutation& l, const GapContext& c) : lp(l), g(c), pos(l.m) {
    for (int q = 0; q < lp.m; ++q) pos[lp.base[q]] = q;
    pos_prev = pos[g.t_prev];
  }
  int add(int v, int d) const { return ((v + d) % lp.m + lp.m) % lp.m; }
  // at or beyond t_i; a symbol equal to t_i can still be an insertion target
  bool right(int v) const { return pos[v] >= g.pos_t_i; }
  bool in_gap(int v) const { return pos[v] > pos_prev && pos[v] < g.pos_t_i; }
  bool left(int v) const { return pos[v] < pos_prev; }
  bool visited_left(int v) const { return left(v) && lp.labels[pos[v]] == Label::visited; }
};

Macro finish_or_throw(const Builder& b, const std::string& id, bool special) {
  if (!b.ok()) throw Error(Status::planner_exhausted, id + " did not validate");
  return b.finish(id, special);
}

}  // namespace

Macro plan_ch3(const LabeledPermutation& lp, const GapContext& g) {
  View v(lp, g);
  Builder b(lp.base, lp.x, lp.y);
  const int s = g.s, l = g.l, ti = g.t_i, tp = g.t_prev;
  auto S = [&](int d) { return v.add(s, d); };
  std::string id = "none";
  bool special = false;
  if (g.i <= 3) {
    id = "Ch3-i<=3";
    b.regular_until(ti);
  } else if (g.skips >= 3) {
    id = "Obs3.1";
    b.regular_until(ti);
  } else if (v.right(S(1))) {
    id = "L3.1";
    b.after_before(s, S(1));
  } else if (v.in_gap(S(1))) {
    const int a = S(1 - l);
    if (v.right(S(2))) {
      id = "L3.2-c1";
      b.after_before(S(1), S(2));
      b.after_before(s, S(1));
    } else if (v.visited_left(S(2))) {
      if (v.right(a)) {
        id = "L3.2-c2.1";
        b.after_before(tp, a);
        b.after_before(S(1), S(2));
        b.after_before(s, S(1));
      } else if (v.visited_left(a)) {
        id = "L3.2-c2.2";
        b.regular_until(S(2));
        b.after_before(a, s);
        b.before_after(ti, S(-l - 1));
      } else if (a == s) {
        id = "L3.2-c2.3";
        special = true;
        b.regular_until(S(2));
        b.after_before(S(-1), s);
      } else {
        b.fail();
      }
    } else {
      b.fail();
    }
  } else if (v.visited_left(S(1))) {
    const int a = S(1 - l), a2 = S(2 - l);
    if (v.right(a)) {
      id = "L3.3-c1";
      b.after_before(tp, a);
      b.after_before(s, S(1));
    } else if (v.visited_left(a)) {
      if (v.pos[a2] > v.pos_prev) {
        id = "L3.3-c2.1";
        b.after_before(a, a2);
        b.before_after(ti, S(-l - 1));
      } else {
        id = "L3.3-c2.2";
        b.regular_until(S(1));
        b.after_before(a, ti);
        b.before_after(ti, S(-l - 1));
      }
    } else if (a == s && g.c >= 0) {
      const int c = g.c, c1 = v.add(g.c, 1);
      if (v.right(c1)) {
        id = "L3.3-c3.1";
        b.after_before(c, c1);
        b.after_before(s, S(1));
      } else if (v.visited_left(c1)) {
        id = "L3.3-c3.2";
        special = true;
        b.regular_until(c1);
        b.after_before(S(-1), s);
      } else {
        b.fail();
      }
    } else {
      b.fail();
    }
  } else {
    b.fail();
  }
  return finish_or_throw(b, id, special);
}

Macro plan_ch4(const LabeledPermutation& lp, const GapContext& g) {
  View v(lp, g);
  Builder b(lp.base, lp.x, lp.y);
  const int s = g.s, l = g.l, ti = g.t_i, tp = g.t_prev;
  auto S = [&](int d) { return v.add(s, d); };
  std::string id = "none";
  if (g.i <= 3) {
    id = "L4.1";
    b.regular_until(ti);
  } else if (g.skips >= 4) {
    id = "Obs4.1";
    b.regular_until(ti);
  } else if (v.right(S(1))) {
    id = "L4.2";
    b.after_before(s, S(1));
  } else if (v.in_gap(S(1))) {
    const int a = S(1 - l);
    if (v.right(S(2))) {
      id = "L4.3-c1";
      b.after_before(S(1), S(2));
      b.after_before(s, S(1));
    } else if (v.visited_left(S(2))) {
      if (v.right(a)) {
        id = "L4.3-c2.1";
        b.after_before(tp, a);
        b.after_before(S(1), S(2));
        b.after_before(s, S(1));
      } else if (v.in_gap(a) && l != 1) {
        id = "L4.3-c2.2a";
        b.after_before(tp, a);
        b.before_before(tp, ti);
        b.before_after(ti, S(-l - 1));
      } else if (v.in_gap(a)) {
        id = "L4.3-c2.2b";
        b.after_before(S(-1), s);
        if (b.ok() && b.first() != S(1)) b.after_before(b.first(), v.add(b.first(), 1));
        b.before_before(S(-1), ti);
        b.before_after(ti, S(-2));
      } else if (v.visited_left(a)) {
        id = "L4.3-c2.3";
        b.regular_until(S(2));
        b.after_after(a, S(1));
        b.before_after(ti, S(-l - 1));
      } else {
        b.fail();
      }
    } else if (v.in_gap(S(2))) {
      const int s3 = S(3);
      if (v.right(s3)) {
        id = "L4.3-c3.1";
        b.after_before(S(2), s3);
        b.after_before(S(1), S(2));
        b.after_before(s, S(1));
      } else if (v.visited_left(s3)) {
        if (v.right(a)) {
          id = "L4.3-c3.2a";
          b.after_before(tp, a);
          b.after_before(S(2), s3);
          b.after_before(S(1), S(2));
          b.after_before(s, S(1));
        } else if (v.visited_left(a)) {
          id = "L4.3-c3.2b";
          b.regular_until(s3);
          b.after_before(a, S(1));
          b.before_after(ti, S(-l - 1));
        } else if (l == 1) {
          if (v.right(S(4))) {
            id = "L4.3-c3.2c-i";
            b.after_before(s3, S(4));
            b.before_after(ti, S(-2));
          } else if (v.visited_left(S(4))) {
            id = "L4.3-c3.2c-ii";
            b.after_before(S(-1), s);
            b.after_before(S(2), s3);
            b.before_before(S(-1), ti);
            b.before_after(ti, S(-2));
          } else {
            b.fail();
          }
        } else {
          b.fail();
        }
      } else {
        b.fail();
      }
    } else {
      b.fail();
    }
  } else if (v.visited_left(S(1))) {
    const int a = S(1 - l), a2 = S(2 - l);
    if (v.right(a)) {
      id = "L4.4-c1";
      b.after_before(tp, a);
      b.after_before(s, S(1));
    } else if (v.visited_left(a)) {
      if (v.pos[a2] > v.pos[a]) {
        id = "L4.4-c2.1";
        b.after_before(a, a2);
        b.before_after(ti, S(-l - 1));
      } else {
        id = "L4.4-c2.2";
        b.regular_until(S(1));
        b.before_before(tp, ti);
      }
    } else if (v.in_gap(a) && l != 1) {
      if (v.right(a2)) {
        id = "L4.4-c3.1";
        b.after_before(a, a2);
        b.after_before(s, S(1));
      } else if (v.visited_left(a2)) {
        id = "L4.4-c3.2";
        b.regular_until(S(1));
        b.before_before(tp, ti);
        b.before_after(ti, S(-l - 1));
      } else if (v.in_gap(a2)) {
        const int a3 = S(3 - l);
        if (v.right(a3)) {
          id = "L4.4-c3.3a";
          b.after_before(a2, a3);
          b.after_before(a, a2);
          b.after_before(s, S(1));
        } else if (v.visited_left(a3)) {
          id = "L4.4-c3.3b";
          b.regular_until(S(1));
          b.before_before(tp, ti);
          b.before_after(ti, S(-l - 1));
        } else {
          b.fail();
        }
      } else {
        b.fail();
      }
    } else if (a == s && g.c >= 0) {
      const int c = g.c, cp = v.add(c, 1), cm = v.add(c, -1);
      if (v.right(cp)) {
        id = "L4.4-c3-l1a";
        b.after_before(c, cp);
        b.after_before(s, S(1));
      } else if (v.right(cm)) {
        id = "L4.4-c3-l1b";
        b.after_before(S(-1), s);
        b.before_after(ti, cm);
      } else if (v.visited_left(cp) && v.visited_left(cm)) {
        id = "L4.4-c3-l1c-i";
        b.after_before(cm, c);
        b.regular_until(ti);
      } else if (v.visited_left(cp) && v.in_gap(cm)) {
        id = "L4.4-c3-l1c-ii";
        b.regular_until(cp);
        b.after_before(S(1), cm);
        b.regular_until(ti);
      } else {
        b.fail();
      }
    } else {
      b.fail();
    }
  } else {
    b.fail();
  }
  return finish_or_throw(b, id, false);
}

Macro plan_generalised(const Perm& q, int variant, EpochRecord& e) {
  if (auto d = detect_r8_prime(q)) {
    e.special = true;
    return r8_macro(q, *d);
  }
  LabeledPermutation lp = label_trusted(q, true);
  auto g = gap_context(lp);
  if (!g) {
    Builder b(q, lp.x, lp.y);
    b.regular_to_double();
    Macro mac = b.finish("terminal", true);
    return mac;
  }
  e.first_skip_interval = g->i;
  int num = variant == 3 ? 10 : 3, den = variant == 3 ? 3 : 1;
  try {
    Macro mac = variant == 3 ? plan_ch3(lp, *g) : plan_ch4(lp, *g);
    if (mac.special_case || detail::ratio_ok(mac, num, den)) return mac;
  } catch (const Error& err) {
    if (err.status() != Status::planner_exhausted) throw;
  }
  Builder b(q, lp.x, lp.y);
  b.regular_until(g->t_i);
  if (!b.ok()) throw Error(Status::internal, "regular moves failed on " + format_perm(q));
  return b.finish("fallback", false);
}

}  // namespace prefix_sort
