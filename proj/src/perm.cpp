#include "prefix_sort/perm.hpp"

#include <algorithm>
#include <charconv>
#include <random>

namespace prefix_sort {

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::blank: return "blank";
    case MoveKind::single: return "single";
    case MoveKind::double_: return "double";
    case MoveKind::setup: return "setup";
  }
  return "?";
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= (int)p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return !p.empty();
}

void validate(const Perm& p) {
  if (p.empty()) throw Error(Status::invalid_permutation, "empty permutation");
  int n = (int)p.size();
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n)
      throw Error(Status::invalid_permutation,
                  "symbol " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    if (seen[v]) throw Error(Status::invalid_permutation, "duplicate symbol " + std::to_string(v));
    seen[v] = 1;
  }
}

Perm parse_perm(std::string_view text) {
  Perm p;
  size_t k = 0;
  while (k < text.size()) {
    char c = text[k];
    if (c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r' || c == '(' || c == ')') {
      ++k;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + k, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + k)
      throw Error(Status::invalid_permutation,
                  "unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(k));
    p.push_back(v);
    k = ptr - text.data();
  }
  validate(p);
  return p;
}

std::string format_perm(const Perm& p, char sep) {
  std::string s;
  for (size_t k = 0; k < p.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(p[k]);
  }
  return s;
}

Perm identity(int n) {
  Perm p(n);
  for (int k = 0; k < n; ++k) p[k] = k;
  return p;
}

Perm reverse_perm(int n) {
  Perm p(n);
  for (int k = 0; k < n; ++k) p[k] = n - 1 - k;
  return p;
}

bool is_reverse(const Perm& p) {
  int n = (int)p.size();
  for (int k = 0; k < n; ++k)
    if (p[k] != n - 1 - k) return false;
  return true;
}

Perm random_perm(int n, std::uint64_t seed) {
  // Fisher-Yates with rejection sampling
  std::mt19937_64 rng(seed);
  Perm p = identity(n);
  for (int k = n - 1; k > 0; --k) {
    std::uint64_t bound = (std::uint64_t)k + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do r = rng();
    while (r >= limit);
    std::swap(p[k], p[r % bound]);
  }
  return p;
}

void check_move(int n, Move m) {
  if (m.i < 2)
    throw Error(Status::invalid_move, "i=" + std::to_string(m.i) + " violates 2 <= i");
  if (m.j <= m.i)
    throw Error(Status::invalid_move,
                "j=" + std::to_string(m.j) + " violates i < j (i=" + std::to_string(m.i) + ")");
  if (m.j > n + 1)
    throw Error(Status::invalid_move,
                "j=" + std::to_string(m.j) + " violates j <= n+1 (n=" + std::to_string(n) + ")");
}

void apply_move_inplace(Perm& p, Move m) {
  check_move((int)p.size(), m);
  std::rotate(p.begin(), p.begin() + (m.i - 1), p.begin() + (m.j - 1));
}

Perm apply_move(const Perm& p, Move m) {
  Perm q = p;
  apply_move_inplace(q, m);
  return q;
}

Move inverse_move(Move m) { return {m.j - m.i + 1, m.j}; }

int adjacency_delta(const Perm& p, Move m) {
  int n = (int)p.size();
  check_move(n, m);
  auto adj = [n](int a, int b) { return adjacent_mod(a, b, n) ? 1 : 0; };
  const int* q = p.data() - 1;  // 1-based view
  int d = adj(q[m.j - 1], q[1]) - adj(q[m.i - 1], q[m.i]);
  if (m.j <= n) d += adj(q[m.i - 1], q[m.j]) - adj(q[m.j - 1], q[m.j]);
  return d;
}

Classification classify_move(const Perm& p, Move m) {
  int d = adjacency_delta(p, m);
  MoveKind k = MoveKind::blank;
  if (d == 1) k = MoveKind::single;
  else if (d >= 2) k = MoveKind::double_;
  return {k, d};
}

AdjacencyProfile adjacency_profile(const Perm& p) {
  AdjacencyProfile a;
  int n = (int)p.size();
  for (int k = 0; k + 1 < n; ++k) {
    if (adjacent_mod(p[k], p[k + 1], n)) {
      ++a.adjacency_count;
      a.adjacency_positions.push_back(k + 1);
    } else {
      ++a.breakpoint_count;
    }
  }
  return a;
}

int adjacency_count(const Perm& p) {
  int n = (int)p.size(), c = 0;
  for (int k = 0; k + 1 < n; ++k) c += adjacent_mod(p[k], p[k + 1], n);
  return c;
}

int breakpoints_with_sentinel(const Perm& p) {
  int n = (int)p.size(), b = 0;
  for (int k = 0; k + 1 < n; ++k) b += p[k] + 1 != p[k + 1];
  b += p[n - 1] != n - 1;
  return b;
}

static Reduction collapse(const Perm& p, bool sentinel) {
  int n = (int)p.size();
  Reduction r;
  std::vector<int> run_of(n, -1);  // symbol -> index of run starting at it
  std::vector<std::pair<int, int>> runs;  // (start symbol, length) in position order
  for (int k = 0; k < n;) {
    int e = k;
    while (e + 1 < n && p[e] + 1 == p[e + 1]) ++e;
    runs.push_back({p[k], e - k + 1});
    k = e + 1;
  }
  if (sentinel && runs.back().first + runs.back().second == n) {
    r.trailing_sentinel = true;
    runs.pop_back();
  }
  for (size_t u = 0; u < runs.size(); ++u) run_of[runs[u].first] = (int)u;
  std::vector<int> label(runs.size());
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (run_of[v] < 0) continue;
    label[run_of[v]] = next++;
    r.unit_start.push_back(v);
    r.unit_len.push_back(runs[run_of[v]].second);
  }
  r.reduced.resize(runs.size());
  for (size_t u = 0; u < runs.size(); ++u) r.reduced[u] = label[u];
  return r;
}

Reduction reduce(const Perm& p) {
  validate(p);
  return collapse(p, true);
}

Reduction collapse_runs(const Perm& p) {
  validate(p);
  return collapse(p, false);
}

Move lift(const Reduction& r, const Perm& reduced_now, Move m) {
  check_move((int)reduced_now.size(), m);
  int a = 1, b = 1;
  for (int k = 1; k < m.j; ++k) {
    int len = r.unit_len[reduced_now[k - 1]];
    if (k < m.i) a += len;
    b += len;
  }
  return {a, b};
}

int cyclic_dist(int x, int y, int n) { return ((x - y) % n + n) % n; }

bool is_sorted(const Perm& p) {
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k] != (int)k) return false;
  return true;
}

}  // namespace prefix_sort
