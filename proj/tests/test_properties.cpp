#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "prefix_sort/blocks.hpp"
#include "prefix_sort/harness.hpp"
#include "prefix_sort/oracle.hpp"

using namespace prefix_sort;

namespace {

// Expand reduced symbols into their units of consecutive symbols (mod n).
Perm expand(const Reduction& r, const Perm& reduced, int n) {
  Perm out;
  for (int u : reduced)
    for (int k = 0; k < r.unit_len[u]; ++k) out.push_back((r.unit_start[u] + k) % n);
  return out;
}

}  // namespace

TEST_CASE("cyclic_reduce expands back to the input") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    int n = 1 + seed % 30;
    Perm p = random_perm(n, seed);
    if (seed % 3 == 0 && n > 3) {
      // plant a few runs
      p = identity(n);
      std::rotate(p.begin(), p.begin() + seed % n, p.end());
      apply_move_inplace(p, {2 + (int)(seed % (n - 2)), n + 1});
    }
    Reduction r = cyclic_reduce(p);
    REQUIRE(expand(r, r.reduced, n) == p);
    REQUIRE(is_permutation(r.reduced));
    if (r.reduced.size() >= 2) CHECK(is_cyclically_reduced(r.reduced));
    if (r.reduced.size() >= 2) CHECK(oracle::adjacencies(r.reduced) == 0);
  }
}

TEST_CASE("a lifted move acts on the expansion like the reduced move") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    int n = 3 + seed % 25;
    Perm p = random_perm(n, seed);
    Reduction r = cyclic_reduce(p);
    int m = (int)r.reduced.size();
    if (m < 2) continue;
    Perm q = r.reduced;
    for (int step = 0; step < 3; ++step) {
      int i = 2 + rng() % (m - 1);
      int j = i + 1 + rng() % (m + 1 - i);
      Move lifted = lift(r, q, {i, j});
      p = oracle::splice(p, lifted);
      q = oracle::splice(q, {i, j});
      REQUIRE(p == expand(r, q, n));
    }
  }
}

TEST_CASE("every strategy sorts random permutations within n - 1 moves") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    int n = 2 + (seed * 7) % 120;
    Perm p = random_perm(n, seed);
    for (Strategy s : all_strategies()) {
      SortTrace t = run_sort(p, s);
      Perm q = p;
      for (const auto& mv : t.moves) q = oracle::splice(q, mv.move);
      REQUIRE(is_sorted(q));
      if (!(s == Strategy::rn_direct && n <= 3)) REQUIRE(t.total_moves() <= n - 1);
      int next = 0;
      for (const auto& e : t.epochs) {
        REQUIRE(e.first_move == next);
        next += e.move_count;
        REQUIRE(e.skipped == e.moved - e.visited);
        REQUIRE(e.visited >= 1);
      }
      REQUIRE(next == t.total_moves());
      std::vector<Violation> v;
      CheckOptions o;
      o.epoch_bound = false;
      check_trace(t, s, o, v);
      for (const auto& x : v) FAIL(format_violation(x));
    }
  }
}

TEST_CASE("no strategy beats the exact distance, n = 7") {
  DistanceTable tb = build_table(7);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Perm p = random_perm(7, seed);
    int d = exact_distance(p, tb);
    CHECK(2 * d >= breakpoints_with_sentinel(p));
    for (Strategy s : all_strategies()) REQUIRE(run_sort(p, s).total_moves() >= d);
  }
}

TEST_CASE("labeling conditions and block minimum on larger reduced permutations") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Perm q = cyclic_reduce(random_perm(9 + seed % 60, seed)).reduced;
    if (q.size() < 3) continue;
    LabeledPermutation lp = label(q);
    REQUIRE(check_label_conditions(lp).ok);
    Perm c(q.size());
    for (size_t k = 0; k < q.size(); ++k) c[k] = lp.canon(q[k]);
    REQUIRE(check_block_minimum(c).empty());
  }
}

TEST_CASE("rank is a bijection on S_8") {
  std::vector<char> seen(factorial(8), 0);
  Perm p = identity(8);
  do {
    auto r = rank(p);
    REQUIRE(r < seen.size());
    REQUIRE_FALSE(seen[r]);
    seen[r] = 1;
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("delta of a move and its inverse cancel") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Perm p = random_perm(12, seed);
    for (Move m : oracle::all_moves(12)) {
      Perm q = apply_move(p, m);
      REQUIRE(adjacency_delta(p, m) == -adjacency_delta(q, inverse_move(m)));
    }
  }
}
