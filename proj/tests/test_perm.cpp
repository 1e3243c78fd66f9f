#include "doctest.h"
#include "oracles.hpp"
#include "prefix_sort/perm.hpp"

using namespace prefix_sort;

TEST_CASE("apply_move: alpha(4,7) example") {
  CHECK(apply_move({2, 5, 4, 3, 7, 1, 6, 0}, {4, 7}) == Perm{3, 7, 1, 2, 5, 4, 6, 0});
}

TEST_CASE("apply_move: smallest swap") {
  CHECK(apply_move({0, 1, 2}, {2, 3}) == Perm{1, 0, 2});
}

TEST_CASE("apply_move matches a naive splice on random permutations") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Perm p = random_perm(10, seed);
    for (Move m : oracle::all_moves(10)) {
      Perm q = apply_move(p, m);
      REQUIRE(q == oracle::splice(p, m));
      REQUIRE(is_permutation(q));
    }
  }
}

TEST_CASE("check_move names the violated bound") {
  auto msg = [](int n, Move m) {
    try {
      check_move(n, m);
    } catch (const Error& e) {
      CHECK(e.status() == Status::invalid_move);
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(msg(5, {1, 3}).find("2 <= i") != std::string::npos);
  CHECK(msg(5, {3, 3}).find("i < j") != std::string::npos);
  CHECK(msg(5, {2, 7}).find("j <= n+1") != std::string::npos);
  CHECK(msg(5, {2, 6}).empty());
}

TEST_CASE("inverse_move undoes the move") {
  for (Move m : oracle::all_moves(7)) {
    Perm p = random_perm(7, m.i * 31 + m.j);
    CHECK(apply_move(apply_move(p, m), inverse_move(m)) == p);
  }
}

TEST_CASE("classify_move: double of the worked example's first epoch") {
  Perm p{1, 4, 7, 8, 11, 12, 14, 13, 9, 3, 6, 5, 2, 0, 10};
  auto c = classify_move(p, {10, 15});
  CHECK(c.kind == MoveKind::double_);
  CHECK(c.delta == 2);
}

TEST_CASE("classify_move: alpha(2,3) on (1,0,2)") {
  // (1,0,2) has no adjacency and (0,1,2) has two
  auto c = classify_move({1, 0, 2}, {2, 3});
  CHECK(c.delta == oracle::adjacencies({0, 1, 2}) - oracle::adjacencies({1, 0, 2}));
  CHECK(c.kind == MoveKind::double_);
}

TEST_CASE("adjacency_delta agrees with recounting") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    int n = 2 + seed % 11;
    Perm p = random_perm(n, seed);
    for (Move m : oracle::all_moves(n)) {
      int d = adjacency_delta(p, m);
      REQUIRE(d == oracle::adjacencies(oracle::splice(p, m)) - oracle::adjacencies(p));
      REQUIRE(d >= -2);
      REQUIRE(d <= 2);
    }
  }
}

TEST_CASE("adjacency_profile") {
  for (int n = 2; n <= 9; ++n) {
    auto a = adjacency_profile(identity(n));
    CHECK(a.adjacency_count == n - 1);
    CHECK(a.breakpoint_count == 0);
    auto r = adjacency_profile(reverse_perm(n));
    CHECK(r.adjacency_count == (n == 2 ? 1 : 0));
    CHECK(r.breakpoint_count == n - 1 - r.adjacency_count);
  }
  auto q = adjacency_profile({3, 0, 2, 6, 5, 1, 4});
  CHECK(q.adjacency_count == 0);
  CHECK(adjacency_profile({0, 1, 3, 4, 2}).adjacency_positions == std::vector<int>{1, 3});
}

TEST_CASE("reduction examples") {
  CHECK(collapse_runs({4, 6, 1, 2, 3, 0, 5, 7}).reduced == Perm{2, 4, 1, 0, 3, 5});
  CHECK(reduce({3, 2, 1, 0, 4}).reduced == Perm{3, 2, 1, 0});
  CHECK(reduce({3, 2, 1, 0, 4}).trailing_sentinel);
  CHECK(reduce(identity(6)).reduced.empty());
  CHECK(collapse_runs(identity(6)).reduced == Perm{0});
}

TEST_CASE("reduce: lifted units cover every symbol once") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Perm p = random_perm(12, seed);
    Reduction r = collapse_runs(p);
    int total = 0;
    for (int len : r.unit_len) total += len;
    CHECK(total == 12);
    CHECK(is_permutation(r.reduced));
  }
}

TEST_CASE("cyclic_dist") {
  CHECK(cyclic_dist(5, 2, 8) == 3);
  CHECK(cyclic_dist(2, 5, 8) == 5);
  for (int k = 0; k < 8; ++k) CHECK(cyclic_dist(k, k, 8) == 0);
}

TEST_CASE("is_sorted") {
  CHECK(is_sorted(identity(7)));
  CHECK_FALSE(is_sorted(reverse_perm(7)));
  CHECK_FALSE(is_sorted({0, 2, 1}));
}

TEST_CASE("breakpoints_with_sentinel") {
  CHECK(breakpoints_with_sentinel(identity(5)) == 0);
  CHECK(breakpoints_with_sentinel({1, 0}) == 2);
  CHECK(breakpoints_with_sentinel(reverse_perm(4)) == 4);
}

TEST_CASE("parse and format") {
  CHECK(parse_perm("(2, 0, 1)") == Perm{2, 0, 1});
  CHECK(parse_perm("2 0 1") == Perm{2, 0, 1});
  CHECK(format_perm({2, 0, 1}) == "2 0 1");
  CHECK_THROWS_AS(parse_perm("0 0 1"), Error);
  CHECK_THROWS_AS(parse_perm("0 3 1"), Error);
  CHECK_THROWS_AS(parse_perm("0 x 1"), Error);
  CHECK_THROWS_AS(parse_perm(""), Error);
}

TEST_CASE("random_perm is seeded") {
  CHECK(random_perm(50, 7) == random_perm(50, 7));
  CHECK(random_perm(50, 7) != random_perm(50, 8));
  CHECK(is_permutation(random_perm(50, 7)));
}
