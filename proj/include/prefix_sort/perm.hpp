#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prefix_sort {

using Perm = std::vector<int>;

enum class Status {
  ok = 0,
  invalid_argument,
  invalid_permutation,
  invalid_move,
  resource_limit,
  size_mismatch,
  planner_exhausted,
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Status s, const std::string& what) : std::runtime_error(what), status_(s) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

// alpha(i,j), 1-based: pi_1..pi_{i-1} is placed between pi_{j-1} and pi_j.
struct Move {
  int i = 0;
  int j = 0;
  bool operator==(const Move&) const = default;
};

enum class MoveKind { blank, single, double_, setup };

const char* kind_name(MoveKind k);

struct AdjacencyProfile {
  int adjacency_count = 0;
  int breakpoint_count = 0;
  std::vector<int> adjacency_positions;  // 1-based p with pi_p + 1 == pi_{p+1} (mod n)
};

struct Reduction {
  Perm reduced;
  // unit k of the reduced permutation covers symbols [unit_start[k], unit_start[k] + unit_len[k])
  std::vector<int> unit_start;
  std::vector<int> unit_len;
  bool trailing_sentinel = false;  // last run ended at n-1 and was dropped
};

void validate(const Perm& p);
bool is_permutation(const Perm& p);
Perm parse_perm(std::string_view text);
std::string format_perm(const Perm& p, char sep = ' ');

Perm identity(int n);
Perm reverse_perm(int n);
bool is_reverse(const Perm& p);
Perm random_perm(int n, std::uint64_t seed);

void check_move(int n, Move m);
Perm apply_move(const Perm& p, Move m);
void apply_move_inplace(Perm& p, Move m);
Move inverse_move(Move m);

inline bool adjacent_mod(int a, int b, int n) { return a + 1 == b || (a == n - 1 && b == 0); }

// Signed change in the mod-n adjacency count caused by m; computed from the
// (at most) four pairs the move touches.
int adjacency_delta(const Perm& p, Move m);
struct Classification {
  MoveKind kind;
  int delta;
};
Classification classify_move(const Perm& p, Move m);

AdjacencyProfile adjacency_profile(const Perm& p);
int adjacency_count(const Perm& p);
int breakpoints_with_sentinel(const Perm& p);

// Linear adjacency plus a sentinel symbol n appended after the last position.
Reduction reduce(const Perm& p);
// Interior runs only; a trailing run ending at n-1 is kept as a unit.
Reduction collapse_runs(const Perm& p);
// Lift a move on r.reduced back to the permutation r was computed from.
Move lift(const Reduction& r, const Perm& reduced_now, Move m);

int cyclic_dist(int x, int y, int n);
bool is_sorted(const Perm& p);

}  // namespace prefix_sort
