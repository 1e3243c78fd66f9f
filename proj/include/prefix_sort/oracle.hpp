#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prefix_sort/perm.hpp"

namespace prefix_sort {

constexpr int kDefaultOracleCap = 10;

struct DistanceTable {
  int n = 0;
  int move_count = 0;
  int max_distance = 0;
  std::vector<std::uint8_t> dist;  // indexed by rank()
  std::vector<std::uint64_t> histogram;
};

std::vector<Move> enumerate_moves(int n);

std::uint64_t factorial(int n);
std::uint64_t rank(const Perm& p);
Perm unrank(std::uint64_t r, int n);

DistanceTable build_table(int n, int cap = kDefaultOracleCap);
// Loads from the cache directory when a valid file exists, otherwise builds
// and writes one. An empty dir selects cache_dir().
DistanceTable load_or_build_table(int n, const std::string& dir = "", int cap = kDefaultOracleCap);
std::string cache_dir();
void save_table(const DistanceTable& t, const std::string& path);
bool load_table(const std::string& path, int n, DistanceTable& out);

int exact_distance(const Perm& p, const DistanceTable& t);
std::vector<Move> geodesic(const Perm& p, const DistanceTable& t);

}  // namespace prefix_sort
