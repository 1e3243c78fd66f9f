#include <algorithm>
#include "prefix_sort/oracle.hpp"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace prefix_sort {

namespace {

constexpr char kMagic[4] = {'P', 'X', 'T', 'B'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kMoveSet = 1;  // 2 <= i < j <= n+1
constexpr std::uint8_t kUnseen = 0xFF;

}  // namespace

std::vector<Move> enumerate_moves(int n) {
  std::vector<Move> ms;
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) ms.push_back({i, j});
  return ms;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Lexicographic rank (factorial number system). n is small, so the quadratic
// inner count is cheaper than a Fenwick tree.
std::uint64_t rank(const Perm& p) {
  int n = (int)p.size();
  std::uint64_t r = 0;
  unsigned used = 0;
  for (int k = 0; k < n; ++k) {
    unsigned below = used & ((1u << p[k]) - 1);
    int smaller = p[k] - __builtin_popcount(below);
    r = r * (n - k) + smaller;
    used |= 1u << p[k];
  }
  return r;
}

Perm unrank(std::uint64_t r, int n) {
  std::vector<int> digits(n);
  for (int k = n - 1; k >= 0; --k) {
    digits[k] = (int)(r % (n - k));
    r /= (n - k);
  }
  Perm p(n);
  unsigned used = 0;
  for (int k = 0; k < n; ++k) {
    int want = digits[k];
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      if (want-- == 0) {
        p[k] = v;
        used |= 1u << v;
        break;
      }
    }
  }
  return p;
}

DistanceTable build_table(int n, int cap) {
  if (n < 1) throw Error(Status::invalid_argument, "n must be >= 1");
  if (n > cap) {
    double mb = (double)factorial(n) / (1024.0 * 1024.0);
    throw Error(Status::resource_limit, "n=" + std::to_string(n) + " exceeds oracle cap " +
                                            std::to_string(cap) + " (needs about " +
                                            std::to_string((long long)mb) + " MiB)");
  }
  DistanceTable t;
  t.n = n;
  auto moves = enumerate_moves(n);
  t.move_count = (int)moves.size();
  std::uint64_t total = factorial(n);
  t.dist.assign(total, kUnseen);
  t.dist[rank(identity(n))] = 0;
  std::vector<std::uint64_t> frontier{rank(identity(n))}, next;
  t.histogram.push_back(1);
  std::uint8_t d = 0;
  Perm q(n);
  while (!frontier.empty()) {
    next.clear();
    for (std::uint64_t r : frontier) {
      Perm p = unrank(r, n);
      for (Move m : moves) {
        q = p;
        std::rotate(q.begin(), q.begin() + (m.i - 1), q.begin() + (m.j - 1));
        std::uint64_t rq = rank(q);
        if (t.dist[rq] == kUnseen) {
          t.dist[rq] = d + 1;
          next.push_back(rq);
        }
      }
    }
    if (next.empty()) break;
    ++d;
    t.histogram.push_back(next.size());
    frontier.swap(next);
  }
  t.max_distance = d;
  return t;
}

std::string cache_dir() {
  if (const char* e = std::getenv("PREFIX_SORT_TABLE_DIR"); e && *e) return e;
  if (const char* e = std::getenv("XDG_CACHE_HOME"); e && *e) return std::string(e) + "/prefix_sort";
  if (const char* e = std::getenv("HOME"); e && *e) return std::string(e) + "/.cache/prefix_sort";
  return (std::filesystem::temp_directory_path() / "prefix_sort").string();
}

void save_table(const DistanceTable& t, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Status::io, "cannot write " + path);
  std::uint32_t hdr[3] = {kVersion, (std::uint32_t)t.n, kMoveSet};
  std::uint64_t count = t.dist.size();
  f.write(kMagic, 4);
  f.write(reinterpret_cast<const char*>(hdr), sizeof hdr);
  f.write(reinterpret_cast<const char*>(&count), sizeof count);
  f.write(reinterpret_cast<const char*>(t.dist.data()), (std::streamsize)t.dist.size());
  if (!f) throw Error(Status::io, "short write to " + path);
}

bool load_table(const std::string& path, int n, DistanceTable& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  char magic[4];
  std::uint32_t hdr[3];
  std::uint64_t count = 0;
  f.read(magic, 4);
  f.read(reinterpret_cast<char*>(hdr), sizeof hdr);
  f.read(reinterpret_cast<char*>(&count), sizeof count);
  if (!f || std::memcmp(magic, kMagic, 4) != 0 || hdr[0] != kVersion || hdr[1] != (std::uint32_t)n ||
      hdr[2] != kMoveSet || count != factorial(n))
    return false;
  DistanceTable t;
  t.n = n;
  t.move_count = n * (n - 1) / 2;
  t.dist.resize(count);
  f.read(reinterpret_cast<char*>(t.dist.data()), (std::streamsize)count);
  if (!f) return false;
  for (std::uint8_t d : t.dist) {
    if (d == kUnseen) return false;
    if (d >= t.histogram.size()) t.histogram.resize(d + 1, 0);
    ++t.histogram[d];
  }
  t.max_distance = (int)t.histogram.size() - 1;
  out = std::move(t);
  return true;
}

DistanceTable load_or_build_table(int n, const std::string& dir, int cap) {
  std::string d = dir.empty() ? cache_dir() : dir;
  std::string path = d + "/prefix_n" + std::to_string(n) + ".tbl";
  DistanceTable t;
  if (load_table(path, n, t)) return t;
  t = build_table(n, cap);
  std::error_code ec;
  std::filesystem::create_directories(d, ec);
  try {
    save_table(t, path);
  } catch (const Error&) {
    // cache is best effort
  }
  return t;
}

int exact_distance(const Perm& p, const DistanceTable& t) {
  if ((int)p.size() != t.n)
    throw Error(Status::size_mismatch,
                "permutation size " + std::to_string(p.size()) + " != table n " + std::to_string(t.n));
  validate(p);
  return t.dist[rank(p)];
}

std::vector<Move> geodesic(const Perm& p, const DistanceTable& t) {
  int d = exact_distance(p, t);
  std::vector<Move> path;
  Perm cur = p;
  auto moves = enumerate_moves(t.n);
  while (d > 0) {
    for (Move m : moves) {
      Perm q = apply_move(cur, m);
      if (t.dist[rank(q)] == d - 1) {
        path.push_back(m);
        cur = std::move(q);
        --d;
        break;
      }
    }
  }
  return path;
}

}  // namespace prefix_sort
