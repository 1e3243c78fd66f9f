#include "prefix_sort/blocks.hpp"

#include <algorithm>

#include "builder.hpp"

namespace prefix_sort {

using detail::Builder;

std::vector<Block> prefix_blocks(const Perm& p) {
  std::vector<Block> out;
  int lo = p.empty() ? 0 : p[0], hi = lo;
  for (int k = 1; k < (int)p.size(); ++k) {
    lo = std::min(lo, p[k]);
    hi = std::max(hi, p[k]);
    if (hi - lo == k) out.push_back({0, k, lo, hi});
  }
  return out;
}

BlockMinCheck block_min_is_last_visited(const Perm& p, const Block& b,
                                        const LabeledPermutation& lp) {
  BlockMinCheck r;
  if (b.size() >= (int)p.size()) return r;
  int best = -1;
  for (int k = b.start; k <= b.end; ++k) {
    if (lp.labels[k] == Label::visited) r.last_visited = p[k];
    if (best < 0 || lp.canon(p[k]) < lp.canon(best)) best = p[k];
  }
  if (r.last_visited < 0) return r;
  r.applicable = true;
  r.min_symbol = best;
  r.ok = r.last_visited == best;
  if (!r.ok)
    r.detail = "block [" + std::to_string(b.start) + "," + std::to_string(b.end) +
               "] of " + format_perm(p) + ": last visited " + std::to_string(r.last_visited) +
               ", minimum " + std::to_string(best);
  return r;
}

namespace {

Perm canonical(const LabeledPermutation& lp) {
  Perm c(lp.m);
  for (int k = 0; k < lp.m; ++k) c[k] = lp.canon(lp.base[k]);
  return c;
}

// label(c) without re-running the epoch: labeling commutes with cyclic shifts
LabeledPermutation canonical_label(const LabeledPermutation& lp, const Perm& c) {
  LabeledPermutation r = lp;
  r.base = c;
  r.x = lp.canon(lp.x);
  r.y = lp.canon(lp.y);
  for (int& v : r.visited) v = lp.canon(v);
  for (int& v : r.skipped_before)
    if (v >= 0) v = lp.canon(v);
  return r;
}

// Planner state on the canonical frame: x is m-1 and t_k is 0, so visited
// symbols decrease along the permutation and plain integer order applies.
class Planner {
 public:
  explicit Planner(const LabeledPermutation& lp)
      : c_(canonical(lp)), lp_(canonical_label(lp, c_)), m_(lp.m), pos_(m_), vidx_(m_, -1) {
    for (int k = 0; k < m_; ++k) pos_[c_[k]] = k;
    for (int a = 0; a < lp_.k(); ++a) vidx_[lp_.visited[a]] = a;
  }

  Macro plan();

 private:
  Perm c_;
  LabeledPermutation lp_;
  int m_;
  std::vector<int> pos_, vidx_;

  int md(int v) const { return ((v % m_) + m_) % m_; }
  int pos(int v) const { return pos_[md(v)]; }
  bool visited(int v) const { return lp_.labels[pos(v)] == Label::visited; }
  bool skipped(int v) const { return lp_.labels[pos(v)] == Label::skipped; }
  // next visited symbol to the right of position k, -1 if none
  int next_visited(int k) const {
    for (int q = k + 1; q < m_; ++q)
      if (lp_.labels[q] == Label::visited) return c_[q];
    return -1;
  }
  Builder builder() const { return Builder(c_, lp_.x, lp_.y); }

  static bool done(const Builder& b) { return b.ok() && b.size() > 0; }
  bool accept(const Builder& b) const {
    if (!done(b)) return false;
    return detail::ratio_ok(b.finish("", false), 2, 1);
  }

  // repeat ([f, ...], f-1, * ...) until target is first
  void chain_until(Builder& b, int target) const;
  std::optional<Macro> lemma2(int tm, int s) const;
  std::optional<Macro> lemma2_any(int interval) const;
  std::optional<Macro> lemma3(int len) const;
  std::optional<Macro> block_case(int len);
  std::optional<Macro> lemma5();
  std::optional<Macro> exceptional(int s, int l, int len);
  std::optional<Macro> regular_to(int interval, const char* id) const;

 public:
  // Macros outside the case analysis: the two-for-one cascade at any skipped
  // symbol, then a single move of at least two symbols creating an adjacency.
  std::optional<Macro> recover() const;
};

void Planner::chain_until(Builder& b, int target) const {
  for (int guard = 0; b.ok() && b.first() != target; ++guard) {
    if (guard > m_) {
      b.fail();
      return;
    }
    int f = b.first();
    if (f == 0) {
      b.fail();
      return;
    }
    b.before_after(f - 1, f - 1);
  }
}

std::optional<Macro> Planner::regular_to(int interval, const char* id) const {
  Builder b = builder();
  b.regular_until(lp_.visited[interval - 1]);
  if (!accept(b)) return std::nullopt;
  return b.finish(id, false);
}

// Skipped s left of tm with s+1 right of tm: move the prefix through s
// before s+1, then clear the rest of the interval one symbol at a time.
std::optional<Macro> Planner::lemma2(int tm, int s) const {
  if (s + 1 >= m_ || pos(s + 1) <= pos(tm)) return std::nullopt;
  Builder b = builder();
  b.after_before(s, s + 1);
  for (int guard = 0; b.ok() && b.first() != tm; ++guard) {
    if (guard > m_) b.fail();
    int f = b.first();
    if (f == 0) {
      b.fail();
      break;
    }
    if (b.pos(f - 1) < b.pos(tm))
      b.before_after(f - 1, f - 1);
    else
      b.before_after(tm, f - 1);
  }
  if (!accept(b)) return std::nullopt;
  return b.finish("L5.2", false);
}

std::optional<Macro> Planner::lemma2_any(int interval) const {
  int lo = lp_.visited_pos[interval - 2], hi = lp_.visited_pos[interval - 1];
  for (int q = lo + 1; q < hi; ++q)
    if (auto mac = lemma2(lp_.visited[interval - 1], c_[q])) return mac;
  return std::nullopt;
}

// Skipped successor of the prefix block of length len.
std::optional<Macro> Planner::lemma3(int len) const {
  int t = next_visited(len);
  if (t < 0) return std::nullopt;
  if (auto mac = lemma2_any(vidx_[t] + 1)) {
    mac->lemma_id = "L5.3";
    return mac;
  }
  return std::nullopt;
}

std::optional<Macro> Planner::block_case(int len) {
  int extensions = 0;
  for (int guard = 0; guard <= m_; ++guard) {
    if (len >= m_ - 2) return std::nullopt;
    int tj = *std::min_element(c_.begin(), c_.begin() + len);
    int j = 0, last = -1;
    for (int k = 0; k < len; ++k)
      if (lp_.labels[k] == Label::visited) {
        ++j;
        last = c_[k];
      }
    if (last != tj)
      throw Error(Status::internal, "block minimum is not the last visited symbol in " +
                                        format_perm(c_));
    const bool c_has_skips = len > j;
    int T = c_[len];
    if (lp_.labels[len] == Label::skipped) return lemma3(len);
    if (lp_.labels[len] != Label::visited) return std::nullopt;
    int l = tj - T;
    if (l == 1) {
      ++len;
      if (++extensions > 8) {
        if (auto d = detect_r8_prime(c_)) return r8_macro(c_, *d);
      }
      continue;
    }
    if (l < 1) return std::nullopt;
    int beta_pos = len + 1;
    if (beta_pos >= m_ - 2) return std::nullopt;
    if (lp_.labels[beta_pos] == Label::visited) {
      Builder b = builder();
      b.after_before(T, T + 1);
      if (!accept(b)) return std::nullopt;
      return b.finish("L5.4-c1", false);
    }
    if (lp_.labels[beta_pos] != Label::skipped) return std::nullopt;
    int p2 = next_visited(beta_pos);
    if (p2 < 0) return std::nullopt;
    std::vector<int> cs(c_.begin() + beta_pos, c_.begin() + pos(p2));
    int k = (int)cs.size();
    if (auto mac = lemma2_any(vidx_[p2] + 1)) {
      mac->lemma_id = "L5.4-c2-lemma2";
      return mac;
    }
    std::vector<int> sorted_cs = cs;
    std::sort(sorted_cs.begin(), sorted_cs.end());
    for (int q = 0; q < k; ++q)
      if (sorted_cs[q] != tj - k + q)
        throw Error(Status::internal, "consecutive-skip check failed: skipped symbols after " +
                                          std::to_string(T) + " in " + format_perm(c_) +
                                          " are not consecutive below " + std::to_string(tj));
    if (k >= l) return std::nullopt;
    if (k > j) return std::nullopt;
    Builder b = builder();
    std::string id;
    auto tail_after_p2 = [&](int& p3, int& cc) {
      cc = -1;
      p3 = next_visited(pos(p2));
      if (p3 < 0) return false;
      int gap = pos(p3) - pos(p2) - 1;
      if (gap > 1) return false;
      if (gap == 1) cc = c_[pos(p2) + 1];
      return true;
    };
    if (k < l - 1) {
      if (k < j) {
        id = "L5.4-c2.1-i";
        b.after_before(T, T + 1);
        chain_until(b, tj - k);
        b.before_after(p2, tj - k - 1);
      } else {
        int p3, cc;
        if (!tail_after_p2(p3, cc)) return std::nullopt;
        if (pos(p2 + 1) > pos(p3)) {
          id = "L5.4-c2.1-ii";
          b.after_before(p2, p2 + 1);
          if (cc >= 0) b.after_before(cc, cc + 1);
        } else if (p2 + 1 != T) {
          return std::nullopt;
        } else if (cc != T + 1) {
          id = "L5.4-c2.1-ii-b";
          b.after_before(T, T + 1);
          b.after_before(p2, T);
          if (cc >= 0) b.after_before(cc, cc + 1);
        } else if (k < l - 2) {
          id = "L5.4-c2.1-ii-c";
          b.after_before(T, T + 1);
          chain_until(b, tj - k);
          b.before_after(p3, tj - k - 1);
        } else if (c_has_skips) {
          id = "L5.4-c2.1-ii-d(a)";
          b.after_before(T, T + 1);
          chain_until(b, tj - k);
          b.before_after(p2, tj - k - 1);
          b.before_after(p3, p2 - 1);
        } else {
          len = pos(p3);
          extensions = 0;
          continue;
        }
      }
    } else {
      int p3 = -1, cc = -1;
      if (k < j) {
        id = "L5.4-c2.2-i";
      } else {
        if (!tail_after_p2(p3, cc)) return std::nullopt;
        if (pos(p2 + 1) > pos(p3)) {
          id = "L5.4-c2.2-ii";
          b.after_before(p2, p2 + 1);
          if (cc >= 0) b.after_before(cc, cc + 1);
        } else if (p2 + 1 != T) {
          return std::nullopt;
        } else if (c_has_skips) {
          id = "L5.4-c2.2-ii(a)";
        } else {
          len = pos(p2) + 1;
          extensions = 0;
          continue;
        }
      }
      if (id == "L5.4-c2.2-i" || id == "L5.4-c2.2-ii(a)") {
        b.after_before(T, T + 1);
        chain_until(b, T + 2);
        b.before_after(T, T + 1);
        b.before_after(p2, T - 1);
      }
    }
    if (!accept(b)) return std::nullopt;
    return b.finish(id, false);
  }
  return std::nullopt;
}

// (t_1, t_2) not a block and t_2 visited.
std::optional<Macro> Planner::lemma5() {
  const int t2 = c_[1];
  if (lp_.labels[2] == Label::visited) {
    Builder b = builder();
    b.after_before(t2, t2 + 1);
    if (!accept(b)) return std::nullopt;
    return b.finish("L5.5-a", false);
  }
  if (lp_.labels[2] != Label::skipped || lp_.labels[3] == Label::skipped) return std::nullopt;
  const int s = c_[2];
  if (auto mac = lemma2(c_[3], s)) {
    mac->lemma_id = "L5.5-lemma2";
    return mac;
  }
  if (s + 1 != c_[0]) return std::nullopt;
  const int l = s - t2;
  if (l < 2) return std::nullopt;
  // Stage r: positions 2q+1 hold s-l-q and 2q+2 hold s-q for q < r.
  for (int r = 1;; ++r) {
    const int tp = 2 * r + 1, bp = tp + 1;
    if (bp >= m_ || lp_.labels[tp] == Label::skipped) return std::nullopt;
    const int tr = c_[tp], beta = c_[bp];
    const bool pattern = tr == md(s - l - r) && beta == md(s - r);
    if (pattern && beta == md(s - l + 1)) return exceptional(s, l, bp + 1);
    if (lp_.labels[tp] == Label::visited && lp_.labels[bp] == Label::visited) {
      Builder b = builder();
      for (int q = 0; q < r; ++q) b.before_after(s - q, s - q);
      b.before_after(beta, s - r);
      if (!accept(b)) return std::nullopt;
      return b.finish("L5.5-c1", false);
    }
    if (lp_.labels[tp] == Label::visited && lp_.labels[bp] == Label::skipped && bp + 1 < m_ &&
        lp_.labels[bp + 1] != Label::skipped) {
      const int tn = c_[bp + 1];
      if (auto mac = lemma2(tn, beta)) {
        mac->lemma_id = "L5.5-c2-lemma2";
        return mac;
      }
      if (lp_.labels[bp + 1] == Label::visited && tr + 1 < m_ && pos(tr + 1) > pos(tn)) {
        Builder b = builder();
        b.after_before(tr, tr + 1);
        b.after_before(beta, beta + 1);
        if (!accept(b)) return std::nullopt;
        return b.finish("L5.5-c2", false);
      }
    }
    if (!pattern) return std::nullopt;
  }
}

// Exceptional two-block forms: the prefix through s-l+1, optionally followed by s-2l.
std::optional<Macro> Planner::exceptional(int s, int l, int len) {
  if (len < m_ && c_[len] == md(s - 2 * l)) ++len;
  bool later_skips = false;
  for (int q = len; q < m_; ++q)
    if (lp_.labels[q] == Label::skipped) later_skips = true;
  if (later_skips && len < m_ - 2) {
    if (lp_.labels[len] == Label::skipped) return lemma3(len);
    return block_case(len);
  }
  Builder b = builder();
  for (int q = 0; b.ok() && b.first() != md(s - l + 2); ++q) {
    if (q > l) b.fail();
    b.before_after(s - q, s - q);
  }
  b.before_after(s - l, s - l + 1);
  if (!done(b)) return std::nullopt;
  return b.finish("S2-exceptional", true);
}

std::optional<Macro> Planner::recover() const {
  int boundary = -1;
  for (int q = m_ - 1; q >= 1; --q) {
    if (lp_.labels[q] != Label::skipped) {
      boundary = c_[q];
      continue;
    }
    if (boundary >= 0)
      if (auto mac = lemma2(boundary, c_[q])) {
        mac->lemma_id = "lemma2-any";
        return mac;
      }
  }
  Move best{0, 0};
  int best_delta = 0;
  auto consider = [&](Move mv) {
    if (mv.i < 3 || mv.j <= mv.i || mv.j > m_ + 1) return;
    int d = classify_move(c_, mv).delta;
    if (d > best_delta) {
      best_delta = d;
      best = mv;
    }
  };
  const int before = pos(c_[0] - 1);
  for (int len = 2; len < m_; ++len) {
    consider({len + 1, pos(c_[len - 1] + 1) + 1});
    if (before >= len) consider({len + 1, before + 2});
  }
  if (best_delta < 1) return std::nullopt;
  Builder b = builder();
  b.move(best);
  if (!accept(b)) return std::nullopt;
  return b.finish("single-move", false);
}

Macro Planner::plan() {
  if (auto d = detect_r8_prime(c_)) return r8_macro(c_, *d);
  const int k = lp_.k();
  int first_skip = 0;
  for (int i = 2; i <= k && !first_skip; ++i)
    if (lp_.interval_skips(i) > 0) first_skip = i;
  if (!first_skip) {
    bool rotated_reverse = m_ >= 8;
    for (int q = 0; q < m_ && rotated_reverse; ++q) rotated_reverse = c_[q] == md(m_ + 1 - q);
    if (rotated_reverse) {
      Macro mac = sort_rn(m_);
      mac.lemma_id = "Rn-tail";
      return mac;
    }
    Builder b = builder();
    b.regular_to_double();
    if (!done(b)) throw Error(Status::internal, "terminal epoch failed on " + format_perm(c_));
    return b.finish("terminal", true);
  }
  if (first_skip == 2)
    if (auto mac = regular_to(2, "L5.1")) return *mac;
  for (int i = 2; i <= k; ++i)
    if (lp_.interval_skips(i) >= i - 1)
      if (auto mac = regular_to(i, "ob1")) return *mac;
  for (int i = 3; i < k; ++i)
    if (lp_.interval_skips(i) == i - 2 && lp_.interval_skips(i + 1) >= 2)
      if (auto mac = regular_to(i + 1, "ob2")) return *mac;
  std::optional<Macro> mac;
  if (c_[1] == c_[0] - 1)
    mac = block_case(2);
  else if (lp_.labels[1] == Label::visited)
    mac = lemma5();
  if (mac) return *mac;
  throw Error(Status::planner_exhausted, "no block case applies to " + format_perm(c_));
}

}  // namespace

std::string check_block_minimum(const Perm& q) {
  LabeledPermutation lp = label(q);
  for (const Block& b : prefix_blocks(q)) {
    BlockMinCheck r = block_min_is_last_visited(q, b, lp);
    if (r.applicable && !r.ok) return r.detail;
  }
  return {};
}

Macro plan_blocks(const LabeledPermutation& lp) { return Planner(lp).plan(); }

Macro plan_blocks_epoch(const Perm& q, EpochRecord& e) {
  const int m = (int)q.size();
  if (m >= 4 && is_reverse(q)) {
    Macro mac = sort_rn(m);
    mac.lemma_id = "Rn-tail";
    e.special = true;
    return mac;
  }
  LabeledPermutation lp = label_trusted(q);
  for (int i = 2; i <= lp.k(); ++i)
    if (lp.interval_skips(i) > 0) {
      e.first_skip_interval = i;
      break;
    }
  Planner planner(lp);
  try {
    Macro mac = planner.plan();
    if (mac.special_case || detail::ratio_ok(mac, 2, 1)) return mac;
  } catch (const Error& err) {
    if (err.status() != Status::planner_exhausted) throw;
  }
  if (auto mac = planner.recover()) return *mac;
  Macro mac;
  mac.lemma_id = "fallback";
  for (const Step& s : lp.steps) mac.moves.push_back(s.move);
  auto a = account(q, mac.moves);
  mac.claimed_moved = a.moved;
  mac.claimed_visited = a.visited;
  mac.claimed_skipped = a.skipped;
  return mac;
}

}  // namespace prefix_sort
