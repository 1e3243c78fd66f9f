#include "prefix_sort/trace.hpp"

#include <limits>

namespace prefix_sort {

int SortTrace::special_epochs() const {
  int c = 0;
  for (const auto& e : epochs) c += e.special;
  return c;
}

double SortTrace::max_ratio() const {
  double r = 0;
  for (const auto& e : epochs) {
    if (e.special) continue;
    double v = e.skipped ? (double)e.moved / e.skipped : std::numeric_limits<double>::infinity();
    if (v > r) r = v;
  }
  return r;
}

Driver::Driver(const Perm& p, std::string strategy) : p_(p) {
  validate(p);
  adj_ = adjacency_count(p);
  trace_.strategy = std::move(strategy);
  trace_.initial = p;
}

Perm Driver::apply_macro(const Reduction& f, const Macro& mac, EpochRecord e) {
  Perm q = f.reduced;
  e.first_move = (int)trace_.moves.size();
  e.move_count = (int)mac.moves.size();
  e.lemma_id = mac.lemma_id;
  for (size_t k = 0; k < mac.moves.size(); ++k) {
    Move lifted = lift(f, q, mac.moves[k]);
    auto c = classify_move(p_, lifted);
    adj_ += c.delta;
    apply_move_inplace(p_, lifted);
    apply_move_inplace(q, mac.moves[k]);
    MoveKind kind = c.kind;
    if (k < mac.kinds.size() && mac.kinds[k] == MoveKind::setup) kind = MoveKind::setup;
    trace_.moves.push_back({lifted, kind, c.delta, adj_, mac.lemma_id});
  }
  if (!mac.moves.empty()) e.ends_with_double = trace_.moves.back().kind == MoveKind::double_;
  trace_.epochs.push_back(e);
  return q;
}

void Driver::rotate_finish() {
  int n = (int)p_.size();
  if (is_sorted(p_)) return;
  int k = p_[0];
  Move mv{n - k + 1, n + 1};
  auto c = classify_move(p_, mv);
  adj_ += c.delta;
  apply_move_inplace(p_, mv);
  EpochRecord e;
  e.first_move = (int)trace_.moves.size();
  e.move_count = 1;
  e.m = 1;
  e.moved = n - k;
  e.visited = 1;
  e.skipped = n - k - 1;
  e.special = true;
  e.lemma_id = "rotate";
  trace_.moves.push_back({mv, MoveKind::setup, c.delta, adj_, "rotate"});
  trace_.epochs.push_back(e);
}

SortTrace Driver::finish() {
  trace_.final_perm = p_;
  return std::move(trace_);
}

std::string format_trace_text(const SortTrace& t, bool with_perm) {
  std::string s;
  Perm p = t.initial;
  int step = 0;
  for (const auto& r : t.moves) {
    apply_move_inplace(p, r.move);
    s += "step " + std::to_string(++step) + ": \xCE\xB1(" + std::to_string(r.move.i) + "," +
         std::to_string(r.move.j) + ") kind=" + kind_name(r.kind) +
         " adj=" + std::to_string(r.adjacencies_after);
    if (with_perm) s += " " + format_perm(p);
    s += '\n';
  }
  return s;
}

std::string format_trace_csv(const SortTrace& t) {
  std::string s = "step,i,j,kind,adjacencies_after,lemma_id\n";
  int step = 0;
  for (const auto& r : t.moves)
    s += std::to_string(++step) + "," + std::to_string(r.move.i) + "," + std::to_string(r.move.j) +
         "," + kind_name(r.kind) + "," + std::to_string(r.adjacencies_after) + "," + r.lemma_id +
         "\n";
  return s;
}

std::string replay_check(const SortTrace& t) {
  Perm p = t.initial;
  int adj = adjacency_count(p);
  for (size_t k = 0; k < t.moves.size(); ++k) {
    const auto& r = t.moves[k];
    try {
      adj += adjacency_delta(p, r.move);
      apply_move_inplace(p, r.move);
    } catch (const Error& e) {
      return "move " + std::to_string(k + 1) + ": " + e.what();
    }
    if (adj != r.adjacencies_after)
      return "move " + std::to_string(k + 1) + ": adjacency count mismatch";
  }
  if (adj != adjacency_count(p)) return "adjacency count drifted from a direct count";
  if (p != t.final_perm) return "final permutation mismatch";
  if (!is_sorted(p)) return "replay does not reach identity";
  int sum = 0;
  for (const auto& e : t.epochs) sum += e.move_count;
  if (sum != t.total_moves()) return "epoch move counts do not sum to total";
  return "";
}

}  // namespace prefix_sort
