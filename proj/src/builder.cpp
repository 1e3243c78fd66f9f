#include "builder.hpp"

namespace prefix_sort::detail {

bool Builder::move(Move mv) {
  if (!ok_) return false;
  int m = w_.m;
  if (mv.i < 2 || mv.j <= mv.i || mv.j > m + 1) return ok_ = false;
  auto c = classify_move(w_.w, mv);
  if (c.delta < 1) return ok_ = false;
  if (!first_[w_.first()]) {
    first_[w_.first()] = 1;
    ++n_first_;
  }
  for (int k = 0; k < mv.i - 1; ++k)
    if (!moved_[w_.at(k)]) {
      moved_[w_.at(k)] = 1;
      ++n_moved_;
    }
  moves_.push_back(mv);
  kinds_.push_back(c.kind);
  w_.apply(mv);
  return true;
}

bool Builder::regular_until(int z) {
  for (int guard = 0; ok_ && first() != z; ++guard) {
    if (guard > w_.m) return ok_ = false;
    Step s = regular_step(w_, x_, y_);
    if (s.id == CaseId::case1) return ok_ = false;
    move(s.move);
  }
  return ok_;
}

bool Builder::regular_to_double() {
  for (int guard = 0; ok_; ++guard) {
    if (guard > w_.m) return ok_ = false;
    Step s = regular_step(w_, x_, y_);
    move(s.move);
    if (s.id == CaseId::case1) break;
  }
  return ok_;
}

Macro Builder::finish(std::string lemma_id, bool special) const {
  Macro mac;
  mac.moves = moves_;
  mac.kinds = kinds_;
  mac.lemma_id = std::move(lemma_id);
  mac.special_case = special;
  mac.claimed_moved = n_moved_;
  mac.claimed_visited = n_first_;
  mac.claimed_skipped = n_moved_ - n_first_;
  return mac;
}

}  // namespace prefix_sort::detail
