#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bifixgray/ops_report.hpp"
#include "bifixgray/word.hpp"

namespace bifixgray {

/// Expansion of a binary trace: the (q-1)^t words obtained by substituting the
/// t ones of `beta`, left to right, with the successive words of the reflected
/// Gray code over {1, ..., q-1}^t.
///
/// q = 2 is accepted as the degenerate case and returns the single word beta.
WordList expand_list(std::span<const Symbol> beta, int q, std::uint64_t cap = kDefaultListCap);

/// In-place expansion state over a word with an immutable prefix.
///
/// Nonzero positions at index >= frozen_len form a doubly linked chain
/// (prec/succ) in increasing order. Each chain position carries a direction
/// of +1 or -1. `run` walks the chain from its right end exactly like the
/// odometer, so a block is produced forward or reflected depending on the
/// directions it starts with.
class ExpandState {
 public:
  static constexpr std::ptrdiff_t kNone = -1;

  /// Directions start at +1 where b_i = 1 and -1 where b_i = q-1 (+1 when
  /// both hold, i.e. q = 2, and for interior symbols).
  ExpandState(Word b, std::size_t frozen_len, int q);

  std::span<const Symbol> word() const { return b_; }
  std::size_t frozen_len() const { return frozen_len_; }
  int direction(std::size_t pos) const { return dir_[pos]; }
  std::ptrdiff_t prec(std::size_t pos) const { return prec_[pos]; }
  std::ptrdiff_t succ(std::size_t pos) const { return succ_[pos]; }

  /// Chain positions, left to right.
  std::vector<std::size_t> chain() const;

  /// Emits the current word, then every successor in the block.
  template <class Emit>
  void run(Emit&& emit, OpsReport& ops);

  /// Transition of the underlying trace at `pos`, keeping the chain and
  /// directions consistent. A nonzero position is unlinked and zeroed; a zero
  /// position is linked in before pos+1 and copies its symbol and direction.
  /// Requires pos > the leftmost chain position and, when inserting, a nonzero
  /// symbol at pos+1.
  void toggle(std::size_t pos, OpsReport& ops);

 private:
  bool saturated(std::size_t i) const {
    return (b_[i] == q_ - 1 && dir_[i] == 1) || (b_[i] == 1 && dir_[i] == -1);
  }

  Word b_;
  std::vector<int> dir_;
  std::vector<std::ptrdiff_t> prec_;
  std::vector<std::ptrdiff_t> succ_;
  std::size_t frozen_len_;
  std::ptrdiff_t tail_ = kNone;
  int q_;
};

template <class Emit>
void ExpandState::run(Emit&& emit, OpsReport& ops) {
  emit(std::span<const Symbol>(b_));
  ++ops.words_emitted;
  for (;;) {
    std::ptrdiff_t i = tail_;
    while (i != kNone && saturated(static_cast<std::size_t>(i))) {
      dir_[i] = -dir_[i];
      i = prec_[i];
      ++ops.inner_steps;
    }
    if (i == kNone) return;
    b_[i] = static_cast<Symbol>(b_[i] + dir_[i]);
    emit(std::span<const Symbol>(b_));
    ++ops.words_emitted;
  }
}

}  // namespace bifixgray
