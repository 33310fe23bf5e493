#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "bifixgray/ops_report.hpp"
#include "bifixgray/word.hpp"

namespace bifixgray {

/// Reference builder for the reflected Gray code over {1, ..., q-1}^t.
///
/// Symbol a prefixes the sublist for length t-1, reflected when a-1 is odd.
/// Requires q >= 3. Throws CapacityError when (q-1)^t exceeds `cap`.
WordList build_gray_list(int t, int q, std::uint64_t cap = kDefaultListCap);

/// Closed-form endpoints: first = 1^t; last = (q-1)1^(t-1) for odd q and
/// (q-1)^t for even q.
std::pair<Word, Word> gray_first_last(int t, int q);

/// q * (q^t - 1) / (q - 1) - t, the closed-form odometer cost from the
/// literature. Throws std::overflow_error when it does not fit 64 bits.
std::uint64_t expected_ops(int t, int q);

/// Odometer successor generator for the same list.
///
/// Holds the current word v and a direction per position. `advance()` moves
/// to the next word and returns false once the list is exhausted.
class GrayOdometer {
 public:
  GrayOdometer(int t, int q);

  std::span<const Symbol> word() const { return v_; }
  bool advance();

  /// Number of `i := i - 1` moves performed so far.
  std::uint64_t inner_steps() const { return inner_steps_; }

 private:
  Word v_;
  std::vector<int> dir_;
  int q_;
  std::uint64_t inner_steps_ = 0;
};

/// Streams the list through `emit(std::span<const Symbol>)`.
template <class Emit>
OpsReport gen_tuple_stream(int t, int q, Emit&& emit) {
  GrayOdometer odo(t, q);
  OpsReport ops;
  do {
    emit(odo.word());
    ++ops.words_emitted;
  } while (odo.advance());
  ops.inner_steps = odo.inner_steps();
  return ops;
}

}  // namespace bifixgray
