#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "bifixgray/ops_report.hpp"
#include "bifixgray/word.hpp"

namespace bifixgray {

/// Binary Gray code on {0,1}^n: C_0 = (λ), C_n = 1·rev(C_{n-1}) ∘ 0·C_{n-1}.
WordList build_c_list(int n, std::uint64_t cap = kDefaultListCap);

/// Gray code on the length-n binary words with no k consecutive zeros.
///
/// Built through the two-way recursion on F_n(u), the sublist of words that
/// begin with at most u zeros:
///   F_0(u) = (λ)
///   F_n(0) = 1·rev(F_{n-1}(k-1))
///   F_n(u) = 1·rev(F_{n-1}(k-1)) ∘ 0·F_{n-1}(u-1)
/// and F_n = F_n(k-1). Requires k >= 2.
WordList build_f_list(int n, int k, std::uint64_t cap = kDefaultListCap);

/// k-generalized Fibonacci number: 2^n for n < k, else the sum of the k
/// previous terms. Throws std::overflow_error past 64 bits.
std::uint64_t fib_count(int n, int k);

/// Endpoints of build_f_list(n, k): the length-n prefixes of (10^{k-1}1)^∞
/// and (0^{k-1}11)^∞.
std::pair<Word, Word> f_first_last(int n, int k);

/// 0-based index of the single position where two adjacent words of an F list
/// differ. Throws ContractViolation unless the words differ in exactly one
/// position p with p the last index or a[p+1] = b[p+1] = 1.
std::size_t transition_position(std::span<const Symbol> a, std::span<const Symbol> b);

/// Recursive transition generator for F lists.
///
/// Walks the positions [begin, end) of a caller-owned word and calls
/// `process(pos)` once per transition, with pos the 0-based position that
/// flips. The caller holds the word and any auxiliary state; process never
/// sees anything but the position.
template <class Process>
class FibRecursion {
 public:
  FibRecursion(std::size_t begin, std::size_t end, int k, Process& process)
      : begin_(begin), end_(end), k_(k), process_(process) {
    if (k < 2) throw std::invalid_argument("gen_fib needs k >= 2");
  }

  /// Runs the whole recursion from the window start with u = k-1, dir = 0.
  void run() { visit(begin_, k_ - 1, 0); }

  std::uint64_t calls() const { return calls_; }

 private:
  void visit(std::size_t pos, int u, int dir) {
    ++calls_;
    if (pos >= end_) return;
    if (u == 0) {
      visit(pos + 1, k_ - 1, 1 - dir);
    } else if (dir == 0) {
      visit(pos + 1, k_ - 1, 1);
      process_(pos);
      visit(pos + 1, u - 1, 0);
    } else {
      visit(pos + 1, u - 1, 1);
      process_(pos);
      visit(pos + 1, k_ - 1, 0);
    }
  }

  std::size_t begin_;
  std::size_t end_;
  int k_;
  Process& process_;
  std::uint64_t calls_ = 0;
};

/// Runs the transition recursion over [begin, end). Returns the call count.
template <class Process>
std::uint64_t gen_fib_stream(std::size_t begin, std::size_t end, int k, Process&& process) {
  FibRecursion<std::remove_reference_t<Process>> rec(begin, end, k, process);
  rec.run();
  return rec.calls();
}

/// Streams build_f_list(n, k) word by word through `emit(span)`.
template <class Emit>
OpsReport stream_f_list(int n, int k, Emit&& emit) {
  if (n < 0) throw std::invalid_argument("negative length");
  Word b = n > 0 ? f_first_last(n, k).first : Word{};
  OpsReport ops;
  emit(std::span<const Symbol>(b));
  ++ops.words_emitted;
  ops.recursive_calls = gen_fib_stream(0, b.size(), k, [&](std::size_t pos) {
    b[pos] = static_cast<Symbol>(1 - b[pos]);
    emit(std::span<const Symbol>(b));
    ++ops.words_emitted;
  });
  return ops;
}

/// Streams build_c_list(n). C_n coincides with the F list for any k > n.
template <class Emit>
OpsReport stream_c_list(int n, Emit&& emit) {
  return stream_f_list(n, n + 2, std::forward<Emit>(emit));
}

}  // namespace bifixgray
