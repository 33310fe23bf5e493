#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bifixgray/expansion.hpp"
#include "bifixgray/fib_words.hpp"
#include "bifixgray/ops_report.hpp"
#include "bifixgray/word.hpp"

namespace bifixgray {

enum class Execution { serial, parallel };

/// True iff w = 0^k s_{k+1} ... s_n with s_{k+1} != 0, s_n != 0 and no k
/// consecutive zeros in s_{k+2} ... s_{n-1}. Words shorter than k+2 are never
/// members.
bool is_member(std::span<const Symbol> w, int k);

/// No proper prefix of either word equals the same-length suffix of the
/// other. With u == v this is the unbordered-word test.
bool is_cross_bifix_free_pair(std::span<const Symbol> u, std::span<const Symbol> v);

/// The prefix of length `length` of list[prefix_owner] equals the suffix of
/// the same length of list[suffix_owner].
struct BifixOverlap {
  std::size_t prefix_owner;
  std::size_t suffix_owner;
  std::size_t length;

  auto operator<=>(const BifixOverlap&) const = default;
};

struct SetCheckResult {
  bool ok = true;
  /// Lexicographically smallest (prefix_owner, suffix_owner, length) overlap.
  std::optional<BifixOverlap> first_overlap;
};

/// Cross-bifix-freeness of a whole list, self-pairs included.
///
/// Indexes every proper prefix once, then looks up every proper suffix, so
/// the cost is O(|L| n) hash operations. The parallel path splits the suffix
/// lookups across OpenMP threads and returns the same result.
SetCheckResult check_cross_bifix_free_set(const WordList& list, Execution exec = Execution::serial);

/// Pair-grid reference for the check above: O(|L|^2 n^2), serial.
SetCheckResult check_cross_bifix_free_set_reference(const WordList& list);

inline bool is_cross_bifix_free_set(const WordList& list, Execution exec = Execution::serial) {
  return check_cross_bifix_free_set(list, exec).ok;
}

/// Number of words of length n with nonzero ends and no k consecutive zeros.
std::uint64_t count_h(int n, int q, int k);

/// |S(n, q, k)|, by a dynamic program over (position, trailing zero run).
/// Accepts k = 1.
std::uint64_t count_s(int n, int q, int k);

/// Reference builder: q = 2 gives 1·F_{n-2}·1; otherwise the expansions of
/// 1φ1 for φ in F_{n-2}, alternately forward and reflected.
WordList build_h_list(int n, int q, int k, std::uint64_t cap = kDefaultListCap);

/// 0^k · H_{n-k}. Requires generator-valid parameters.
WordList build_s_list(int n, int q, int k, std::uint64_t cap = kDefaultListCap);

struct TraceBlockReport {
  std::size_t block_count = 0;
  std::vector<std::size_t> block_sizes;
  std::vector<Trace> block_traces;
};

/// Groups maximal runs of words sharing a trace.
TraceBlockReport trace_partition(const WordList& list);

namespace detail {

/// Streams 0^prefix · H_{total - prefix} without materializing it.
///
/// Starts from 0^prefix 1 first(F) 1, emits its whole trace block, then lets
/// the F recursion over the inner window drive one toggle plus one block per
/// transition. For q = 2 every block is a single word, so the transition is a
/// plain bit flip.
template <class Emit>
OpsReport stream_blocks(std::size_t prefix, std::size_t total, int q, int k, Emit& emit) {
  const std::size_t inner = total - prefix - 2;
  Word b(total, 0);
  b[prefix] = 1;
  b[total - 1] = 1;
  if (inner > 0) {
    const Word first = f_first_last(static_cast<int>(inner), k).first;
    std::copy(first.begin(), first.end(), b.begin() + static_cast<std::ptrdiff_t>(prefix + 1));
  }
  const std::size_t begin = prefix + 1;
  const std::size_t end = total - 1;

  OpsReport ops;
  if (q == 2) {
    emit(std::span<const Symbol>(b));
    ++ops.words_emitted;
    ops.recursive_calls = gen_fib_stream(begin, end, k, [&](std::size_t pos) {
      b[pos] = static_cast<Symbol>(1 - b[pos]);
      emit(std::span<const Symbol>(b));
      ++ops.words_emitted;
    });
    return ops;
  }
  ExpandState state(std::move(b), prefix, q);
  state.run(emit, ops);
  ops.recursive_calls = gen_fib_stream(begin, end, k, [&](std::size_t pos) {
    state.toggle(pos, ops);
    state.run(emit, ops);
  });
  return ops;
}

}  // namespace detail

/// Streams build_h_list(n, q, k) through `emit(std::span<const Symbol>)`.
/// The span is only valid during the call.
template <class Emit>
OpsReport stream_h(int n, int q, int k, Emit&& emit) {
  if (n < 2 || q < 2 || q > kMaxAlphabet || k < 2) {
    throw std::invalid_argument("stream_h needs n >= 2, 2 <= q <= 256, k >= 2");
  }
  return detail::stream_blocks(0, static_cast<std::size_t>(n), q, k, emit);
}

/// Streams build_s_list(n, q, k) in constant amortized time per word.
/// The span passed to `emit` is only valid during the call.
template <class Emit>
OpsReport stream_s(int n, int q, int k, Emit&& emit) {
  const Params p = Params::generator(n, q, k);
  return detail::stream_blocks(static_cast<std::size_t>(p.k()), static_cast<std::size_t>(p.n()), p.q(),
                               p.k(), emit);
}

}  // namespace bifixgray
