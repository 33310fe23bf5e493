#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bifixgray/crossbifix.hpp"
#include "bifixgray/ops_report.hpp"
#include "bifixgray/word.hpp"

// Independent reference implementations. Nothing in here calls into the
// generators or predicates it is used to check.
namespace bifixgray::oracle {

inline constexpr std::uint64_t kDefaultBruteForceBound = std::uint64_t{1} << 22;

/// All words of {0..q-1}^n in the cross-bifix-free family, sorted
/// lexicographically. Throws CapacityError when q^n exceeds `bound`.
WordList brute_force_s(int n, int q, int k, Execution exec = Execution::serial,
                       std::uint64_t bound = kDefaultBruteForceBound);

/// Length-n binary words with no k consecutive zeros, sorted.
WordList brute_force_avoiding(int n, int k);

struct GrayViolation {
  std::size_t index;     // first word of the offending adjacent pair
  std::size_t distance;  // its Hamming distance
};

struct GrayCheckReport {
  bool ok = true;
  std::optional<GrayViolation> first_violation;
  std::size_t max_distance = 0;
};

/// Every adjacent pair must be at Hamming distance exactly 1. Lists with
/// fewer than two words pass vacuously.
GrayCheckReport verify_gray(const WordList& list);

/// Within runs of equal trace, the single changed symbol must move by +1 or
/// -1. Returns the index of the first offending pair, if any.
std::optional<std::size_t> first_non_unit_step(const WordList& list);

/// Sorted copy, for set comparison.
WordList sorted(WordList list);

enum class CatTarget { gen_tuple, gen_fib, stream_s };

struct CatPoint {
  int size;
  OpsReport ops;
};

/// Runs the chosen generator once per size and records its counters. Sizes
/// are t for gen_tuple and n otherwise; q is ignored by gen_fib and k by
/// gen_tuple.
std::vector<CatPoint> measure_cat(CatTarget target, int q, int k, std::span<const int> sizes);

}  // namespace bifixgray::oracle
