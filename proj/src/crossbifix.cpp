#include "bifixgray/crossbifix.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <unordered_map>

#include "bifixgray/detail/checked.hpp"

namespace bifixgray {

bool is_member(std::span<const Symbol> w, int k) {
  if (k < 1) throw std::invalid_argument("is_member needs k >= 1");
  const auto kk = static_cast<std::size_t>(k);
  const std::size_t n = w.size();
  if (n < kk + 2) return false;
  for (std::size_t i = 0; i < kk; ++i) {
    if (w[i] != 0) return false;
  }
  if (w[kk] == 0 || w[n - 1] == 0) return false;
  std::size_t run = 0;
  for (std::size_t i = kk + 1; i + 1 < n; ++i) {
    run = w[i] == 0 ? run + 1 : 0;
    if (run >= kk) return false;
  }
  return true;
}

bool is_cross_bifix_free_pair(std::span<const Symbol> u, std::span<const Symbol> v) {
  if (u.size() != v.size()) throw std::invalid_argument("is_cross_bifix_free_pair: length mismatch");
  const std::size_t n = u.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (std::equal(u.begin(), u.begin() + len, v.end() - len)) return false;
    if (std::equal(v.begin(), v.begin() + len, u.end() - len)) return false;
  }
  return true;
}

namespace {

std::size_t common_length(const WordList& list) {
  const std::size_t n = list.empty() ? 0 : list.front().size();
  for (const Word& w : list) {
    if (w.size() != n) throw std::invalid_argument("word list mixes lengths");
  }
  return n;
}

std::string_view bytes(const Word& w, std::size_t from, std::size_t len) {
  return {reinterpret_cast<const char*>(w.data()) + from, len};
}

}  // namespace

SetCheckResult check_cross_bifix_free_set(const WordList& list, Execution exec) {
  const std::size_t n = common_length(list);
  if (n < 2) return {};

  // Smallest index owning each proper prefix. Views point into `list`.
  std::unordered_map<std::string_view, std::size_t> owner;
  owner.reserve(list.size() * (n - 1));
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t len = 1; len < n; ++len) owner.try_emplace(bytes(list[i], 0, len), i);
  }

  std::vector<std::optional<BifixOverlap>> best(list.size());
  const auto count = static_cast<std::ptrdiff_t>(list.size());
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    const Word& w = list[static_cast<std::size_t>(j)];
    std::optional<BifixOverlap> local;
    for (std::size_t len = 1; len < n; ++len) {
      auto it = owner.find(bytes(w, n - len, len));
      if (it == owner.end()) continue;
      BifixOverlap cand{it->second, static_cast<std::size_t>(j), len};
      if (!local || cand < *local) local = cand;
    }
    best[static_cast<std::size_t>(j)] = local;
  }

  SetCheckResult result;
  for (const auto& cand : best) {
    if (cand && (!result.first_overlap || *cand < *result.first_overlap)) result.first_overlap = cand;
  }
  result.ok = !result.first_overlap.has_value();
  return result;
}

SetCheckResult check_cross_bifix_free_set_reference(const WordList& list) {
  const std::size_t n = common_length(list);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      for (std::size_t len = 1; len < n; ++len) {
        if (std::equal(list[i].begin(), list[i].begin() + len, list[j].end() - len)) {
          return {false, BifixOverlap{i, j, len}};
        }
      }
    }
  }
  return {};
}

namespace {

// Weighted count of length-`len` binary words avoiding k zeros in a row, each
// one weighted by (q-1).
std::uint64_t weighted_avoiding(int len, int q, int k) {
  const auto width = static_cast<std::size_t>(k);
  const auto w1 = static_cast<std::uint64_t>(q - 1);
  std::vector<std::uint64_t> ways(width, 0);
  ways[0] = 1;
  for (int pos = 0; pos < len; ++pos) {
    std::vector<std::uint64_t> next(width, 0);
    std::uint64_t total = 0;
    for (std::uint64_t x : ways) total = detail::checked_add(total, x);
    next[0] = detail::checked_mul(total, w1);
    for (std::size_t z = 0; z + 1 < width; ++z) next[z + 1] = ways[z];
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t x : ways) total = detail::checked_add(total, x);
  return total;
}

}  // namespace

std::uint64_t count_h(int n, int q, int k) {
  if (n < 2 || q < 2 || q > kMaxAlphabet || k < 1) {
    throw std::invalid_argument("count_h needs n >= 2, 2 <= q <= 256, k >= 1");
  }
  const auto w1 = static_cast<std::uint64_t>(q - 1);
  return detail::checked_mul(detail::checked_mul(w1, w1), weighted_avoiding(n - 2, q, k));
}

std::uint64_t count_s(int n, int q, int k) {
  const Params p = Params::membership(n, q, k);
  return count_h(p.n() - p.k(), p.q(), p.k());
}

namespace {

std::uint64_t checked_capacity(std::uint64_t (*counter)(int, int, int), int n, int q, int k,
                               std::uint64_t cap) {
  std::uint64_t size;
  try {
    size = counter(n, q, k);
  } catch (const std::overflow_error&) {
    throw CapacityError("list size does not fit in 64 bits");
  }
  if (size > cap) {
    throw CapacityError("list of " + std::to_string(size) + " words exceeds the cap of " + std::to_string(cap));
  }
  return size;
}

}  // namespace

WordList build_h_list(int n, int q, int k, std::uint64_t cap) {
  if (n < 2 || q < 2 || q > kMaxAlphabet || k < 2) {
    throw std::invalid_argument("build_h_list needs n >= 2, 2 <= q <= 256, k >= 2");
  }
  const std::uint64_t size = checked_capacity(&count_h, n, q, k, cap);
  const WordList inner = build_f_list(n - 2, k, cap);
  const Word one{1};
  if (q == 2) return append(prepend(one, inner), one);

  WordList out;
  out.reserve(size);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    Word alpha = one;
    alpha.insert(alpha.end(), inner[i].begin(), inner[i].end());
    alpha.push_back(1);
    WordList block = expand_list(alpha, q, cap);
    if (i % 2 == 1) std::reverse(block.begin(), block.end());
    std::move(block.begin(), block.end(), std::back_inserter(out));
  }
  return out;
}

WordList build_s_list(int n, int q, int k, std::uint64_t cap) {
  const Params p = Params::generator(n, q, k);
  return prepend(Word(static_cast<std::size_t>(p.k()), 0), build_h_list(p.n() - p.k(), p.q(), p.k(), cap));
}

TraceBlockReport trace_partition(const WordList& list) {
  common_length(list);
  TraceBlockReport report;
  for (const Word& w : list) {
    Trace t = trace_of(w);
    if (report.block_traces.empty() || report.block_traces.back() != t) {
      report.block_traces.push_back(std::move(t));
      report.block_sizes.push_back(1);
    } else {
      ++report.block_sizes.back();
    }
  }
  report.block_count = report.block_traces.size();
  return report;
}

}  // namespace bifixgray
