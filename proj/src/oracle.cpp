#include "bifixgray/oracle.hpp"

#include <algorithm>
#include <string>

#include "bifixgray/fib_words.hpp"
#include "bifixgray/reflected_gray.hpp"

namespace bifixgray::oracle {

namespace {

Word decode(std::uint64_t index, int n, int q) {
  Word w(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    w[i] = static_cast<Symbol>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
  return w;
}

bool naive_member(const Word& w, int k) {
  const int n = static_cast<int>(w.size());
  if (n < k + 2) return false;
  for (int i = 0; i < k; ++i) {
    if (w[i] != 0) return false;
  }
  if (w[k] == 0) return false;
  if (w[n - 1] == 0) return false;
  // Look for a window of k zeros fully inside positions k+1 .. n-2.
  for (int start = k + 1; start + k <= n - 1; ++start) {
    bool all_zero = true;
    for (int j = start; j < start + k; ++j) all_zero = all_zero && w[j] == 0;
    if (all_zero) return false;
  }
  return true;
}

std::uint64_t power_bounded(int q, int n, std::uint64_t bound) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(q);
    if (total > bound) throw CapacityError("brute force over q^n = " + std::to_string(q) + "^" +
                                           std::to_string(n) + " words exceeds the bound of " +
                                           std::to_string(bound));
  }
  return total;
}

}  // namespace

WordList brute_force_s(int n, int q, int k, Execution exec, std::uint64_t bound) {
  if (n < 0 || q < 2 || q > kMaxAlphabet || k < 1) throw std::invalid_argument("brute_force_s: bad parameters");
  const std::uint64_t total = power_bounded(q, n, bound);

  constexpr std::int64_t kChunks = 256;
  std::vector<WordList> found(kChunks);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (std::int64_t c = 0; c < kChunks; ++c) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(c) / kChunks;
    const std::uint64_t hi = total * static_cast<std::uint64_t>(c + 1) / kChunks;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      Word w = decode(idx, n, q);
      if (naive_member(w, k)) found[static_cast<std::size_t>(c)].push_back(std::move(w));
    }
  }
  // Chunks cover increasing index ranges, and index order is lexicographic.
  WordList out;
  for (WordList& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

WordList brute_force_avoiding(int n, int k) {
  WordList out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Word w = decode(idx, n, 2);
    int run = 0;
    bool ok = true;
    for (Symbol s : w) {
      run = s == 0 ? run + 1 : 0;
      ok = ok && run < k;
    }
    if (ok) out.push_back(std::move(w));
  }
  return out;
}

GrayCheckReport verify_gray(const WordList& list) {
  GrayCheckReport report;
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    if (list[i].size() != list[i + 1].size()) throw std::invalid_argument("verify_gray: length mismatch");
    std::size_t d = 0;
    for (std::size_t p = 0; p < list[i].size(); ++p) d += list[i][p] != list[i + 1][p];
    report.max_distance = std::max(report.max_distance, d);
    if (d != 1 && !report.first_violation) report.first_violation = GrayViolation{i, d};
  }
  report.ok = !report.first_violation.has_value();
  return report;
}

std::optional<std::size_t> first_non_unit_step(const WordList& list) {
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    const Word& a = list[i];
    const Word& b = list[i + 1];
    bool same_trace = true;
    int moved = 0;
    int delta = 0;
    for (std::size_t p = 0; p < a.size(); ++p) {
      same_trace = same_trace && ((a[p] == 0) == (b[p] == 0));
      if (a[p] != b[p]) {
        ++moved;
        delta = int{b[p]} - int{a[p]};
      }
    }
    if (same_trace && (moved != 1 || (delta != 1 && delta != -1))) return i;
  }
  return std::nullopt;
}

WordList sorted(WordList list) {
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<CatPoint> measure_cat(CatTarget target, int q, int k, std::span<const int> sizes) {
  std::vector<CatPoint> points;
  auto sink = [](std::span<const Symbol>) {};
  for (int size : sizes) {
    OpsReport ops;
    switch (target) {
      case CatTarget::gen_tuple:
        ops = gen_tuple_stream(size, q, sink);
        break;
      case CatTarget::gen_fib:
        ops = stream_f_list(size, k, sink);
        break;
      case CatTarget::stream_s:
        ops = stream_s(size, q, k, sink);
        break;
    }
    points.push_back({size, ops});
  }
  return points;
}

}  // namespace bifixgray::oracle
