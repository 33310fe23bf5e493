#include "bifixgray/fib_words.hpp"

#include <string>

#include "bifixgray/detail/checked.hpp"

namespace bifixgray {

namespace {

void require_fib_params(int n, int k) {
  if (k < 2) throw std::invalid_argument("F lists need k >= 2, got k = " + std::to_string(k));
  if (n < 0) throw std::invalid_argument("negative length n = " + std::to_string(n));
}

Word cons(Symbol head, const Word& tail) {
  Word w;
  w.reserve(tail.size() + 1);
  w.push_back(head);
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

}  // namespace

WordList build_c_list(int n, std::uint64_t cap) {
  if (n < 0) throw std::invalid_argument("negative length n = " + std::to_string(n));
  if (detail::saturating_pow(2, n, cap) > cap) {
    throw CapacityError("C list of 2^n words exceeds the cap of " + std::to_string(cap));
  }
  WordList list{Word{}};
  for (int len = 1; len <= n; ++len) {
    WordList next;
    next.reserve(list.size() * 2);
    for (auto it = list.rbegin(); it != list.rend(); ++it) next.push_back(cons(1, *it));
    for (const Word& w : list) next.push_back(cons(0, w));
    list = std::move(next);
  }
  return list;
}

WordList build_f_list(int n, int k, std::uint64_t cap) {
  require_fib_params(n, k);
  if (fib_count(n, k) > cap) {
    throw CapacityError("F list of " + std::to_string(fib_count(n, k)) + " words exceeds the cap of " +
                        std::to_string(cap));
  }
  // by_u[u] holds F_len(u) for the current len; bottom-up over len.
  const auto width = static_cast<std::size_t>(k);
  std::vector<WordList> by_u(width, WordList{Word{}});
  for (int len = 1; len <= n; ++len) {
    const WordList& full = by_u[width - 1];
    WordList head;
    head.reserve(full.size());
    for (auto it = full.rbegin(); it != full.rend(); ++it) head.push_back(cons(1, *it));

    std::vector<WordList> next(width);
    next[0] = head;
    for (std::size_t u = 1; u < width; ++u) {
      next[u] = head;
      for (const Word& w : by_u[u - 1]) next[u].push_back(cons(0, w));
    }
    by_u = std::move(next);
  }
  return std::move(by_u[width - 1]);
}

std::uint64_t fib_count(int n, int k) {
  require_fib_params(n, k);
  std::vector<std::uint64_t> f(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (i < k) {
      f[i] = detail::checked_pow(2, i);
    } else {
      std::uint64_t s = 0;
      for (int j = 1; j <= k; ++j) s = detail::checked_add(s, f[i - j]);
      f[i] = s;
    }
  }
  return f[n];
}

std::pair<Word, Word> f_first_last(int n, int k) {
  require_fib_params(n, k);
  if (n < 1) throw std::invalid_argument("f_first_last needs n >= 1");
  // Periods 1 0^{k-1} 1 and 0^{k-1} 1 1, both of length k + 1.
  Word first_period(static_cast<std::size_t>(k) + 1, 0);
  first_period.front() = 1;
  first_period.back() = 1;
  Word last_period(static_cast<std::size_t>(k) + 1, 0);
  last_period[k - 1] = 1;
  last_period[k] = 1;

  Word first(static_cast<std::size_t>(n));
  Word last(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < first.size(); ++i) {
    first[i] = first_period[i % first_period.size()];
    last[i] = last_period[i % last_period.size()];
  }
  return {first, last};
}

std::size_t transition_position(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (hamming(a, b) != 1) {
    throw ContractViolation("transition_position: words are not at Hamming distance 1");
  }
  std::size_t p = 0;
  while (a[p] == b[p]) ++p;
  if (p + 1 < a.size() && !(a[p + 1] == 1 && b[p + 1] == 1)) {
    throw ContractViolation("transition_position: position " + std::to_string(p + 1) +
                            " changes but position " + std::to_string(p + 2) + " is not 1 in both words");
  }
  return p;
}

}  // namespace bifixgray
