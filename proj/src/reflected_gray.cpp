#include "bifixgray/reflected_gray.hpp"

#include <algorithm>
#include <string>

#include "bifixgray/detail/checked.hpp"

namespace bifixgray {

namespace {

void require_gray_alphabet(int t, int q) {
  if (q < 3 || q > kMaxAlphabet) {
    throw std::invalid_argument("reflected Gray code needs 3 <= q <= 256, got q = " + std::to_string(q));
  }
  if (t < 0) throw std::invalid_argument("negative length t = " + std::to_string(t));
}

}  // namespace

WordList build_gray_list(int t, int q, std::uint64_t cap) {
  require_gray_alphabet(t, q);
  if (detail::saturating_pow(static_cast<std::uint64_t>(q - 1), t, cap) > cap) {
    throw CapacityError("reflected Gray list of (q-1)^t words exceeds the cap of " + std::to_string(cap));
  }
  WordList list{Word{}};
  for (int len = 1; len <= t; ++len) {
    WordList reflected(list.rbegin(), list.rend());
    WordList next;
    next.reserve(list.size() * static_cast<std::size_t>(q - 1));
    for (int a = 1; a <= q - 1; ++a) {
      const WordList& sub = ((a - 1) % 2 == 1) ? reflected : list;
      for (const Word& w : sub) {
        Word x;
        x.reserve(w.size() + 1);
        x.push_back(static_cast<Symbol>(a));
        x.insert(x.end(), w.begin(), w.end());
        next.push_back(std::move(x));
      }
    }
    list = std::move(next);
  }
  return list;
}

std::pair<Word, Word> gray_first_last(int t, int q) {
  require_gray_alphabet(t, q);
  if (t < 1) throw std::invalid_argument("gray_first_last needs t >= 1");
  Word first(static_cast<std::size_t>(t), 1);
  Word last = (q % 2 == 1) ? Word(static_cast<std::size_t>(t), 1) : Word(static_cast<std::size_t>(t), q - 1);
  last[0] = static_cast<Symbol>(q - 1);
  return {first, last};
}

std::uint64_t expected_ops(int t, int q) {
  if (t < 1 || q < 2) throw std::invalid_argument("expected_ops needs t >= 1 and q >= 2");
  const auto uq = static_cast<std::uint64_t>(q);
  // q * (q^t - 1) / (q - 1) = q + q^2 + ... + q^t
  std::uint64_t sum = 0;
  std::uint64_t power = 1;
  for (int j = 1; j <= t; ++j) {
    power = detail::checked_mul(power, uq);
    sum = detail::checked_add(sum, power);
  }
  return sum - static_cast<std::uint64_t>(t);
}

GrayOdometer::GrayOdometer(int t, int q)
    : v_(static_cast<std::size_t>(std::max(t, 0)), 1), dir_(v_.size(), +1), q_(q) {
  require_gray_alphabet(t, q);
}

bool GrayOdometer::advance() {
  auto i = static_cast<std::ptrdiff_t>(v_.size()) - 1;
  while (i >= 0 && ((v_[i] == q_ - 1 && dir_[i] == 1) || (v_[i] == 1 && dir_[i] == -1))) {
    dir_[i] = -dir_[i];
    --i;
    ++inner_steps_;
  }
  if (i < 0) return false;
  v_[i] = static_cast<Symbol>(v_[i] + dir_[i]);
  return true;
}

}  // namespace bifixgray
