#include "bifixgray/expansion.hpp"

#include <string>

#include "bifixgray/detail/checked.hpp"
#include "bifixgray/reflected_gray.hpp"

namespace bifixgray {

WordList expand_list(std::span<const Symbol> beta, int q, std::uint64_t cap) {
  if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("expand_list: q out of range");
  for (Symbol s : beta) {
    if (s > 1) throw std::invalid_argument("expand_list: trace must be binary");
  }
  const Word base(beta.begin(), beta.end());
  if (q == 2) return WordList{base};

  const auto t = static_cast<int>(count_nonzero(beta));
  if (detail::saturating_pow(static_cast<std::uint64_t>(q - 1), t, cap) > cap) {
    throw CapacityError("expansion of (q-1)^t words exceeds the cap of " + std::to_string(cap));
  }
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i]) ones.push_back(i);
  }
  WordList out;
  for (const Word& g : build_gray_list(t, q, cap)) {
    Word w = base;
    for (std::size_t j = 0; j < ones.size(); ++j) w[ones[j]] = g[j];
    out.push_back(std::move(w));
  }
  return out;
}

ExpandState::ExpandState(Word b, std::size_t frozen_len, int q)
    : b_(std::move(b)),
      dir_(b_.size(), +1),
      prec_(b_.size(), kNone),
      succ_(b_.size(), kNone),
      frozen_len_(frozen_len),
      q_(q) {
  if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("ExpandState: q out of range");
  if (frozen_len > b_.size()) throw std::invalid_argument("ExpandState: frozen prefix longer than word");
  std::ptrdiff_t last = kNone;
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (b_[i] >= q) {
      throw std::invalid_argument("ExpandState: symbol " + std::to_string(b_[i]) + " at position " +
                                  std::to_string(i + 1) + " is outside [0, q-1]");
    }
    if (i < frozen_len || b_[i] == 0) continue;
    dir_[i] = (b_[i] == q - 1 && b_[i] != 1) ? -1 : +1;
    prec_[i] = last;
    if (last != kNone) succ_[last] = static_cast<std::ptrdiff_t>(i);
    last = static_cast<std::ptrdiff_t>(i);
  }
  tail_ = last;
}

std::vector<std::size_t> ExpandState::chain() const {
  std::vector<std::size_t> out;
  for (std::ptrdiff_t i = tail_; i != kNone; i = prec_[i]) out.push_back(static_cast<std::size_t>(i));
  return {out.rbegin(), out.rend()};
}

void ExpandState::toggle(std::size_t pos, OpsReport& ops) {
  const auto p = static_cast<std::ptrdiff_t>(pos);
  if (pos < frozen_len_ || pos >= b_.size()) {
    throw ContractViolation("toggle: position " + std::to_string(pos + 1) + " is outside the expandable region");
  }
  if (b_[pos] == 0 && (pos + 1 >= b_.size() || b_[pos + 1] == 0)) {
    throw ContractViolation("toggle: inserting at position " + std::to_string(pos + 1) +
                            " needs a nonzero right neighbour");
  }
  if (b_[pos] == 0) {
    const std::ptrdiff_t a = prec_[pos + 1];
    if (a != kNone) succ_[a] = p;
    succ_[pos] = p + 1;
    prec_[pos] = a;
    prec_[pos + 1] = p;
    b_[pos] = b_[pos + 1];
    dir_[pos] = dir_[pos + 1];
    ops.link_updates += 4;
  } else {
    const std::ptrdiff_t a = prec_[pos];
    const std::ptrdiff_t z = succ_[pos];
    if (z == kNone) {
      tail_ = a;
    } else {
      prec_[z] = a;
    }
    if (a != kNone) succ_[a] = z;
    b_[pos] = 0;
    ops.link_updates += 2;
  }
}

}  // namespace bifixgray
