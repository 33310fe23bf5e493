#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bifixgray {

using Symbol = std::uint8_t;

/// A word over {0, ..., q-1}. The empty word is a valid value.
using Word = std::vector<Symbol>;

/// Ordered list of equal-length words.
using WordList = std::vector<Word>;

/// Binary word obtained by mapping every nonzero symbol to 1.
using Trace = Word;

/// Largest alphabet the library accepts.
inline constexpr int kMaxAlphabet = 256;

/// Default bound on the number of words a materializing builder may produce.
inline constexpr std::uint64_t kDefaultListCap = std::uint64_t{1} << 24;

/// A builder or enumerator would exceed its configured size bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A caller-side contract was broken (e.g. words that are not list-adjacent).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Validated (n, q, k) triple.
///
/// Membership-valid: q >= 2, k >= 1, n >= k + 2. Generator-valid additionally
/// requires k >= 2, since the avoiding-zero lists are only defined there.
class Params {
 public:
  static Params membership(int n, int q, int k);
  static Params generator(int n, int q, int k);

  int n() const { return n_; }
  int q() const { return q_; }
  int k() const { return k_; }

  /// Length of the free middle segment s_{k+2} .. s_{n-1}.
  int inner_length() const { return n_ - k_ - 2; }

 private:
  Params(int n, int q, int k) : n_(n), q_(q), k_(k) {}
  int n_;
  int q_;
  int k_;
};

std::size_t hamming(std::span<const Symbol> a, std::span<const Symbol> b);

Trace trace_of(std::span<const Symbol> w);

std::size_t count_nonzero(std::span<const Symbol> w);

WordList reverse_list(WordList list);
WordList concat_lists(WordList front, const WordList& back);
WordList prepend(const Word& u, const WordList& list);
WordList append(const WordList& list, const Word& u);

/// Parses a digit string such as "01011"; every character must be 0-9.
Word parse_digits(std::string_view text);

/// Renders each symbol as one decimal digit. Symbols above 9 are rejected.
std::string to_digits(std::span<const Symbol> w);

/// Renders symbols as comma-separated integers.
std::string to_csv(std::span<const Symbol> w);

/// Word of `count` copies of `s`.
inline Word repeat(Symbol s, std::size_t count) { return Word(count, s); }

}  // namespace bifixgray
