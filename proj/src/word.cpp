#include "bifixgray/word.hpp"

#include <algorithm>

namespace bifixgray {

Params Params::membership(int n, int q, int k) {
  if (q < 2 || q > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size q must lie in [2, 256], got " + std::to_string(q));
  }
  if (k < 1) {
    throw std::invalid_argument("zero-run bound k must be at least 1, got " + std::to_string(k));
  }
  if (n < k + 2) {
    throw std::invalid_argument("word length n must be at least k + 2 = " + std::to_string(k + 2) +
                                ", got " + std::to_string(n));
  }
  return Params(n, q, k);
}

Params Params::generator(int n, int q, int k) {
  Params p = membership(n, q, k);
  if (k < 2) {
    throw std::invalid_argument("ordered lists require k >= 2, got k = " + std::to_string(k));
  }
  return p;
}

std::size_t hamming(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming: length mismatch (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += a[i] != b[i];
  }
  return d;
}

Trace trace_of(std::span<const Symbol> w) {
  Trace t(w.size());
  std::transform(w.begin(), w.end(), t.begin(), [](Symbol s) { return Symbol{s != 0}; });
  return t;
}

std::size_t count_nonzero(std::span<const Symbol> w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Symbol s) { return s != 0; }));
}

WordList reverse_list(WordList list) {
  std::reverse(list.begin(), list.end());
  return list;
}

WordList concat_lists(WordList front, const WordList& back) {
  if (!front.empty() && !back.empty() && front.front().size() != back.front().size()) {
    throw std::invalid_argument("concat_lists: word length mismatch");
  }
  front.insert(front.end(), back.begin(), back.end());
  return front;
}

WordList prepend(const Word& u, const WordList& list) {
  WordList out;
  out.reserve(list.size());
  for (const Word& w : list) {
    Word x = u;
    x.insert(x.end(), w.begin(), w.end());
    out.push_back(std::move(x));
  }
  return out;
}

WordList append(const WordList& list, const Word& u) {
  WordList out;
  out.reserve(list.size());
  for (const Word& w : list) {
    Word x = w;
    x.insert(x.end(), u.begin(), u.end());
    out.push_back(std::move(x));
  }
  return out;
}

Word parse_digits(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a digit word: '" + std::string(text) + "'");
    }
    w.push_back(static_cast<Symbol>(c - '0'));
  }
  return w;
}

std::string to_digits(std::span<const Symbol> w) {
  std::string s;
  s.reserve(w.size());
  for (Symbol c : w) {
    if (c > 9) {
      throw std::invalid_argument("symbol " + std::to_string(c) + " has no single-digit rendering");
    }
    s.push_back(static_cast<char>('0' + c));
  }
  return s;
}

std::string to_csv(std::span<const Symbol> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace bifixgray
