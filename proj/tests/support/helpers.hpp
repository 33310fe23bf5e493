#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bifixgray/word.hpp"

namespace bifixgray::testing {

inline Word W(const std::string& digits) { return parse_digits(digits); }

inline WordList L(std::initializer_list<const char*> words) {
  WordList out;
  for (const char* w : words) out.push_back(parse_digits(w));
  return out;
}

inline std::vector<std::string> render(const WordList& list) {
  std::vector<std::string> out;
  for (const Word& w : list) out.push_back(to_digits(w));
  return out;
}

/// Runs a span-emitting generator and keeps copies of every word.
template <class Generator>
WordList collect(Generator&& gen) {
  WordList out;
  gen([&](std::span<const Symbol> w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

}  // namespace bifixgray::testing
