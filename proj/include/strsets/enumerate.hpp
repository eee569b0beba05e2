#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "strsets/binstr.hpp"

namespace strsets {

// Calls fn on every word over {a,b} of length 1..max_len, shortest first,
// lexicographic (a before b) within a length. This order makes reported
// counterexamples minimal and output deterministic.
template <typename Fn>
void for_each_string(std::size_t max_len, Fn&& fn) {
  std::string s;
  for (std::size_t len = 1; len <= max_len; ++len) {
    s.assign(len, 'a');
    for (;;) {
      fn(BinStr(s));
      // increment: a < b
      std::size_t i = len;
      while (i > 0 && s[i - 1] == 'b') s[--i] = 'a';
      if (i == 0) break;
      s[i - 1] = 'b';
    }
  }
}

inline std::vector<BinStr> all_strings(std::size_t max_len) {
  std::vector<BinStr> out;
  for_each_string(max_len, [&](const BinStr& x) { out.push_back(x); });
  return out;
}

}  // namespace strsets
