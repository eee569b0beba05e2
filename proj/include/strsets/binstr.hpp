#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "strsets/errors.hpp"

namespace strsets {

enum class Digit : char { A = 'a', B = 'b' };

inline char to_char(Digit d) { return static_cast<char>(d); }

// Nonempty word over {a,b}. The empty word is unrepresentable: every
// constructor validates. Value type, ordered lexicographically so it can
// live in std::set / std::map.
class BinStr {
 public:
  explicit BinStr(std::string s) : s_(std::move(s)) {
    if (!valid(s_)) throw Error("not a nonempty word over {a,b}: \"" + s_ + "\"");
  }

  static bool valid(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c != 'a' && c != 'b') return false;
    return true;
  }

  static std::optional<BinStr> try_make(std::string_view s) {
    if (!valid(s)) return std::nullopt;
    return BinStr(std::string(s));
  }

  const std::string& str() const { return s_; }
  std::size_t size() const { return s_.size(); }
  char operator[](std::size_t i) const { return s_[i]; }
  char front() const { return s_.front(); }
  char back() const { return s_.back(); }

  friend bool operator==(const BinStr& x, const BinStr& y) = default;
  friend std::strong_ordering operator<=>(const BinStr& x, const BinStr& y) = default;

 private:
  std::string s_;
};

// x followed by y.
BinStr concat(const BinStr& x, const BinStr& y);

// xBy: x is a proper initial segment of y (the witness is nonempty).
bool is_initial(const BinStr& x, const BinStr& y);

// xEy: x is a proper terminal segment of y.
bool is_terminal(const BinStr& x, const BinStr& y);

// x occurs contiguously in y; reflexive.
bool is_substring(const BinStr& x, const BinStr& y);

// S: "a" -> "b", otherwise append one b.
BinStr successor(const BinStr& x);

// Prefix order with "a" least: x = y, or x = "a" != y, or x proper prefix of y.
bool leq(const BinStr& x, const BinStr& y);

// xRy: x = "a" & y != "a", or x proper prefix of y.
bool rel_r(const BinStr& x, const BinStr& y);

namespace literals {
inline BinStr operator""_bs(const char* s, std::size_t n) {
  return BinStr(std::string(s, n));
}
}  // namespace literals

}  // namespace strsets
