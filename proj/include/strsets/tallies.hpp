#pragma once

#include <cstddef>

#include "strsets/binstr.hpp"

namespace strsets {

// A run of one repeated digit, stored as digit + count. The text form is
// always unary (the run written out), so markers stay bit-exact.
struct Tally {
  Digit digit;
  std::size_t length;  // >= 1

  BinStr str() const { return BinStr(std::string(length, to_char(digit))); }

  friend bool operator==(const Tally&, const Tally&) = default;
};

inline Tally b_tally(std::size_t length) { return Tally{Digit::B, length}; }

// Every digit of x equals d.
bool is_tally(const BinStr& x, Digit d);

// Length of the longest contiguous run of b in x; 0 if x has no b.
std::size_t max_b_run(const BinStr& x);

// Max+T_b(t,u): t is a b-tally, every b-tally in u is a substring of t and
// t itself does not occur in u; equivalently t.length > max_b_run(u).
bool is_max_plus_tally(const Tally& t, const BinStr& u);

// MaxT_b(t,u): every b-tally in u is a substring of t (t need not occur in u).
bool is_max_tally(const Tally& t, const BinStr& u);

// Shortest b-tally that does not occur in y: length max_b_run(y)+1.
Tally min_nonoccurring_btally(const BinStr& y);

enum class TallyClassOrder { Below, Equal, Above };

// Compares the shortest non-occurrent b-tallies of u and v.
TallyClassOrder tally_class_compare(const BinStr& u, const BinStr& v);

}  // namespace strsets
