#pragma once

#include <optional>

#include "strsets/binstr.hpp"
#include "strsets/frames.hpp"

namespace strsets {

// Longest common proper prefix at which x and y diverge with distinct
// digits, oriented by which side continues with a.
struct RootWitness {
  BinStr root;
  bool x_side_a;  // x continues with a, y with b (else the other way round)

  friend bool operator==(const RootWitness&, const RootWitness&) = default;
};

// Left root of x and y. None when one is a prefix of the other or they
// already differ at the first digit. Throws EqualInputs when x = y.
std::optional<RootWitness> left_root(const BinStr& x, const BinStr& y);

// u lexically precedes v: a-group before b-group, proper prefixes first,
// otherwise decided at the left root.
bool lex_precedes(const BinStr& u, const BinStr& v);

// Tally-modified precedence: compare longest-b-run classes first, break
// ties with lex_precedes.
bool precedes(const BinStr& u, const BinStr& v);

// u's frame strictly precedes v's frame in the set code x. False unless
// both are members. Throws NotASetCode.
bool frame_precedes(const BinStr& x, const BinStr& u, const BinStr& v);

// Members appear in frame order consistent with precedes. Throws
// NotASetCode.
bool is_lex_plus(const BinStr& x);

// The frame-order-largest member u of x such that every member up to and
// including u precedes y; none when no member qualifies. Throws
// NotASetCode.
std::optional<BinStr> max_below(const BinStr& x, const BinStr& y);

}  // namespace strsets
