#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "strsets/binstr.hpp"
#include "strsets/frames.hpp"

namespace strsets {

// Every frame's opening marker is minimal: longer than all b-runs of its
// element and longer than every earlier marker.
bool is_special(const BinStr& x);

// MinSet & Lex+ & Special: the canonical code of its member set.
bool is_set_star(const BinStr& x);

struct SetStarCode {
  BinStr code;
  ParsedCode parsed;
};

// The canonical code of a finite element set: elements sorted ascending by
// precedes, marker lengths m_i = max(max_b_run(e_i)+1, m_{i-1}+1), empty
// set encoded as "aa".
SetStarCode encode_canonical(const std::set<BinStr>& elems);

// Plain adjunction: appends a fresh frame for y after the envelope (or
// returns x when y is already a member). The result is a set code with
// members(x) + {y}, generally not canonical. Throws NotASetCode.
BinStr adjoin_simple(const BinStr& x, const BinStr& y);

// Removes y's frame, keeping every surviving opening marker. Preserves
// Lex+. Throws NotMinSet.
BinStr subtract(const BinStr& x, const BinStr& y);

// Splits x at an internal frame into two set codes with disjoint members:
// the suffix code starting at that frame, and the prefix re-closed with
// the previous frame's marker. x = prefix-part + suffix holds exactly.
// Throws NotMinSet / NotInternalFrame.
std::pair<BinStr, BinStr> resolve(const BinStr& x, std::size_t frame_index);

// Extends the opening marker of every frame in the leading First/Free run
// by one b; Bound frames and everything after the first Bound frame keep
// their markers. Same members, same member order. Throws NotMinSet.
BinStr remark(const BinStr& z);

// Canonical adjunction: the unique canonical code of members(x) + {y},
// built by case analysis on where y lands (append / prepend / insert,
// remarking the tail when the fresh marker collides with the next one).
// Throws NotSetStar.
SetStarCode adjoin(const BinStr& x, const BinStr& y);

struct CensusReport {
  std::size_t max_len = 0;
  std::size_t strings = 0;    // strings enumerated
  std::size_t set_star = 0;   // canonical codes among them
  std::size_t classes = 0;    // member-set equivalence classes
  // Classes with two or more codes; expected empty.
  std::vector<std::pair<std::set<BinStr>, std::vector<BinStr>>> duplicates;
};

// Enumerates all strings of length <= max_len, partitions the canonical
// ones by member set, and reports any class with two or more codes.
CensusReport uniqueness_census(std::size_t max_len);

}  // namespace strsets
