#pragma once

#include <optional>
#include <vector>

#include "strsets/binstr.hpp"
#include "strsets/frames.hpp"
#include "strsets/tallies.hpp"

// Literal evaluation of the defining formulas, quantifiers and all, on
// concrete strings. Slow and deliberately naive: this layer is the oracle
// the efficient implementations are tested against, so it must not share
// their shortcuts.
namespace strsets::oracle {

// Pref(u,t): u = a.u0.a for some nonempty u0, and t is a b-tally longer
// than every b-run of u and not occurring in u.
bool pref(const BinStr& u, const Tally& t);

// Firstf(x,t1,u,t2):
//   Pref(u,t1) & Tally_b(t2) &
//   ((t1 = t2 & x = t1.u.t2) | (t1 < t2 & (t1.u.t2.a) B x)).
bool firstf(const BinStr& x, const Tally& t1, const BinStr& u, const Tally& t2);

// Intf(x,w,t1,u,t2) with w existentially quantified:
//   Pref(u,t1) & t1 < t2 & Tally_b(t2) &
//   exists w,w2: x = w.a.t1.u.t2.a.w2 & Max+T_b(t1,w).
bool intf(const BinStr& x, const Tally& t1, const BinStr& u, const Tally& t2);

// Lastf(x,t1,u,t2):
//   t1 = t2 & Pref(u,t1) &
//   (x = t1.u.t1 | exists w: x = w.a.t1.u.t1 & Max+T_b(t1,w)).
bool lastf(const BinStr& x, const Tally& t1, const BinStr& u, const Tally& t2);

bool fr(const BinStr& x, const Tally& t1, const BinStr& u, const Tally& t2);

struct LiteralFrame {
  Tally opening;
  BinStr wrapped;  // a.element.a
  Tally closing;
  bool firstf;
  bool intf;
  bool lastf;
};

// All (t1,u,t2) with Fr(x,t1,u,t2), found by exhausting candidate tallies
// and wrapped substrings of x.
std::vector<LiteralFrame> literal_frames(const BinStr& x);

// Env(t,x), clause by clause:
//  (a) Tally_b(t) and t bounds every b-run of x;
//  (b) some frame of x is a first frame;
//  (c) some frame is a last frame with marker t on both sides;
//  (d) frames with the same element have the same opening marker;
//  (e) frames with the same opening marker have the same element.
bool env(const Tally& t, const BinStr& x);

// Set(x): x = aa, or some b-tally occurring in x envelops it.
bool is_set(const BinStr& x);

// y eps x via the literal Env/Fr quantifiers.
bool is_member(const BinStr& y, const BinStr& x);

// Occ(w1,z,w2,x,t',v,t'') for a given frame (t',v,t'').
bool occ(const BinStr& w1, const BinStr& z, const BinStr& w2, const BinStr& x,
         const Tally& tp, const BinStr& v, const Tally& tpp);

bool is_min_set(const BinStr& x);

// u <_x v via the literal four-disjunct definition: u's frame is first, or
// v's frame is last, or both internal with u's closing marker equal to /
// shorter than v's opening marker.
bool frame_precedes(const BinStr& x, const BinStr& u, const BinStr& v);

// Free / Bound / Free+ / Free- via their quantified definitions.
bool free_frame(const BinStr& x, const Tally& t1, const BinStr& u, const Tally& t2);
bool bound_frame(const BinStr& x, const Tally& t1, const BinStr& u, const Tally& t2);
bool free_plus_frame(const BinStr& x, const Tally& t1, const BinStr& u, const Tally& t2);

// Max+(t,v,x): v is a member and every frame preceding v's opens with a
// marker shorter than t.
bool max_plus(const Tally& t, const BinStr& v, const BinStr& x);

// MMax+T_b(t,v,x): Max+(t,v,x) and t is no longer than any b-tally that
// satisfies Max+ for v and bounds v's b-runs. The minimality search is
// bounded by the envelope length + 1.
bool mmax_plus(const Tally& t, const BinStr& v, const BinStr& x);

bool is_special(const BinStr& x);

// Rt_L(z,x,y) and Rt_R(z,x,y), literally.
bool left_root_pred(const BinStr& z, const BinStr& x, const BinStr& y);
bool right_root_pred(const BinStr& z, const BinStr& x, const BinStr& y);

}  // namespace strsets::oracle
