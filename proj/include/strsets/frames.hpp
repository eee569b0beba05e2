#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strsets/binstr.hpp"
#include "strsets/tallies.hpp"

namespace strsets {

enum class FrameKind { First, Internal, Last };

// One unit of a set code: opening marker, bare element, closing marker.
// The serialized form of a frame is opening . a . element . a . closing,
// where the closing marker is shared with the next frame's opening (the
// last frame closes with its own opening repeated).
struct Frame {
  Tally opening;
  BinStr element;
  Tally closing;
  FrameKind kind;

  BinStr wrapped() const { return BinStr("a" + element.str() + "a"); }

  friend bool operator==(const Frame&, const Frame&) = default;
};

// A validated set code: the empty-set literal "aa", or a nonempty frame
// list whose markers strictly increase, closed off by the envelope tally.
class ParsedCode {
 public:
  static ParsedCode empty();
  static ParsedCode from_frames(std::vector<Frame> frames, Tally envelope);

  bool is_empty() const { return frames_.empty(); }
  const std::vector<Frame>& frames() const { return frames_; }
  const Tally& envelope() const { return envelope_; }

  // Reproduces the exact source string.
  BinStr serialize() const;

  std::set<BinStr> member_set() const;

 private:
  ParsedCode() : envelope_{Digit::B, 1} {}
  std::vector<Frame> frames_;  // empty iff the code is "aa"
  Tally envelope_;             // meaningful only when frames_ is nonempty
};

// Decomposes x into frames. Throws NotASetCode naming the first violated
// clause. The scanner follows the strictly increasing ladder of maximal
// b-runs; the predicate layer (oracle.hpp) stays authoritative and the two
// are held together by the parser/oracle agreement tests.
ParsedCode parse(const BinStr& x);

std::optional<ParsedCode> try_parse(const BinStr& x);

bool is_set(const BinStr& x);

// Frame elements of x; empty iff x = "aa". Throws NotASetCode.
std::set<BinStr> members(const BinStr& x);

// y is framed inside the set code x. False on non-codes.
bool is_member(const BinStr& y, const BinStr& x);

// Both are set codes with the same members.
bool set_equiv(const BinStr& x, const BinStr& y);

struct FramePredicateFlags {
  bool firstf = false;
  bool intf = false;
  bool lastf = false;
  bool fr = false;
};

// Evaluates the literal quantified frame predicates on x for the candidate
// triple (t1, u, t2), with u the wrapped element (a.e.a). Independent of
// parse(); this is the ground truth parse() must agree with.
FramePredicateFlags frame_predicates(const BinStr& x, const Tally& t1,
                                     const BinStr& u, const Tally& t2);

struct OccWitness {
  Tally opening;
  BinStr wrapped;
  Tally closing;

  friend bool operator==(const OccWitness&, const OccWitness&) = default;
};

// Given the decomposition x = w1.z.w2, returns a frame of x whose element
// span covers this occurrence of z, or nullopt if no frame covers it.
// Throws DecompositionMismatch if w1.z.w2 != x.
std::optional<OccWitness> occurs_in_frame(const BinStr& w1, const BinStr& z,
                                          const BinStr& w2, const BinStr& x);

// x is a set code and every occurrence of digit a lies within some frame.
bool is_min_set(const BinStr& x);

enum class FrameClassKind { First, Free, Bound };

struct FrameClass {
  FrameClassKind kind;
  bool free_plus;   // this frame and every earlier one is First or Free
  bool free_minus;  // Free but not free_plus

  friend bool operator==(const FrameClass&, const FrameClass&) = default;
};

// Per-frame classification; requires a nonempty code.
std::vector<FrameClass> classify_frames(const ParsedCode& p);

}  // namespace strsets
