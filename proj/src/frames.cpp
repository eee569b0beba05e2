#include "strsets/frames.hpp"

#include <algorithm>

#include "strsets/oracle.hpp"

namespace strsets {

ParsedCode ParsedCode::empty() { return ParsedCode(); }

ParsedCode ParsedCode::from_frames(std::vector<Frame> frames, Tally envelope) {
  ParsedCode p;
  p.frames_ = std::move(frames);
  p.envelope_ = envelope;
  return p;
}

BinStr ParsedCode::serialize() const {
  if (frames_.empty()) return BinStr("aa");
  std::string out;
  for (const Frame& f : frames_) {
    out += f.opening.str().str();
    out += f.wrapped().str();
  }
  out += envelope_.str().str();
  return BinStr(out);
}

std::set<BinStr> ParsedCode::member_set() const {
  std::set<BinStr> out;
  for (const Frame& f : frames_) out.insert(f.element);
  return out;
}

namespace {

struct Run {
  std::size_t pos;
  std::size_t len;
};

std::vector<Run> b_runs(const std::string& s) {
  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == 'b') {
      std::size_t j = i;
      while (j < s.size() && s[j] == 'b') ++j;
      runs.push_back({i, j - i});
      i = j;
    } else {
      ++i;
    }
  }
  return runs;
}

[[noreturn]] void fail(const std::string& clause, const BinStr& x) {
  throw NotASetCode(clause, "not a set code (" + clause + "): " + x.str());
}

}  // namespace

// Cuts x along the strictly increasing ladder of maximal b-runs. Markers
// must strictly increase until the final run, which repeats the last
// marker and ends the string; whatever sits between two markers must be a
// wrapped element a.e.a with every b-run shorter than the opening marker
// (automatic here, because the scan closes a frame at the first run that
// reaches the marker length).
ParsedCode parse(const BinStr& x) {
  const std::string& s = x.str();
  if (s == "aa") return ParsedCode::empty();

  if (s.back() != 'b') fail("no envelope", x);
  if (s.front() != 'b') fail("marker ladder broken", x);

  const std::vector<Run> runs = b_runs(s);
  struct RawFrame {
    std::size_t marker;
    std::string element;
  };
  std::vector<RawFrame> raw;

  std::size_t ri = 0;  // current marker's index into runs
  for (;;) {
    const Run opening = runs[ri];
    const std::size_t elem_begin = opening.pos + opening.len;

    // First run at least as long as the current marker closes the frame.
    std::size_t rj = ri + 1;
    while (rj < runs.size() && runs[rj].len < opening.len) ++rj;
    if (rj == runs.size()) fail("marker ladder broken", x);

    const Run closing = runs[rj];
    const std::string between = s.substr(elem_begin, closing.pos - elem_begin);
    if (between.size() < 3) fail("dangling digits", x);
    raw.push_back({opening.len, between.substr(1, between.size() - 2)});

    if (closing.len == opening.len) {
      if (closing.pos + closing.len != s.size()) fail("duplicate marker", x);
      break;  // the envelope run; done
    }
    if (closing.pos + closing.len == s.size()) fail("marker ladder broken", x);
    ri = rj;
  }

  std::vector<Frame> frames;
  frames.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::size_t closing_len =
        (i + 1 < raw.size()) ? raw[i + 1].marker : raw[i].marker;
    FrameKind kind = FrameKind::Internal;
    if (i == 0)
      kind = FrameKind::First;
    else if (i + 1 == raw.size())
      kind = FrameKind::Last;
    frames.push_back(Frame{b_tally(raw[i].marker), BinStr(raw[i].element),
                           b_tally(closing_len), kind});
  }

  std::set<BinStr> seen;
  for (const Frame& f : frames)
    if (!seen.insert(f.element).second) fail("duplicate element", x);

  return ParsedCode::from_frames(std::move(frames),
                                 b_tally(raw.back().marker));
}

std::optional<ParsedCode> try_parse(const BinStr& x) {
  try {
    return parse(x);
  } catch (const NotASetCode&) {
    return std::nullopt;
  }
}

bool is_set(const BinStr& x) { return try_parse(x).has_value(); }

std::set<BinStr> members(const BinStr& x) { return parse(x).member_set(); }

bool is_member(const BinStr& y, const BinStr& x) {
  auto p = try_parse(x);
  if (!p) return false;
  for (const Frame& f : p->frames())
    if (f.element == y) return true;
  return false;
}

bool set_equiv(const BinStr& x, const BinStr& y) {
  auto px = try_parse(x);
  auto py = try_parse(y);
  return px && py && px->member_set() == py->member_set();
}

FramePredicateFlags frame_predicates(const BinStr& x, const Tally& t1,
                                     const BinStr& u, const Tally& t2) {
  FramePredicateFlags flags;
  flags.firstf = oracle::firstf(x, t1, u, t2);
  flags.intf = oracle::intf(x, t1, u, t2);
  flags.lastf = oracle::lastf(x, t1, u, t2);
  flags.fr = flags.firstf || flags.intf || flags.lastf;
  return flags;
}

std::optional<OccWitness> occurs_in_frame(const BinStr& w1, const BinStr& z,
                                          const BinStr& w2, const BinStr& x) {
  if (w1.str() + z.str() + w2.str() != x.str())
    throw DecompositionMismatch("w1.z.w2 does not recompose x");
  for (const oracle::LiteralFrame& f : oracle::literal_frames(x))
    if (oracle::occ(w1, z, w2, x, f.opening, f.wrapped, f.closing))
      return OccWitness{f.opening, f.wrapped, f.closing};
  return std::nullopt;
}

bool is_min_set(const BinStr& x) {
  auto p = try_parse(x);
  if (!p) return false;
  if (p->is_empty()) return true;
  // Positions of x covered by a wrapped element.
  std::vector<bool> covered(x.size(), false);
  std::size_t pos = 0;
  for (const Frame& f : p->frames()) {
    pos += f.opening.length;
    for (std::size_t i = 0; i < f.element.size() + 2; ++i) covered[pos + i] = true;
    pos += f.element.size() + 2;
  }
  // The quantifier runs over decompositions x = w1.a.w2 with w1, w2
  // nonempty, so the first and last position are exempt.
  for (std::size_t i = 1; i + 1 < x.size(); ++i)
    if (x[i] == 'a' && !covered[i]) return false;
  return true;
}

std::vector<FrameClass> classify_frames(const ParsedCode& p) {
  std::vector<FrameClass> out;
  bool prefix_all_free = true;  // every frame so far is First or Free
  for (std::size_t i = 0; i < p.frames().size(); ++i) {
    FrameClassKind kind;
    if (i == 0)
      kind = FrameClassKind::First;
    else if (p.frames()[i].opening.length ==
             p.frames()[i - 1].opening.length + 1)
      kind = FrameClassKind::Free;
    else
      kind = FrameClassKind::Bound;
    prefix_all_free = prefix_all_free && kind != FrameClassKind::Bound;
    const bool plus = prefix_all_free;
    out.push_back(FrameClass{kind, plus, kind == FrameClassKind::Free && !plus});
  }
  return out;
}

}  // namespace strsets
