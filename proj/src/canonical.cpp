#include "strsets/canonical.hpp"

#include <algorithm>
#include <string>

#include "strsets/enumerate.hpp"
#include "strsets/ordering.hpp"
#include "strsets/tallies.hpp"

namespace strsets {

namespace {

std::string bs(std::size_t n) { return std::string(n, 'b'); }

std::string wrap(const BinStr& e) { return "a" + e.str() + "a"; }

// x serialized up to and including frame k's wrapped element.
std::string prefix_through(const ParsedCode& p, std::size_t k) {
  std::string out;
  for (std::size_t i = 0; i <= k; ++i) {
    out += p.frames()[i].opening.str().str();
    out += wrap(p.frames()[i].element);
  }
  return out;
}

// The suffix code opening at frame k: frames k..n-1 plus the envelope.
std::string suffix_from(const ParsedCode& p, std::size_t k) {
  std::string out;
  for (std::size_t i = k; i < p.frames().size(); ++i) {
    out += p.frames()[i].opening.str().str();
    out += wrap(p.frames()[i].element);
  }
  out += p.envelope().str().str();
  return out;
}

}  // namespace

bool is_special(const BinStr& x) {
  auto p = try_parse(x);
  if (!p) return false;
  // Marker minimality, frame by frame: longer than every b-run of the
  // element, longer than every earlier marker, and least such. The
  // minimality search over candidate tallies is bounded by envelope + 1.
  std::size_t prev = 0;
  for (const Frame& f : p->frames()) {
    std::size_t least = std::max(max_b_run(f.element) + 1, prev + 1);
    if (f.opening.length != least) return false;
    prev = f.opening.length;
  }
  return true;
}

bool is_set_star(const BinStr& x) {
  return is_min_set(x) && is_set(x) && is_lex_plus(x) && is_special(x);
}

SetStarCode encode_canonical(const std::set<BinStr>& elems) {
  std::vector<BinStr> order(elems.begin(), elems.end());
  std::sort(order.begin(), order.end(),
            [](const BinStr& u, const BinStr& v) { return precedes(u, v); });

  if (order.empty()) {
    const BinStr code("aa");
    return SetStarCode{code, parse(code)};
  }

  std::string out;
  std::size_t marker = 0;
  for (const BinStr& e : order) {
    marker = std::max(max_b_run(e) + 1, marker + 1);
    out += bs(marker);
    out += wrap(e);
  }
  out += bs(marker);
  const BinStr code(out);
  return SetStarCode{code, parse(code)};
}

BinStr adjoin_simple(const BinStr& x, const BinStr& y) {
  const ParsedCode p = parse(x);
  if (is_member(y, x)) return x;
  const std::size_t fresh = max_b_run(y) + 1;
  if (p.is_empty()) return BinStr(bs(fresh) + wrap(y) + bs(fresh));
  // Appends after the trailing envelope t, so the new frame's marker on
  // both sides reads t followed by the fresh tally.
  const std::size_t t = p.envelope().length;
  return BinStr(x.str() + bs(fresh) + wrap(y) + bs(t) + bs(fresh));
}

BinStr subtract(const BinStr& x, const BinStr& y) {
  if (!is_min_set(x)) throw NotMinSet("subtract requires a minimal set code");
  const ParsedCode p = parse(x);

  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < p.frames().size(); ++i)
    if (p.frames()[i].element == y) hit = i;
  if (!hit) return x;

  const std::size_t k = *hit, n = p.frames().size();
  if (n == 1) return BinStr("aa");
  if (k == 0) return BinStr(suffix_from(p, 1));
  if (k == n - 1) {
    // Close the previous frame with its own marker as the new envelope.
    return BinStr(prefix_through(p, k - 1) +
                  p.frames()[k - 1].opening.str().str());
  }
  return BinStr(prefix_through(p, k - 1) + suffix_from(p, k + 1));
}

std::pair<BinStr, BinStr> resolve(const BinStr& x, std::size_t frame_index) {
  if (!is_min_set(x)) throw NotMinSet("resolve requires a minimal set code");
  const ParsedCode p = parse(x);
  if (frame_index >= p.frames().size() ||
      p.frames()[frame_index].kind != FrameKind::Internal)
    throw NotInternalFrame("frame " + std::to_string(frame_index) +
                           " is not an internal frame");
  const BinStr left(prefix_through(p, frame_index - 1) +
                    p.frames()[frame_index - 1].opening.str().str());
  const BinStr right(suffix_from(p, frame_index));
  return {left, right};
}

BinStr remark(const BinStr& z) {
  if (!is_min_set(z)) throw NotMinSet("remark requires a minimal set code");
  const ParsedCode p = parse(z);
  if (p.is_empty()) return z;

  const std::vector<FrameClass> classes = classify_frames(p);
  std::string out;
  std::size_t marker = 0;
  for (std::size_t i = 0; i < p.frames().size(); ++i) {
    marker = p.frames()[i].opening.length + (classes[i].free_plus ? 1 : 0);
    out += bs(marker);
    out += wrap(p.frames()[i].element);
  }
  out += bs(marker);
  return BinStr(out);
}

SetStarCode adjoin(const BinStr& x, const BinStr& y) {
  if (!is_set_star(x)) throw NotSetStar("adjoin requires a canonical set code");
  const ParsedCode p = parse(x);
  const std::size_t fresh = max_b_run(y) + 1;

  if (p.is_empty()) {
    const BinStr z(bs(fresh) + wrap(y) + bs(fresh));
    return SetStarCode{z, parse(z)};
  }
  if (is_member(y, x)) return SetStarCode{x, p};

  const std::size_t n = p.frames().size();
  const bool after_all = precedes(p.frames()[n - 1].element, y);
  const bool before_all = precedes(y, p.frames()[0].element);

  if (after_all) {
    const std::size_t t = p.envelope().length;
    const std::size_t m = std::max(fresh, t + 1);
    const BinStr z(x.str() + bs(m - t) + wrap(y) + bs(m));
    return SetStarCode{z, parse(z)};
  }

  if (before_all) {
    const std::size_t m1 = p.frames()[0].opening.length;
    // fresh > m1 would put y's run class above the first element's,
    // contradicting before_all; equality collides, so the tail is
    // remarked to make room.
    const BinStr tail = fresh < m1 ? x : remark(x);
    const BinStr z(bs(fresh) + wrap(y) + tail.str());
    return SetStarCode{z, parse(z)};
  }

  // y lands strictly between two members: insert after the last member
  // preceding it.
  const BinStr u0 = *max_below(x, y);
  std::size_t k = 0;
  while (p.frames()[k].element != u0) ++k;
  const std::size_t m = std::max(fresh, p.frames()[k].opening.length + 1);
  const std::size_t next = p.frames()[k + 1].opening.length;

  const BinStr suffix(suffix_from(p, k + 1));
  const BinStr tail = m < next ? suffix : remark(suffix);
  const BinStr z(prefix_through(p, k) + bs(m) + wrap(y) + tail.str());
  return SetStarCode{z, parse(z)};
}

CensusReport uniqueness_census(std::size_t max_len) {
  CensusReport report;
  report.max_len = max_len;
  std::map<std::set<BinStr>, std::vector<BinStr>> classes;
  for_each_string(max_len, [&](const BinStr& x) {
    ++report.strings;
    if (!is_set_star(x)) return;
    ++report.set_star;
    classes[members(x)].push_back(x);
  });
  report.classes = classes.size();
  for (auto& [elems, codes] : classes)
    if (codes.size() > 1) report.duplicates.emplace_back(elems, codes);
  return report;
}

}  // namespace strsets
