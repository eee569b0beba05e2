#include "strsets/oracle.hpp"

#include <algorithm>
#include <set>

namespace strsets::oracle {

namespace {

bool is_b_tally(const Tally& t) { return t.digit == Digit::B && t.length >= 1; }

bool wrapped_shape(const BinStr& u) {
  return u.size() >= 3 && u.front() == 'a' && u.back() == 'a';
}

std::string tstr(const Tally& t) { return std::string(t.length, to_char(t.digit)); }

bool proper_prefix(const std::string& p, const std::string& s) {
  return p.size() < s.size() && s.compare(0, p.size(), p) == 0;
}

bool proper_suffix(const std::string& p, const std::string& s) {
  return p.size() < s.size() &&
         s.compare(s.size() - p.size(), p.size(), p) == 0;
}

BinStr bare(const LiteralFrame& f) {
  return BinStr(f.wrapped.str().substr(1, f.wrapped.size() - 2));
}

using Frames = std::vector<LiteralFrame>;

bool frame_precedes_in(const BinStr& x, const Frames& frames, const BinStr& u,
                       const BinStr& v);

}  // namespace

bool pref(const BinStr& u, const Tally& t) {
  return wrapped_shape(u) && is_b_tally(t) && is_max_plus_tally(t, u);
}

bool firstf(const BinStr& x, const Tally& t1, const BinStr& u, const Tally& t2) {
  if (!pref(u, t1) || !is_b_tally(t2)) return false;
  const std::string whole = tstr(t1) + u.str() + tstr(t2);
  if (t1.length == t2.length && x.str() == whole) return true;
  return t1.length < t2.length && proper_prefix(whole + "a", x.str());
}

bool intf(const BinStr& x, const Tally& t1, const BinStr& u, const Tally& t2) {
  if (!pref(u, t1) || !is_b_tally(t2) || t1.length >= t2.length) return false;
  const std::string needle = "a" + tstr(t1) + u.str() + tstr(t2) + "a";
  const std::string& s = x.str();
  for (std::size_t p = s.find(needle); p != std::string::npos;
       p = s.find(needle, p + 1)) {
    if (p >= 1 && p + needle.size() < s.size() &&
        is_max_plus_tally(t1, BinStr(s.substr(0, p))))
      return true;
  }
  return false;
}

bool lastf(const BinStr& x, const Tally& t1, const BinStr& u, const Tally& t2) {
  if (t1.length != t2.length || t1.digit != t2.digit) return false;
  if (!pref(u, t1)) return false;
  const std::string whole = tstr(t1) + u.str() + tstr(t1);
  if (x.str() == whole) return true;
  if (!proper_suffix("a" + whole, x.str())) return false;
  const std::string w = x.str().substr(0, x.size() - whole.size() - 1);
  return !w.empty() && is_max_plus_tally(t1, BinStr(w));
}

bool fr(const BinStr& x, const Tally& t1, const BinStr& u, const Tally& t2) {
  return firstf(x, t1, u, t2) || intf(x, t1, u, t2) || lastf(x, t1, u, t2);
}

std::vector<LiteralFrame> literal_frames(const BinStr& x) {
  std::vector<LiteralFrame> out;
  const std::size_t max_run = max_b_run(x);
  if (max_run == 0) return out;

  // Candidate wrapped elements: distinct substrings a...a of x.
  std::set<std::string> wrapped;
  const std::string& s = x.str();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'a') continue;
    for (std::size_t j = i + 3; j <= s.size(); ++j)
      if (s[j - 1] == 'a') wrapped.insert(s.substr(i, j - i));
  }

  for (const std::string& u : wrapped) {
    const BinStr ub(u);
    // Openings shorter than some b-run of u can never frame it.
    for (std::size_t k1 = max_b_run(ub) + 1; k1 <= max_run; ++k1) {
      for (std::size_t k2 = 1; k2 <= max_run; ++k2) {
        const Tally t1 = b_tally(k1), t2 = b_tally(k2);
        LiteralFrame f{t1, ub, t2, firstf(x, t1, ub, t2), intf(x, t1, ub, t2),
                       lastf(x, t1, ub, t2)};
        if (f.firstf || f.intf || f.lastf) out.push_back(std::move(f));
      }
    }
  }
  return out;
}

namespace {

bool env_in(const Tally& t, const BinStr& x, const Frames& frames) {
  if (!is_b_tally(t) || !is_max_tally(t, x)) return false;  // (a)

  bool has_first = false, has_last = false;
  for (const LiteralFrame& f : frames) {
    has_first = has_first || f.firstf;
    has_last = has_last || (f.lastf && f.opening.length == t.length);
  }
  if (!has_first || !has_last) return false;  // (b), (c)

  for (const LiteralFrame& f : frames) {
    for (const LiteralFrame& g : frames) {
      if (f.wrapped == g.wrapped && f.opening.length != g.opening.length)
        return false;  // (d)
      if (f.opening.length == g.opening.length && f.wrapped != g.wrapped)
        return false;  // (e)
    }
  }
  return true;
}

bool is_set_in(const BinStr& x, const Frames& frames) {
  if (x.str() == "aa") return true;
  for (std::size_t k = 1; k <= max_b_run(x); ++k)
    if (env_in(b_tally(k), x, frames)) return true;
  return false;
}

bool frame_precedes_in(const BinStr& x, const Frames& frames, const BinStr& u,
                       const BinStr& v) {
  const std::string wu = "a" + u.str() + "a", wv = "a" + v.str() + "a";
  for (const LiteralFrame& f : frames) {
    if (f.wrapped.str() != wu) continue;
    for (const LiteralFrame& g : frames) {
      if (g.wrapped.str() != wv) continue;
      if (f.firstf && f.opening.length != g.opening.length) return true;
      if (g.lastf && f.opening.length != g.opening.length) return true;
      if (f.intf && g.intf && f.closing.length == g.opening.length) return true;
      if (f.intf && g.intf && f.closing.length < g.opening.length) return true;
    }
  }
  return false;
}

// Immediate predecessor clause shared by Free and Bound: every frame whose
// element immediately precedes u's must relate to this opening as cmp says.
template <typename Cmp>
bool neighbour_clause(const BinStr& x, const Frames& frames, const Tally& t1,
                      const BinStr& u, Cmp cmp) {
  const BinStr u0(u.str().substr(1, u.size() - 2));
  for (const LiteralFrame& g : frames) {
    const BinStr v = bare(g);
    if (!frame_precedes_in(x, frames, v, u0)) continue;
    bool immediate = true;
    for (const LiteralFrame& h : frames) {
      const BinStr w = bare(h);
      if (frame_precedes_in(x, frames, v, w) &&
          frame_precedes_in(x, frames, w, u0)) {
        immediate = false;
        break;
      }
    }
    if (immediate && !cmp(t1.length, g.opening.length + 1)) return false;
  }
  return true;
}

bool free_in(const BinStr& x, const Frames& frames, const Tally& t1,
             const BinStr& u, const Tally& t2) {
  if (!fr(x, t1, u, t2) || firstf(x, t1, u, t2)) return false;
  return neighbour_clause(x, frames, t1, u,
                          [](std::size_t a, std::size_t b) { return a == b; });
}

bool max_plus_in(const Tally& t, const BinStr& v, const BinStr& x,
                 const Frames& frames) {
  if (!is_set_in(x, frames) || !is_b_tally(t)) return false;
  const std::string wv = "a" + v.str() + "a";
  bool member = false;
  for (const LiteralFrame& f : frames) member = member || f.wrapped.str() == wv;
  if (!member) return false;
  for (const LiteralFrame& g : frames) {
    if (frame_precedes_in(x, frames, bare(g), v) &&
        g.opening.length >= t.length)
      return false;
  }
  return true;
}

bool mmax_plus_in(const Tally& t, const BinStr& v, const BinStr& x,
                  const Frames& frames) {
  if (!max_plus_in(t, v, x, frames)) return false;
  for (std::size_t k = 1; k <= max_b_run(x) + 1; ++k)
    if (t.length > k && is_max_plus_tally(b_tally(k), v) &&
        max_plus_in(b_tally(k), v, x, frames))
      return false;
  return true;
}

}  // namespace

bool env(const Tally& t, const BinStr& x) {
  return env_in(t, x, literal_frames(x));
}

bool is_set(const BinStr& x) { return is_set_in(x, literal_frames(x)); }

bool is_member(const BinStr& y, const BinStr& x) {
  if (x.str() == "aa") return false;
  const Frames frames = literal_frames(x);
  if (!is_set_in(x, frames)) return false;
  const std::string want = "a" + y.str() + "a";
  for (const LiteralFrame& f : frames)
    if (f.wrapped.str() == want) return true;
  return false;
}

bool occ(const BinStr& w1, const BinStr& z, const BinStr& w2, const BinStr& x,
         const Tally& tp, const BinStr& v, const Tally& tpp) {
  if (w1.str() + z.str() + w2.str() != x.str()) return false;
  if (!fr(x, tp, v, tpp)) return false;

  const std::string w1z = w1.str() + z.str();
  const std::string tv = tstr(tp) + v.str();

  if (firstf(x, tp, v, tpp)) {
    if (w1.str() == tstr(tp) || proper_prefix(w1z, tv) || w1z == tv)
      return true;
  }

  // Candidate w' splits for internal and last frames.
  std::vector<std::string> wprimes;
  {
    const std::string needle = "a" + tstr(tp) + v.str() + tstr(tpp) + "a";
    const std::string& s = x.str();
    for (std::size_t p = s.find(needle); p != std::string::npos;
         p = s.find(needle, p + 1)) {
      if (p >= 1 && p + needle.size() < s.size() &&
          is_max_plus_tally(tp, BinStr(s.substr(0, p))))
        wprimes.push_back(s.substr(0, p));
    }
    const std::string tail = "a" + tstr(tp) + v.str() + tstr(tpp);
    if (lastf(x, tp, v, tpp) && proper_suffix(tail, x.str()))
      wprimes.push_back(x.str().substr(0, x.size() - tail.size()));
  }

  for (const std::string& wp : wprimes) {
    const std::string head = wp + "a" + tstr(tp);
    if (head == w1.str()) return true;
    if (head + v.str() == w1z) return true;
    // exists v1 B v with head.v1 = w1.z
    if (w1z.size() > head.size() && w1z.size() < head.size() + v.size() &&
        w1z.compare(0, head.size(), head) == 0 &&
        v.str().compare(0, w1z.size() - head.size(),
                        w1z.substr(head.size())) == 0)
      return true;
  }
  return false;
}

bool is_min_set(const BinStr& x) {
  const Frames frames = literal_frames(x);
  if (!is_set_in(x, frames)) return false;
  const std::string& s = x.str();
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] != 'a') continue;
    const BinStr w1(s.substr(0, i)), z("a"), w2(s.substr(i + 1));
    bool witnessed = false;
    for (const LiteralFrame& f : frames)
      if (occ(w1, z, w2, x, f.opening, f.wrapped, f.closing)) {
        witnessed = true;
        break;
      }
    if (!witnessed) return false;
  }
  return true;
}

bool frame_precedes(const BinStr& x, const BinStr& u, const BinStr& v) {
  return frame_precedes_in(x, literal_frames(x), u, v);
}

bool free_frame(const BinStr& x, const Tally& t1, const BinStr& u,
                const Tally& t2) {
  return free_in(x, literal_frames(x), t1, u, t2);
}

bool bound_frame(const BinStr& x, const Tally& t1, const BinStr& u,
                 const Tally& t2) {
  if (!fr(x, t1, u, t2) || firstf(x, t1, u, t2)) return false;
  return neighbour_clause(x, literal_frames(x), t1, u,
                          [](std::size_t a, std::size_t b) { return a > b; });
}

bool free_plus_frame(const BinStr& x, const Tally& t1, const BinStr& u,
                     const Tally& t2) {
  if (!fr(x, t1, u, t2)) return false;
  const Frames frames = literal_frames(x);
  const BinStr u0(u.str().substr(1, u.size() - 2));
  for (const LiteralFrame& g : frames) {
    const BinStr w = bare(g);
    if (!(frame_precedes_in(x, frames, w, u0) || w == u0)) continue;
    if (!g.firstf && !free_in(x, frames, g.opening, g.wrapped, g.closing))
      return false;
  }
  return true;
}

bool max_plus(const Tally& t, const BinStr& v, const BinStr& x) {
  return max_plus_in(t, v, x, literal_frames(x));
}

bool mmax_plus(const Tally& t, const BinStr& v, const BinStr& x) {
  return mmax_plus_in(t, v, x, literal_frames(x));
}

bool is_special(const BinStr& x) {
  const Frames frames = literal_frames(x);
  if (!is_set_in(x, frames)) return false;
  for (const LiteralFrame& f : frames)
    if (!mmax_plus_in(f.opening, bare(f), x, frames)) return false;
  return true;
}

bool left_root_pred(const BinStr& z, const BinStr& x, const BinStr& y) {
  const std::string za = z.str() + "a", zb = z.str() + "b";
  auto starts = [](const std::string& p, const BinStr& s) {
    return p == s.str() || proper_prefix(p, s.str());
  };
  return (starts(za, x) && starts(zb, y)) || (starts(zb, x) && starts(za, y));
}

bool right_root_pred(const BinStr& z, const BinStr& x, const BinStr& y) {
  const std::string az = "a" + z.str(), bz = "b" + z.str();
  auto ends = [](const std::string& p, const BinStr& s) {
    return p == s.str() || proper_suffix(p, s.str());
  };
  return (ends(az, x) && ends(bz, y)) || (ends(bz, x) && ends(az, y));
}

}  // namespace strsets::oracle
