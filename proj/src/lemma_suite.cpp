#include "strsets/lemma_suite.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <utility>

#include "strsets/canonical.hpp"
#include "strsets/enumerate.hpp"
#include "strsets/errors.hpp"
#include "strsets/frames.hpp"
#include "strsets/oracle.hpp"
#include "strsets/ordering.hpp"
#include "strsets/tallies.hpp"

namespace strsets {

namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

// fn(i,j) returns false on a counterexample; the visitors stop there.
template <typename Fn>
bool visit_pairs(std::size_t n, const Bounds& b, Fn fn) {
  if (n * n <= b.sample_cap) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!fn(i, j)) return false;
    return true;
  }
  SplitMix rng{b.seed};
  for (std::size_t k = 0; k < b.sample_cap; ++k)
    if (!fn(rng.below(n), rng.below(n))) return false;
  return true;
}

template <typename Fn>
bool visit_triples(std::size_t n, const Bounds& b, Fn fn) {
  if (n * n * n <= b.sample_cap) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!fn(i, j, k)) return false;
    return true;
  }
  SplitMix rng{b.seed};
  for (std::size_t k = 0; k < b.sample_cap; ++k)
    if (!fn(rng.below(n), rng.below(n), rng.below(n))) return false;
  return true;
}

struct Code {
  BinStr x;
  ParsedCode parsed;
};

std::vector<Code> set_codes(std::size_t code_len) {
  std::vector<Code> out;
  for_each_string(code_len, [&](const BinStr& x) {
    if (auto p = try_parse(x)) out.push_back({x, std::move(*p)});
  });
  return out;
}

std::string show(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += " ";
    out += std::string(k) + "=" + v;
  }
  return out;
}

using Body = std::function<bool(const Bounds&, std::string& cex)>;

struct Property {
  PropertyInfo info;
  Body body;
};

// ---------------------------------------------------------------------------
// core: concatenation algebra and tallies

bool p_1_7(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  return visit_triples(S.size(), b, [&](std::size_t i, std::size_t j, std::size_t k) {
    const BinStr &x = S[i], &y = S[j], &z = S[k];
    if (rel_r(x, y) && rel_r(y, z) && !rel_r(x, z)) {
      cex = show({{"x", x.str()}, {"y", y.str()}, {"z", z.str()}});
      return false;
    }
    return true;
  });
}

bool p_1_13(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  return visit_pairs(S.size(), b, [&](std::size_t i, std::size_t j) {
    const BinStr &x = S[i], &y = S[j];
    if (rel_r(x, successor(y)) != (rel_r(x, y) || x == y)) {
      cex = show({{"x", x.str()}, {"y", y.str()}});
      return false;
    }
    return true;
  });
}

bool p_2_1(const Bounds& b, std::string& cex) {
  for (const BinStr& x : all_strings(b.max_len))
    if (rel_r(x, x)) {
      cex = show({{"x", x.str()}});
      return false;
    }
  return true;
}

bool p_4_5(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  return visit_pairs(S.size(), b, [&](std::size_t i, std::size_t j) {
    const BinStr &y = S[i], &z = S[j];
    if (is_tally(y, Digit::B) && is_tally(z, Digit::B) &&
        !is_tally(concat(y, z), Digit::B)) {
      cex = show({{"y", y.str()}, {"z", z.str()}});
      return false;
    }
    return true;
  });
}

bool p_4_10(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  return visit_pairs(S.size(), b, [&](std::size_t i, std::size_t j) {
    const BinStr &u = S[i], &v = S[j];
    if (is_tally(u, Digit::B) && is_tally(v, Digit::B) &&
        concat(u, v) != concat(v, u)) {
      cex = show({{"u", u.str()}, {"v", v.str()}});
      return false;
    }
    return true;
  });
}

bool p_4_7(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  return visit_pairs(S.size(), b, [&](std::size_t i, std::size_t j) {
    const BinStr &u = S[i], &v = S[j];
    if (is_tally(v, Digit::B) && rel_r(u, v) && !leq(successor(u), v)) {
      cex = show({{"u", u.str()}, {"v", v.str()}});
      return false;
    }
    return true;
  });
}

// All decompositions x = z.u.v with an a-tally z before a b-led u agree on z.
bool p_4_23(const Bounds& b, std::string& cex) {
  for (const BinStr& x : all_strings(b.max_len + 2)) {
    const std::string& s = x.str();
    std::size_t seen = 0, first = 0;
    for (std::size_t i = 1; i + 3 <= s.size(); ++i) {
      if (s[i - 1] == 'b') break;         // z = s[0..i) must stay an a-tally
      if (s[i] != 'b') continue;          // bBu: u = s[i..j) starts with b
      if (seen++ == 0) first = i;         // u >= 2 and v >= 1 fit by the bound
    }
    if (seen > 1) {
      cex = show({{"x", s}, {"z1", s.substr(0, first)}});
      return false;
    }
  }
  return true;
}

// Mirror image: trailing a-tallies preceded by a b-ended u agree.
bool p_4_24(const Bounds& b, std::string& cex) {
  for (const BinStr& x : all_strings(b.max_len + 2)) {
    const std::string& s = x.str();
    std::size_t seen = 0;
    for (std::size_t k = 1; k + 3 <= s.size(); ++k) {
      if (s[s.size() - k] == 'b') break;  // z = last k chars stays an a-tally
      if (s[s.size() - k - 1] != 'b') continue;  // bEu: u ends with b
      ++seen;
    }
    if (seen > 1) {
      cex = show({{"x", s}});
      return false;
    }
  }
  return true;
}

bool p_6_8(const Bounds& b, std::string& cex) {
  for (const BinStr& x : all_strings(b.max_len)) {
    std::size_t minimal = 0, count = 0;
    for (std::size_t k = 1; k <= x.size() + 1; ++k) {
      if (!is_max_plus_tally(b_tally(k), x)) continue;
      bool least = true;
      for (std::size_t k2 = 1; k2 < k; ++k2)
        if (is_max_plus_tally(b_tally(k2), x)) least = false;
      if (least) {
        ++count;
        minimal = k;
      }
    }
    if (count != 1 || minimal != min_nonoccurring_btally(x).length) {
      cex = show({{"x", x.str()}});
      return false;
    }
  }
  return true;
}

bool p_6_9(const Bounds& b, std::string& cex) {
  for (const BinStr& x : all_strings(b.max_len)) {
    if ((min_nonoccurring_btally(x).length == 1) != is_tally(x, Digit::A)) {
      cex = show({{"x", x.str()}});
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// frames: the literal grammar

bool p_5_5(const Bounds& b, std::string& cex) {
  for (const BinStr& x : all_strings(b.code_len)) {
    const std::string& s = x.str();
    if (s.front() != 'b' || s.back() != 'b') continue;
    for (std::size_t k = 1; 2 * k + 3 <= s.size(); ++k) {
      const std::string t(k, 'b');
      if (s.compare(0, k, t) != 0 || s.compare(s.size() - k, k, t) != 0)
        continue;
      const BinStr u(s.substr(k, s.size() - 2 * k));
      if (!oracle::pref(u, b_tally(k)) || !is_max_tally(b_tally(k), x)) continue;
      for (const auto& f : oracle::literal_frames(x))
        if (f.opening.length != k || f.closing.length != k) {
          cex = show({{"x", s}, {"t1", f.opening.str().str()}});
          return false;
        }
    }
  }
  return true;
}

bool p_5_7(const Bounds& b, std::string& cex) {
  for (const BinStr& x : all_strings(b.code_len)) {
    for (const auto& f : oracle::literal_frames(x)) {
      if (!f.firstf) continue;
      if (!oracle::lastf(x, f.opening, f.wrapped, f.opening)) continue;
      const std::string whole =
          f.opening.str().str() + f.wrapped.str() + f.opening.str().str();
      if (x.str() != whole || f.closing.length != f.opening.length) {
        cex = show({{"x", x.str()}, {"u", f.wrapped.str()}});
        return false;
      }
    }
  }
  return true;
}

bool p_5_15(const Bounds& b, std::string& cex) {
  for (const BinStr& x : all_strings(b.code_len)) {
    const auto frames = oracle::literal_frames(x);
    for (const auto& f : frames)
      for (const auto& g : frames) {
        if (f.firstf && g.firstf && f.wrapped != g.wrapped) {
          cex = show({{"x", x.str()}, {"u1", f.wrapped.str()}, {"u2", g.wrapped.str()}});
          return false;
        }
        if (f.lastf && g.lastf && f.wrapped != g.wrapped) {
          cex = show({{"x", x.str()}, {"u1", f.wrapped.str()}, {"u2", g.wrapped.str()}});
          return false;
        }
      }
  }
  return true;
}

bool p_5_18(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    if (members(c.x).empty() != (c.x.str() == "aa")) {
      cex = show({{"x", c.x.str()}});
      return false;
    }
  }
  return true;
}

bool p_5_21(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    if (c.parsed.is_empty()) continue;
    const Frame& f0 = c.parsed.frames()[0];
    const std::string whole = f0.opening.str().str() + f0.wrapped().str() +
                              f0.closing.str().str();
    if (c.x.str() != whole) continue;
    if (members(c.x) != std::set<BinStr>{f0.element}) {
      cex = show({{"x", c.x.str()}});
      return false;
    }
  }
  return true;
}

bool p_5_22(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    const auto mem = members(c.x);
    bool singleton_shape = false;
    if (!c.parsed.is_empty() && c.parsed.frames().size() == 1) {
      const Frame& f = c.parsed.frames()[0];
      singleton_shape =
          oracle::firstf(c.x, f.opening, f.wrapped(), f.opening) &&
          c.x.str() == f.opening.str().str() + f.wrapped().str() +
                           f.opening.str().str();
    }
    if ((mem.size() == 1) != singleton_shape) {
      cex = show({{"x", c.x.str()}});
      return false;
    }
  }
  return true;
}

bool p_5_42(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    const auto frames = oracle::literal_frames(c.x);
    for (const auto& f : frames)
      for (const auto& g : frames)
        if (f.wrapped == g.wrapped &&
            (f.opening.length != g.opening.length ||
             f.closing.length != g.closing.length)) {
          cex = show({{"x", c.x.str()}, {"u", f.wrapped.str()}});
          return false;
        }
  }
  return true;
}

bool p_5_58(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len > 3 ? 3 : b.max_len);
  for (const BinStr& u : S)
    for (const BinStr& v : S) {
      if (u == v) continue;
      const BinStr wu("a" + u.str() + "a"), wv("a" + v.str() + "a");
      for (std::size_t k1 = 1; k1 <= 4; ++k1)
        for (std::size_t k2 = k1 + 1; k2 <= 5; ++k2) {
          if (!oracle::pref(wu, b_tally(k1)) || !oracle::pref(wv, b_tally(k2)))
            continue;
          const BinStr x(std::string(k1, 'b') + wu.str() + std::string(k2, 'b') +
                         wv.str() + std::string(k2, 'b'));
          if (!is_set(x) || members(x) != std::set<BinStr>{u, v}) {
            cex = show({{"x", x.str()}});
            return false;
          }
        }
    }
  return true;
}

// ---------------------------------------------------------------------------
// order: lexical precedence, tally-modified precedence, frame order

bool p_6_1(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  for (const BinStr& x : S)
    for (const BinStr& y : S) {
      if (x == y) continue;
      const auto w = left_root(x, y);
      if (w && (is_initial(x, y) || is_initial(y, x))) {
        cex = show({{"x", x.str()}, {"y", y.str()}});
        return false;
      }
    }
  return true;
}

bool p_6_2(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  for (const BinStr& x : S)
    for (const BinStr& y : S) {
      if (x == y) continue;
      std::size_t roots = 0;
      for (const BinStr& z : S)
        if (oracle::left_root_pred(z, x, y)) ++roots;
      const auto w = left_root(x, y);
      if (roots > 1 || (roots == 1) != w.has_value() ||
          (w && !oracle::left_root_pred(w->root, x, y))) {
        cex = show({{"x", x.str()}, {"y", y.str()}});
        return false;
      }
    }
  return true;
}

bool p_6_5(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  return visit_pairs(S.size(), b, [&](std::size_t i, std::size_t j) {
    const BinStr &u = S[i], &v = S[j];
    const int c = (lex_precedes(u, v) ? 1 : 0) + (u == v ? 1 : 0) +
                  (lex_precedes(v, u) ? 1 : 0);
    if (c != 1) {
      cex = show({{"u", u.str()}, {"v", v.str()}});
      return false;
    }
    return true;
  });
}

bool p_6_6(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  return visit_triples(S.size(), b, [&](std::size_t i, std::size_t j, std::size_t k) {
    const BinStr &u = S[i], &v = S[j], &w = S[k];
    if (lex_precedes(u, v) && lex_precedes(v, w) && !lex_precedes(u, w)) {
      cex = show({{"u", u.str()}, {"v", v.str()}, {"w", w.str()}});
      return false;
    }
    return true;
  });
}

bool p_6_7(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  return visit_pairs(S.size(), b, [&](std::size_t i, std::size_t j) {
    const BinStr &u = S[i], &v = S[j];
    if (lex_precedes(u, v) && lex_precedes(v, u)) {
      cex = show({{"u", u.str()}, {"v", v.str()}});
      return false;
    }
    return true;
  });
}

bool p_8_1(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  return visit_pairs(S.size(), b, [&](std::size_t i, std::size_t j) {
    const BinStr &u = S[i], &v = S[j];
    const auto uv = tally_class_compare(u, v);
    const auto vu = tally_class_compare(v, u);
    const bool tri = uv == TallyClassOrder::Below ||
                     uv == TallyClassOrder::Equal ||
                     vu == TallyClassOrder::Below;
    const bool excl = !(uv == TallyClassOrder::Below && vu == TallyClassOrder::Below);
    const bool mirror = (uv == TallyClassOrder::Below) == (vu == TallyClassOrder::Above);
    if (!tri || !excl || !mirror) {
      cex = show({{"u", u.str()}, {"v", v.str()}});
      return false;
    }
    return true;
  });
}

bool p_8_2(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  return visit_pairs(S.size(), b, [&](std::size_t i, std::size_t j) {
    const BinStr &u = S[i], &v = S[j];
    const int c = (precedes(u, v) ? 1 : 0) + (u == v ? 1 : 0) +
                  (precedes(v, u) ? 1 : 0);
    if (c != 1) {
      cex = show({{"u", u.str()}, {"v", v.str()}});
      return false;
    }
    return true;
  });
}

bool p_8_3(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len);
  return visit_triples(S.size(), b, [&](std::size_t i, std::size_t j, std::size_t k) {
    const BinStr &u = S[i], &v = S[j], &w = S[k];
    if (precedes(u, v) && precedes(v, w) && !precedes(u, w)) {
      cex = show({{"u", u.str()}, {"v", v.str()}, {"w", w.str()}});
      return false;
    }
    return true;
  });
}

bool p_9_1(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    if (c.parsed.is_empty()) continue;
    const BinStr& v = c.parsed.frames()[0].element;
    for (const Frame& f : c.parsed.frames())
      if (frame_precedes(c.x, f.element, v)) {
        cex = show({{"x", c.x.str()}, {"u", f.element.str()}});
        return false;
      }
  }
  return true;
}

bool p_9_3(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    if (c.parsed.is_empty()) continue;
    const BinStr& v = c.parsed.frames().back().element;
    for (const Frame& f : c.parsed.frames())
      if (f.element != v && !frame_precedes(c.x, f.element, v)) {
        cex = show({{"x", c.x.str()}, {"u", f.element.str()}});
        return false;
      }
  }
  return true;
}

bool p_9_4(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len))
    for (const Frame& f : c.parsed.frames())
      if (frame_precedes(c.x, f.element, f.element)) {
        cex = show({{"x", c.x.str()}, {"u", f.element.str()}});
        return false;
      }
  return true;
}

bool p_9_5(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    if (c.parsed.is_empty()) continue;
    const BinStr& v = c.parsed.frames().back().element;
    for (const Frame& f : c.parsed.frames())
      if (frame_precedes(c.x, v, f.element)) {
        cex = show({{"x", c.x.str()}, {"u", f.element.str()}});
        return false;
      }
  }
  return true;
}

bool p_9_6(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len))
    for (const Frame& f : c.parsed.frames())
      for (const Frame& g : c.parsed.frames())
        if (frame_precedes(c.x, f.element, g.element) &&
            frame_precedes(c.x, g.element, f.element)) {
          cex = show({{"x", c.x.str()}, {"u", f.element.str()}, {"v", g.element.str()}});
          return false;
        }
  return true;
}

bool p_9_7(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len))
    for (const Frame& f : c.parsed.frames())
      for (const Frame& g : c.parsed.frames()) {
        if (f.element == g.element) continue;
        if (!frame_precedes(c.x, f.element, g.element) &&
            !frame_precedes(c.x, g.element, f.element)) {
          cex = show({{"x", c.x.str()}, {"u", f.element.str()}, {"v", g.element.str()}});
          return false;
        }
      }
  return true;
}

bool p_9_10(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    if (c.parsed.is_empty()) continue;
    for (const Frame& f : c.parsed.frames()) {
      bool leastmost = true;
      for (const Frame& g : c.parsed.frames())
        if (!(f.element == g.element ||
              frame_precedes(c.x, f.element, g.element)))
          leastmost = false;
      if (leastmost && f.kind != FrameKind::First) {
        cex = show({{"x", c.x.str()}, {"v", f.element.str()}});
        return false;
      }
    }
  }
  return true;
}

bool p_9_14(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len))
    for (const Frame& f : c.parsed.frames())
      for (const Frame& g : c.parsed.frames()) {
        const bool lt = frame_precedes(c.x, f.element, g.element);
        if (lt != (f.opening.length < g.opening.length)) {
          cex = show({{"x", c.x.str()}, {"u", f.element.str()}, {"v", g.element.str()}});
          return false;
        }
      }
  return true;
}

bool p_9_16(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len))
    for (const Frame& f : c.parsed.frames())
      for (const Frame& g : c.parsed.frames())
        for (const Frame& h : c.parsed.frames())
          if (frame_precedes(c.x, f.element, g.element) &&
              frame_precedes(c.x, g.element, h.element) &&
              !frame_precedes(c.x, f.element, h.element)) {
            cex = show({{"x", c.x.str()}});
            return false;
          }
  return true;
}

bool p_9_22(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    if (c.parsed.is_empty()) continue;
    const auto classes = classify_frames(c.parsed);
    for (std::size_t i = 1; i < c.parsed.frames().size(); ++i) {
      const Frame& f = c.parsed.frames()[i];
      const bool fr = oracle::free_frame(c.x, f.opening, f.wrapped(), f.closing);
      const bool bd = oracle::bound_frame(c.x, f.opening, f.wrapped(), f.closing);
      if (fr == bd || fr != (classes[i].kind == FrameClassKind::Free) ||
          bd != (classes[i].kind == FrameClassKind::Bound)) {
        cex = show({{"x", c.x.str()}, {"u", f.element.str()}});
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// canonical

bool p_10_2(const Bounds& b, std::string& cex) {
  std::map<std::set<BinStr>, std::map<BinStr, std::size_t>> markers;
  for (const Code& c : set_codes(b.code_len)) {
    if (!is_lex_plus(c.x) || !is_special(c.x)) continue;
    auto& per_elem = markers[members(c.x)];
    for (const Frame& f : c.parsed.frames()) {
      auto [it, fresh] = per_elem.emplace(f.element, f.opening.length);
      if (!fresh && it->second != f.opening.length) {
        cex = show({{"x", c.x.str()}, {"u", f.element.str()}});
        return false;
      }
    }
  }
  return true;
}

bool p_10_4(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    if (!is_min_set(c.x) || members(c.x).size() != 2) continue;
    const auto& fs = c.parsed.frames();
    const bool shape = fs.size() == 2 &&
                       fs[0].closing.length == fs[1].opening.length &&
                       fs[1].opening.length == c.parsed.envelope().length &&
                       c.parsed.serialize() == c.x;
    if (!shape) {
      cex = show({{"x", c.x.str()}});
      return false;
    }
  }
  return true;
}

bool p_10_5(const Bounds& b, std::string& cex) {
  for (const BinStr& u : all_strings(b.max_len > 4 ? 4 : b.max_len)) {
    for (std::size_t k = max_b_run(u) + 1; k <= 5; ++k) {
      const BinStr x(std::string(k, 'b') + "a" + u.str() + "a" +
                     std::string(k, 'b'));
      if (!is_min_set(x)) {
        cex = show({{"x", x.str()}});
        return false;
      }
    }
  }
  return true;
}

bool p_10_7(const Bounds& b, std::string& cex) {
  const auto S = all_strings(b.max_len > 3 ? 3 : b.max_len);
  for (const BinStr& u : S)
    for (const BinStr& v : S) {
      if (u == v) continue;
      for (std::size_t k1 = max_b_run(u) + 1; k1 <= 4; ++k1)
        for (std::size_t k2 = std::max(k1 + 1, max_b_run(v) + 1); k2 <= 5; ++k2) {
          const BinStr x(std::string(k1, 'b') + "a" + u.str() + "a" +
                         std::string(k2, 'b') + "a" + v.str() + "a" +
                         std::string(k2, 'b'));
          if (!is_min_set(x)) {
            cex = show({{"x", x.str()}});
            return false;
          }
        }
    }
  return true;
}

bool p_10_16(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    if (c.parsed.is_empty() || !is_special(c.x)) continue;
    const Frame& f0 = c.parsed.frames()[0];
    if (f0.opening.length != min_nonoccurring_btally(f0.element).length) {
      cex = show({{"x", c.x.str()}});
      return false;
    }
  }
  return true;
}

bool p_11_4(const Bounds& b, std::string& cex) {
  std::map<std::set<BinStr>, BinStr> seen;
  for (const Code& c : set_codes(b.code_len)) {
    if (!is_set_star(c.x)) continue;
    auto [it, fresh] = seen.emplace(members(c.x), c.x);
    if (!fresh && it->second != c.x) {
      cex = show({{"x", it->second.str()}, {"y", c.x.str()}});
      return false;
    }
  }
  return true;
}

bool p_12_1(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len)) {
    if (!is_set_star(c.x)) continue;
    for (const BinStr& y : all_strings(b.max_len)) {
      bool any_below = false;
      for (const Frame& f : c.parsed.frames())
        any_below = any_below || precedes(f.element, y);
      // Frame-order maxima of members whose whole <=_x-downset precedes y.
      std::vector<BinStr> qualifying;
      for (const Frame& f : c.parsed.frames()) {
        bool all_below = true;
        for (const Frame& g : c.parsed.frames())
          if ((g.element == f.element ||
               frame_precedes(c.x, g.element, f.element)) &&
              !precedes(g.element, y))
            all_below = false;
        if (all_below) qualifying.push_back(f.element);
      }
      const auto got = max_below(c.x, y);
      if (any_below) {
        if (qualifying.empty() || !got || qualifying.back() != *got) {
          cex = show({{"x", c.x.str()}, {"y", y.str()}});
          return false;
        }
      } else if (got) {
        cex = show({{"x", c.x.str()}, {"y", y.str()}});
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// controls: a deliberately falsified reading, proving the harness can fail

bool p_9_4_neg(const Bounds& b, std::string& cex) {
  for (const Code& c : set_codes(b.code_len > 10 ? 10 : b.code_len))
    for (const Frame& f : c.parsed.frames()) {
      const bool reflexive_leq = frame_precedes(c.x, f.element, f.element) ||
                                 is_member(f.element, c.x);
      if (reflexive_leq) {
        cex = show({{"x", c.x.str()}, {"u", f.element.str()}});
        return false;
      }
    }
  return true;
}

const std::vector<Property>& registry() {
  static const std::vector<Property> props = [] {
    std::vector<Property> v;
    auto add = [&](const char* id, const char* stmt, const char* suite, Body body) {
      v.push_back({{id, stmt, suite}, std::move(body)});
    };
    add("1.7", "xRy & yRz -> xRz", "core", p_1_7);
    add("1.13", "xR(Sy) <-> xRy | x=y", "core", p_1_13);
    add("2.1", "~xRx", "core", p_2_1);
    add("4.5", "Tally_b(y) & Tally_b(z) -> Tally_b(y*z)", "core", p_4_5);
    add("4.7", "Tally_b(v) & u < v -> Su <= v", "core", p_4_7);
    add("4.10", "Tally_b(u) & Tally_b(v) -> u*v = v*u", "core", p_4_10);
    add("4.23", "Tally_a(z1) & Tally_a(z2) & z1 u1 v1 = z2 u2 v2 & bBu1 & bBu2 -> z1 = z2",
        "core", p_4_23);
    add("4.24", "Tally_a(z3) & Tally_a(z4) & v1 u1 z3 = v2 u2 z4 & bEu1 & bEu2 -> z3 = z4",
        "core", p_4_24);
    add("6.8", "exactly one minimal t with Max+T_b(t,x)", "core", p_6_8);
    add("6.9", "MinMax+T_b(b,x) <-> Tally_a(x)", "core", p_6_9);

    add("5.5", "x = t.u.t & MaxT_b(t,x) & Fr(x,t1,v,t2) -> t1 = t = t2", "frames", p_5_5);
    add("5.7", "Firstf(x,t,u,t') & Lastf(x,t,u,t) -> x = t.u.t & t = t'", "frames", p_5_7);
    add("5.15", "two Firstf (resp. Lastf) witnesses carry the same element", "frames", p_5_15);
    add("5.18", "Set(z) -> (exists y: y eps z <-> z != aa)", "frames", p_5_18);
    add("5.21", "Set(x) & Firstf(x,t1,u,t2) & x = t1.u.t2 -> members(x) = {u}", "frames", p_5_21);
    add("5.22", "members(x) = {u} <-> x = t.a.u.a.t & Firstf(x,t,aua,t)", "frames", p_5_22);
    add("5.42", "Fr(x,t1,u,t2) & Fr(x,t3,u,t4) -> t1 = t3 & t2 = t4 on set codes", "frames", p_5_42);
    add("5.58", "t1.aua.t2.ava.t2 with Pref pair & t1 < t2 & u != v codes {u,v}", "frames", p_5_58);

    add("6.1", "Rt_L(z,x,y) -> ~xBy & ~yBx", "order", p_6_1);
    add("6.2", "Rt_L(z1,x,y) & Rt_L(z2,x,y) -> z1 = z2", "order", p_6_2);
    add("6.5", "u << v | u = v | v << u", "order", p_6_5);
    add("6.6", "u << v & v << w -> u << w", "order", p_6_6);
    add("6.7", "~(u << v & v << u)", "order", p_6_7);
    add("8.1", "tally classes: trichotomy and exclusivity", "order", p_8_1);
    add("8.2", "u < v | u = v | v < u, exclusively (tally-modified)", "order", p_8_2);
    add("8.3", "u < v & v < w -> u < w (tally-modified)", "order", p_8_3);
    add("9.1", "first-frame element has no <_x predecessor", "order", p_9_1);
    add("9.3", "every other member <_x the last-frame element", "order", p_9_3);
    add("9.4", "~(u <_x u)", "order", p_9_4);
    add("9.5", "last-frame element has no <_x successor", "order", p_9_5);
    add("9.6", "~(u <_x v & v <_x u)", "order", p_9_6);
    add("9.7", "distinct members are <_x comparable", "order", p_9_7);
    add("9.10", "the <=_x-least member sits in the first frame", "order", p_9_10);
    add("9.14", "u <_x v <-> opening(u) < opening(v)", "order", p_9_14);
    add("9.16", "u <_x v & v <_x w -> u <_x w", "order", p_9_16);
    add("9.22", "Fr & ~Firstf -> Free | Bound, matching classify_frames", "order", p_9_22);

    add("10.2", "Lex+ & Special codes of one member set agree on every opening marker",
        "canonical", p_10_2);
    add("10.4", "a MinSet code with two members is exactly t1.aya.t2.ay'a.t2",
        "canonical", p_10_4);
    add("10.5", "Pref(aua,t) -> MinSet(t.aua.t)", "canonical", p_10_5);
    add("10.7", "pair code t1.aua.t2.ava.t2 with Pref & t1 < t2 is MinSet",
        "canonical", p_10_7);
    add("10.16", "Special & first frame -> opening marker is MinMax+T_b of the element",
        "canonical", p_10_16);
    add("11.4", "Set*(x) & Set*(y) & x ~ y -> x = y", "canonical", p_11_4);
    add("12.1", "some member < y -> exactly one Max_<=(u,x,y), = max_below",
        "canonical", p_12_1);

    add("9.4-reflexive-misread",
        "~(u <=_x u) with <=_x read reflexively; expected to fail", "controls",
        p_9_4_neg);
    return v;
  }();
  return props;
}

}  // namespace

const std::vector<PropertyInfo>& registered_properties() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> v;
    for (const Property& p : registry()) v.push_back(p.info);
    return v;
  }();
  return infos;
}

PropertyResult run_property(const std::string& id, const Bounds& bounds) {
  for (const Property& p : registry()) {
    if (p.info.id != id) continue;
    PropertyResult r;
    r.id = p.info.id;
    r.statement = p.info.statement;
    const auto start = std::chrono::steady_clock::now();
    r.pass = p.body(bounds, r.counterexample);
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return r;
  }
  throw UnknownProperty("no registered property with id " + id);
}

std::vector<PropertyResult> run_suite(const std::string& name,
                                      const Bounds& bounds) {
  std::vector<PropertyResult> out;
  bool any = false;
  for (const Property& p : registry())
    if (p.info.suite == name) {
      any = true;
      out.push_back(run_property(p.info.id, bounds));
    }
  if (!any) throw UnknownProperty("no suite named " + name);
  return out;
}

}  // namespace strsets
