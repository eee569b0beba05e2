#include <doctest.h>

#include "strsets/binstr.hpp"
#include "strsets/enumerate.hpp"
#include "strsets/oracle.hpp"
#include "strsets/ordering.hpp"

using namespace strsets;
using namespace strsets::literals;

TEST_CASE("left_root") {
  const auto w = left_root("aab"_bs, "abb"_bs);
  REQUIRE(w.has_value());
  CHECK(w->root == "a"_bs);
  CHECK(w->x_side_a);

  CHECK(!left_root("ab"_bs, "aba"_bs).has_value());  // prefix case
  CHECK(!left_root("ab"_bs, "ba"_bs).has_value());   // first-digit split
  CHECK_THROWS_AS(left_root("ab"_bs, "ab"_bs), EqualInputs);

  // agreement with the literal predicate, both directions
  const auto S = all_strings(5);
  for (const BinStr& x : S)
    for (const BinStr& y : S) {
      if (x == y) continue;
      const auto r = left_root(x, y);
      if (r) {
        CHECK(oracle::left_root_pred(r->root, x, y));
        CHECK(r->x_side_a == (x[r->root.size()] == 'a'));
      } else {
        for (const BinStr& z : S) CHECK(!oracle::left_root_pred(z, x, y));
      }
    }
}

TEST_CASE("right root predicate") {
  CHECK(oracle::right_root_pred("b"_bs, "ab"_bs, "bb"_bs));
  CHECK(oracle::right_root_pred("ba"_bs, "ababa"_bs, "bba"_bs));
  CHECK(!oracle::right_root_pred("b"_bs, "ab"_bs, "ab"_bs));
}

TEST_CASE("lex_precedes") {
  CHECK(lex_precedes("a"_bs, "b"_bs));
  CHECK(lex_precedes("ab"_bs, "abb"_bs));
  CHECK(lex_precedes("aab"_bs, "abb"_bs));
  CHECK(!lex_precedes("b"_bs, "a"_bs));
  CHECK(!lex_precedes("abb"_bs, "ab"_bs));

  // agreement with the three-clause literal definition
  const auto S = all_strings(5);
  for (const BinStr& u : S)
    for (const BinStr& v : S) {
      bool lit = ((u == "a"_bs || u[0] == 'a') && (v == "b"_bs || v[0] == 'b')) ||
                 is_initial(u, v);
      if (!lit && u != v) {
        for (const BinStr& z : S)
          if (oracle::left_root_pred(z, u, v) &&
              (concat(z, "a"_bs) == u || is_initial(concat(z, "a"_bs), u)) &&
              (concat(z, "b"_bs) == v || is_initial(concat(z, "b"_bs), v)))
            lit = true;
      }
      CHECK(lex_precedes(u, v) == lit);
    }
}

TEST_CASE("precedes") {
  CHECK(precedes("aa"_bs, "b"_bs));
  CHECK(precedes("a"_bs, "aa"_bs));
  CHECK(!precedes("b"_bs, "aa"_bs));
}

TEST_CASE("frame_precedes") {
  CHECK(frame_precedes("baaabbababb"_bs, "a"_bs, "b"_bs));
  CHECK(!frame_precedes("baaabbababb"_bs, "b"_bs, "a"_bs));
  CHECK(!frame_precedes("baaab"_bs, "a"_bs, "a"_bs));
  CHECK(!frame_precedes("baaabbababb"_bs, "a"_bs, "aa"_bs));  // non-member
  CHECK_THROWS_AS(frame_precedes("aba"_bs, "a"_bs, "b"_bs), NotASetCode);
}

TEST_CASE("positional frame order coincides with the literal one, length <= 14") {
  for_each_string(14, [&](const BinStr& x) {
    const auto p = try_parse(x);
    if (!p) return;
    for (const Frame& f : p->frames())
      for (const Frame& g : p->frames())
        CHECK(frame_precedes(x, f.element, g.element) ==
              oracle::frame_precedes(x, f.element, g.element));
  });
}

TEST_CASE("is_lex_plus") {
  CHECK(is_lex_plus("baaabbababb"_bs));
  CHECK(is_lex_plus("aa"_bs));
  CHECK(!is_lex_plus("bbababbbaaabbb"_bs));  // b before a, legal markers
  CHECK_THROWS_AS(is_lex_plus("aba"_bs), NotASetCode);
}

TEST_CASE("max_below") {
  CHECK(max_below("baaabbababb"_bs, "b"_bs) == "a"_bs);
  CHECK(max_below("baaabbababb"_bs, "aa"_bs) == "a"_bs);
  CHECK(!max_below("baaab"_bs, "a"_bs).has_value());
  CHECK(max_below("baaabbababb"_bs, "bb"_bs) == "b"_bs);
  CHECK(!max_below("aa"_bs, "b"_bs).has_value());
}

TEST_CASE("max_below picks the largest member every earlier member precedes") {
  // on ordered codes this is the largest member preceding y (11.5 shape)
  for_each_string(11, [&](const BinStr& x) {
    if (!try_parse(x) || !is_lex_plus(x)) return;
    for (const BinStr& y : all_strings(4)) {
      const auto got = max_below(x, y);
      std::optional<BinStr> want;
      for (const Frame& f : parse(x).frames())
        if (precedes(f.element, y)) want = f.element;
      CHECK(got == want);
    }
  });
}
