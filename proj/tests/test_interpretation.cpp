#include <doctest.h>

#include <set>
#include <vector>

#include "strsets/binstr.hpp"
#include "strsets/canonical.hpp"
#include "strsets/enumerate.hpp"
#include "strsets/frames.hpp"
#include "strsets/interpretation.hpp"

using namespace strsets;
using namespace strsets::literals;

TEST_CASE("hf_encode") {
  CHECK(hf_encode(HFTerm::set_of({})) == "aa"_bs);
  CHECK(hf_encode(HFTerm::set_of({HFTerm::set_of({})})) == "baaaab"_bs);
  CHECK(hf_encode(HFTerm::set_of({HFTerm::set_of({}),
                                  HFTerm::set_of({HFTerm::set_of({})})})) ==
        "baaaabbabaaaababb"_bs);
  CHECK(hf_encode(HFTerm::atom("ab"_bs)) == "ab"_bs);
}

TEST_CASE("hf literal grammar") {
  CHECK(hf_encode(parse_hf_literal("{}")) == "aa"_bs);
  CHECK(hf_encode(parse_hf_literal("{{}}")) == "baaaab"_bs);
  CHECK(hf_encode(parse_hf_literal(" { { } , { { } } } ")) ==
        "baaaabbabaaaababb"_bs);
  CHECK(hf_encode(parse_hf_literal("{r:ab,{}}")) ==
        encode_canonical({"ab"_bs, "aa"_bs}).code);
  CHECK_THROWS_AS(parse_hf_literal("{"), Error);
  CHECK_THROWS_AS(parse_hf_literal("x"), Error);
  CHECK_THROWS_AS(parse_hf_literal("{}}"), Error);
  CHECK_THROWS_AS(parse_hf_literal("{r:}"), Error);
}

TEST_CASE("hf_encode respects extensional equality") {
  const HFTerm a = HFTerm::atom("a"_bs), b = HFTerm::atom("b"_bs);
  CHECK(hf_encode(HFTerm::set_of({a, b})) == hf_encode(HFTerm::set_of({b, a})));
  CHECK(hf_encode(HFTerm::set_of({a, a, b})) ==
        hf_encode(HFTerm::set_of({a, b})));
}

TEST_CASE("hf_encode is injective on pure set terms to depth 3") {
  // build the cumulative levels: subsets of the previous level's terms
  std::vector<HFTerm> level = {HFTerm::set_of({})};
  std::set<BinStr> codes = {hf_encode(level[0])};
  for (int depth = 0; depth < 3; ++depth) {
    std::vector<HFTerm> next;
    const std::size_t n = level.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<HFTerm> items;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) items.push_back(level[i]);
      next.push_back(HFTerm::set_of(items));
    }
    std::set<BinStr> next_codes;
    for (const HFTerm& t : next) next_codes.insert(hf_encode(t));
    CHECK(next_codes.size() == next.size());  // distinct sets, distinct codes
    level = std::move(next);
    codes = std::move(next_codes);
  }
  CHECK(level.size() == 16);
}

TEST_CASE("verify_axioms passes on the documented bounds") {
  for (const char* name : {"ast", "ast1-ext", "ps0", "ps0-ext"}) {
    const AxiomReport r = verify_axioms(theory_from_name(name), 8, 3);
    CHECK(r.pass);
    CHECK(r.universe_size > 0);
    for (const std::string& line : r.lines)
      CHECK(line.find(": pass") != std::string::npos);
  }
}

TEST_CASE("verify_axioms rejects oversized bounds") {
  CHECK_THROWS_AS(verify_axioms(Theory::AST, 15, 3), BoundTooLarge);
  CHECK_THROWS_AS(theory_from_name("zfc"), Error);
}

TEST_CASE("adjunction is functional on the enumerated universe") {
  for_each_string(8, [&](const BinStr& x) {
    if (!is_set_star(x)) return;
    for (const BinStr& y : all_strings(2)) {
      const BinStr z1 = adjoin(x, y).code;
      std::set<BinStr> want = members(x);
      want.insert(y);
      CHECK(z1 == encode_canonical(want).code);
    }
  });
}

TEST_CASE("member-set equality is string equality on canonical codes") {
  std::vector<BinStr> canon;
  for_each_string(10, [&](const BinStr& x) {
    if (is_set_star(x)) canon.push_back(x);
  });
  for (const BinStr& x : canon)
    for (const BinStr& y : canon)
      CHECK((members(x) == members(y)) == (x == y));
}
