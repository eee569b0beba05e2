#include <doctest.h>

#include "strsets/binstr.hpp"
#include "strsets/enumerate.hpp"
#include "strsets/tallies.hpp"

using namespace strsets;
using namespace strsets::literals;

namespace {

// Independent oracle: longest b-tally among all substrings, by enumeration.
std::size_t max_b_run_oracle(const BinStr& x) {
  std::size_t best = 0;
  const std::string& s = x.str();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j <= s.size(); ++j) {
      const BinStr sub(s.substr(i, j - i));
      if (is_tally(sub, Digit::B) && sub.size() > best) best = sub.size();
    }
  return best;
}

// Independent oracle: shortest b^k that is not a substring, by linear scan.
std::size_t min_nonoccurring_oracle(const BinStr& x) {
  for (std::size_t k = 1;; ++k)
    if (!is_substring(b_tally(k).str(), x)) return k;
}

}  // namespace

TEST_CASE("is_tally") {
  CHECK(is_tally("bbb"_bs, Digit::B));
  CHECK(!is_tally("ab"_bs, Digit::B));
  CHECK(is_tally("a"_bs, Digit::A));
  // tallies are closed under appending their digit and decompose by one step
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(is_tally(successor(b_tally(k).str()), Digit::B));
    if (k > 1) CHECK(b_tally(k).str() == successor(b_tally(k - 1).str()));
  }
  // no b-tally contains an a-tally and vice versa
  for (const BinStr& x : all_strings(5))
    if (is_tally(x, Digit::B)) CHECK(!is_substring("a"_bs, x));
}

TEST_CASE("max_b_run against the substring oracle") {
  CHECK(max_b_run("aa"_bs) == 0);
  CHECK(max_b_run("aba"_bs) == 1);   // frozen from the oracle
  CHECK(max_b_run("abba"_bs) == 2);  // frozen from the oracle
  for (const BinStr& x : all_strings(8))
    CHECK(max_b_run(x) == max_b_run_oracle(x));
}

TEST_CASE("is_max_plus_tally matches its quantified reading") {
  CHECK(is_max_plus_tally(b_tally(2), "aba"_bs));
  CHECK(!is_max_plus_tally(b_tally(1), "aba"_bs));
  CHECK(!is_max_plus_tally(b_tally(2), "abba"_bs));
  for (const BinStr& u : all_strings(8)) {
    for (std::size_t k = 1; k <= 9; ++k) {
      // every b-tally substring of u fits in t, and t does not occur in u
      bool literal = !is_substring(b_tally(k).str(), u);
      for (std::size_t j = 1; literal && j <= u.size(); ++j)
        if (is_substring(b_tally(j).str(), u) && j > k) literal = false;
      CHECK(is_max_plus_tally(b_tally(k), u) == literal);
    }
  }
}

TEST_CASE("min_nonoccurring_btally") {
  CHECK(min_nonoccurring_btally("aa"_bs).str() == "b"_bs);
  CHECK(min_nonoccurring_btally("aba"_bs).str() == "bb"_bs);
  CHECK(min_nonoccurring_btally("abba"_bs).str() == "bbb"_bs);
  for (const BinStr& x : all_strings(8))
    CHECK(min_nonoccurring_btally(x).length == min_nonoccurring_oracle(x));
}

TEST_CASE("minimal non-occurrent tally is unique (length <= 10)") {
  for (const BinStr& x : all_strings(10)) {
    std::size_t minimal = 0;
    for (std::size_t k = 1; k <= 11; ++k)
      if (is_max_plus_tally(b_tally(k), x)) {
        minimal = k;
        break;
      }
    REQUIRE(minimal > 0);
    CHECK(minimal == min_nonoccurring_btally(x).length);
    // everything above the minimum also qualifies, everything below fails
    for (std::size_t k = 1; k <= 11; ++k)
      CHECK(is_max_plus_tally(b_tally(k), x) == (k >= minimal));
    // both directions of the a-tally characterization
    CHECK((minimal == 1) == is_tally(x, Digit::A));
  }
}

TEST_CASE("tally_class_compare") {
  CHECK(tally_class_compare("aa"_bs, "b"_bs) == TallyClassOrder::Below);
  CHECK(tally_class_compare("a"_bs, "aa"_bs) == TallyClassOrder::Equal);
  CHECK(tally_class_compare("abba"_bs, "ab"_bs) == TallyClassOrder::Above);
  for (const BinStr& u : all_strings(6))
    for (const BinStr& v : all_strings(6)) {
      const auto uv = tally_class_compare(u, v), vu = tally_class_compare(v, u);
      CHECK((uv == TallyClassOrder::Below) == (vu == TallyClassOrder::Above));
      CHECK((uv == TallyClassOrder::Equal) == (vu == TallyClassOrder::Equal));
    }
}
