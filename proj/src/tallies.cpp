#include "strsets/tallies.hpp"

namespace strsets {

bool is_tally(const BinStr& x, Digit d) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != to_char(d)) return false;
  return true;
}

std::size_t max_b_run(const BinStr& x) {
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    run = (x[i] == 'b') ? run + 1 : 0;
    if (run > best) best = run;
  }
  return best;
}

bool is_max_plus_tally(const Tally& t, const BinStr& u) {
  return t.digit == Digit::B && t.length > max_b_run(u);
}

bool is_max_tally(const Tally& t, const BinStr& u) {
  return t.digit == Digit::B && t.length >= max_b_run(u);
}

Tally min_nonoccurring_btally(const BinStr& y) {
  return b_tally(max_b_run(y) + 1);
}

TallyClassOrder tally_class_compare(const BinStr& u, const BinStr& v) {
  const std::size_t cu = max_b_run(u), cv = max_b_run(v);
  if (cu < cv) return TallyClassOrder::Below;
  if (cu > cv) return TallyClassOrder::Above;
  return TallyClassOrder::Equal;
}

}  // namespace strsets
