#include "strsets/ordering.hpp"

#include <algorithm>

#include "strsets/tallies.hpp"

namespace strsets {

std::optional<RootWitness> left_root(const BinStr& x, const BinStr& y) {
  if (x == y) throw EqualInputs("left_root requires distinct inputs");
  const std::size_t n = std::min(x.size(), y.size());
  std::size_t i = 0;
  while (i < n && x[i] == y[i]) ++i;
  if (i == 0 || i == n) return std::nullopt;  // first-digit split or prefix
  return RootWitness{BinStr(x.str().substr(0, i)), x[i] == 'a'};
}

bool lex_precedes(const BinStr& u, const BinStr& v) {
  if (u[0] == 'a' && v[0] == 'b') return true;
  if (is_initial(u, v)) return true;
  if (u == v) return false;
  const std::size_t n = std::min(u.size(), v.size());
  std::size_t i = 0;
  while (i < n && u[i] == v[i]) ++i;
  return i > 0 && i < n && u[i] == 'a' && v[i] == 'b';
}

bool precedes(const BinStr& u, const BinStr& v) {
  switch (tally_class_compare(u, v)) {
    case TallyClassOrder::Below:
      return true;
    case TallyClassOrder::Above:
      return false;
    case TallyClassOrder::Equal:
      return lex_precedes(u, v);
  }
  return false;
}

bool frame_precedes(const BinStr& x, const BinStr& u, const BinStr& v) {
  const ParsedCode p = parse(x);
  std::optional<std::size_t> iu, iv;
  for (std::size_t i = 0; i < p.frames().size(); ++i) {
    if (p.frames()[i].element == u) iu = i;
    if (p.frames()[i].element == v) iv = i;
  }
  return iu && iv && *iu < *iv;
}

bool is_lex_plus(const BinStr& x) {
  const ParsedCode p = parse(x);
  for (std::size_t i = 0; i < p.frames().size(); ++i)
    for (std::size_t j = i + 1; j < p.frames().size(); ++j)
      if (!precedes(p.frames()[i].element, p.frames()[j].element)) return false;
  return true;
}

std::optional<BinStr> max_below(const BinStr& x, const BinStr& y) {
  const ParsedCode p = parse(x);
  std::optional<BinStr> best;
  for (const Frame& f : p.frames()) {
    if (!precedes(f.element, y)) break;
    best = f.element;
  }
  return best;
}

}  // namespace strsets
