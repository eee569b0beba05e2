#include "strsets/binstr.hpp"

namespace strsets {

BinStr concat(const BinStr& x, const BinStr& y) {
  return BinStr(x.str() + y.str());
}

bool is_initial(const BinStr& x, const BinStr& y) {
  return x.size() < y.size() &&
         y.str().compare(0, x.size(), x.str()) == 0;
}

bool is_terminal(const BinStr& x, const BinStr& y) {
  return x.size() < y.size() &&
         y.str().compare(y.size() - x.size(), x.size(), x.str()) == 0;
}

bool is_substring(const BinStr& x, const BinStr& y) {
  return y.str().find(x.str()) != std::string::npos;
}

BinStr successor(const BinStr& x) {
  if (x.str() == "a") return BinStr("b");
  return BinStr(x.str() + "b");
}

bool rel_r(const BinStr& x, const BinStr& y) {
  if (x.str() == "a" && y.str() != "a") return true;
  return is_initial(x, y);
}

bool leq(const BinStr& x, const BinStr& y) {
  return x == y || rel_r(x, y);
}

}  // namespace strsets
