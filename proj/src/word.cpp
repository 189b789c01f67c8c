#include "polybox/word.hpp"

namespace polybox {

std::string to_string(Letter x) {
  if (x == star) return "*";
  std::string s = x > 0 ? "+" : "-";
  s += static_cast<char>('0' + (x < 0 ? -x : x));
  return s;
}

std::string to_string(const Word& w) {
  std::string s;
  for (int i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i]);
  }
  return s;
}

}  // namespace polybox
