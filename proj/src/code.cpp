#include "polybox/code.hpp"

namespace polybox {

std::vector<Word> all_words(int dim, int pairs, bool with_star) {
  int letters = alphabet_size(pairs, with_star);
  std::size_t total = 1;
  for (int i = 0; i < dim; ++i) total *= static_cast<std::size_t>(letters);
  std::vector<Word> out;
  out.reserve(total);
  Word w;
  w.n = static_cast<std::uint8_t>(dim);
  // Odometer over letter keys; star (key 0) is skipped when not allowed.
  std::array<int, max_dim> keys{};
  int lo = with_star ? 0 : 1;
  for (int i = 0; i < dim; ++i) keys[static_cast<std::size_t>(i)] = lo;
  int hi = 2 * pairs;
  for (;;) {
    for (int i = 0; i < dim; ++i) w[i] = letter_from_key(keys[static_cast<std::size_t>(i)]);
    out.push_back(w);
    int i = dim - 1;
    while (i >= 0 && keys[static_cast<std::size_t>(i)] == hi) {
      keys[static_cast<std::size_t>(i)] = lo;
      --i;
    }
    if (i < 0) break;
    ++keys[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace polybox
