#include "polybox/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polybox {

Code apply_isomorphism(const CodeIsomorphism& m, const Code& v) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (const Word& w : v) out.push_back(m.apply(w));
  return Code(std::move(out), v.dim(), v.pairs());
}

const std::vector<LetterMap>& all_letter_maps(int pairs) {
  static std::array<std::vector<LetterMap>, max_pairs + 1> cache = [] {
    std::array<std::vector<LetterMap>, max_pairs + 1> c;
    for (int p = 1; p <= max_pairs; ++p) {
      std::array<std::uint8_t, max_pairs> perm{1, 2, 3};
      std::sort(perm.begin(), perm.begin() + p);
      do {
        for (unsigned flips = 0; flips < (1u << p); ++flips) {
          LetterMap m;
          for (int k = 0; k < p; ++k) {
            m.pair_image[static_cast<std::size_t>(k)] = perm[static_cast<std::size_t>(k)];
            m.flip[static_cast<std::size_t>(k)] = (flips >> k) & 1u;
          }
          c[static_cast<std::size_t>(p)].push_back(m);
        }
      } while (std::next_permutation(perm.begin(), perm.begin() + p));
    }
    return c;
  }();
  return cache[static_cast<std::size_t>(pairs)];
}

namespace {

// Canonicalization explores output coordinates left to right, keeping every
// partial assignment that attains the minimal sorted-prefix multiset so far.
// Prefixes are packed base-8 letter keys (tags, when present, stay in the
// most significant digits), so integer order equals the word order.
struct Frontier {
  std::uint32_t used = 0;
  std::vector<std::uint32_t> pref;

  friend bool operator<(const Frontier& a, const Frontier& b) {
    if (a.used != b.used) return a.used < b.used;
    return a.pref < b.pref;
  }
  friend bool operator==(const Frontier& a, const Frontier& b) {
    return a.used == b.used && a.pref == b.pref;
  }
};

std::vector<std::uint32_t> canonical_key(const std::vector<Word>& rows, int dim, int pairs,
                                         const CanonicalOptions& opts,
                                         const std::vector<std::uint32_t>& init) {
  std::size_t n = rows.size();
  std::vector<Frontier> frontier{{0, init}};
  const std::vector<LetterMap>& maps = all_letter_maps(pairs);

  std::vector<std::uint32_t> key(n), best(n);
  for (int k = 0; k < dim; ++k) {
    std::vector<Frontier> next;
    bool have_best = false;
    for (const Frontier& st : frontier) {
      for (int c = 0; c < dim; ++c) {
        if (st.used & (1u << c)) continue;
        if (opts.pin_first_coordinate && ((k == 0) != (c == 0))) continue;
        const std::vector<LetterMap>& allowed =
            (opts.pin_first_coordinate && k == 0) ? opts.first_coordinate_maps : maps;
        for (const LetterMap& h : allowed) {
          for (std::size_t j = 0; j < n; ++j)
            key[j] = (st.pref[j] << 3) |
                     static_cast<std::uint32_t>(letter_key(h(rows[j][c])));
          std::vector<std::uint32_t> unsorted = key;
          std::sort(key.begin(), key.end());
          if (!have_best || key < best) {
            best = key;
            have_best = true;
            next.clear();
            next.push_back({st.used | (1u << c), unsorted});
          } else if (key == best) {
            next.push_back({st.used | (1u << c), unsorted});
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return best;
}

Word decode_word(std::uint32_t packed, int dim) {
  Word w;
  w.n = static_cast<std::uint8_t>(dim);
  for (int i = dim - 1; i >= 0; --i) {
    w[i] = letter_from_key(static_cast<int>(packed & 7u));
    packed >>= 3;
  }
  return w;
}

}  // namespace

Code canonical_form(const Code& v, const CanonicalOptions& opts) {
  if (v.empty()) return v;
  std::vector<std::uint32_t> init(static_cast<std::size_t>(v.size()), 0);
  std::vector<std::uint32_t> key = canonical_key(v.words(), v.dim(), v.pairs(), opts, init);
  std::vector<Word> words;
  words.reserve(key.size());
  for (std::uint32_t p : key) words.push_back(decode_word(p, v.dim()));
  return Code(std::move(words), v.dim(), v.pairs());
}

std::pair<Code, Code> canonical_pair(const Code& v, const Code& w) {
  if (v.dim() != w.dim()) throw Error(ErrorKind::dimension_mismatch, "canonical_pair: dimension mismatch");
  std::vector<Word> rows = v.words();
  rows.insert(rows.end(), w.begin(), w.end());
  std::vector<std::uint32_t> init;
  init.insert(init.end(), static_cast<std::size_t>(v.size()), 0);
  init.insert(init.end(), static_cast<std::size_t>(w.size()), 1);
  int pairs = std::max(v.pairs(), w.pairs());
  std::vector<std::uint32_t> key = canonical_key(rows, v.dim(), pairs, {}, init);
  std::vector<Word> va, wb;
  std::uint32_t shift = static_cast<std::uint32_t>(3 * v.dim());
  for (std::uint32_t p : key) {
    Word word = decode_word(p & ((1u << shift) - 1u), v.dim());
    if (p >> shift)
      wb.push_back(word);
    else
      va.push_back(word);
  }
  return {Code(std::move(va), v.dim(), pairs), Code(std::move(wb), w.dim(), pairs)};
}

Code canonical_form_exhaustive(const Code& v) {
  if (v.empty()) return v;
  int d = v.dim();
  std::size_t n = static_cast<std::size_t>(v.size());
  const std::vector<LetterMap>& maps = all_letter_maps(v.pairs());
  std::array<std::uint8_t, max_dim> sigma{};
  std::iota(sigma.begin(), sigma.begin() + d, std::uint8_t{0});

  // Full key: per-step sorted prefix arrays, concatenated.
  auto full_key = [&](const CodeIsomorphism& m) {
    std::vector<std::uint32_t> pref(n, 0), key;
    key.reserve(n * static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < n; ++j)
        pref[j] = (pref[j] << 3) |
                  static_cast<std::uint32_t>(letter_key(
                      m.maps[static_cast<std::size_t>(k)](v[static_cast<int>(j)][m.sigma[static_cast<std::size_t>(k)]])));
      std::vector<std::uint32_t> s = pref;
      std::sort(s.begin(), s.end());
      key.insert(key.end(), s.begin(), s.end());
    }
    return key;
  };

  std::vector<std::uint32_t> best;
  do {
    std::array<std::size_t, max_dim> mi{};
    for (;;) {
      CodeIsomorphism m;
      m.sigma = sigma;
      for (int k = 0; k < d; ++k) m.maps[static_cast<std::size_t>(k)] = maps[mi[static_cast<std::size_t>(k)]];
      std::vector<std::uint32_t> key = full_key(m);
      if (best.empty() || key < best) best = std::move(key);
      int k = d - 1;
      while (k >= 0 && mi[static_cast<std::size_t>(k)] + 1 == maps.size()) {
        mi[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
      ++mi[static_cast<std::size_t>(k)];
    }
  } while (std::next_permutation(sigma.begin(), sigma.begin() + d));

  std::vector<Word> words;
  for (std::size_t j = 0; j < n; ++j) words.push_back(decode_word(best[best.size() - n + j], d));
  return Code(std::move(words), d, v.pairs());
}

}  // namespace polybox
