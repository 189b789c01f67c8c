#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "polybox/code.hpp"

namespace polybox {

// Per-coordinate letter bijection commuting with complementation: pair k maps
// to pair `pair_image[k-1]` and `flip[k-1]` swaps the primed member.
struct LetterMap {
  std::array<std::uint8_t, max_pairs> pair_image{1, 2, 3};
  std::array<bool, max_pairs> flip{false, false, false};

  Letter operator()(Letter x) const {
    if (x == star) return star;
    int k = x < 0 ? -x : x;
    Letter img = static_cast<Letter>(pair_image[static_cast<std::size_t>(k - 1)]);
    bool neg = (x < 0) != flip[static_cast<std::size_t>(k - 1)];
    return neg ? static_cast<Letter>(-img) : img;
  }
};

// Coordinate permutation plus per-coordinate letter bijections.
// Output coordinate i of the image takes maps[i](v[sigma[i]]).
struct CodeIsomorphism {
  std::array<std::uint8_t, max_dim> sigma{0, 1, 2, 3, 4, 5, 6, 7};
  std::array<LetterMap, max_dim> maps{};

  Word apply(const Word& v) const {
    Word r;
    r.n = v.n;
    for (int i = 0; i < v.size(); ++i)
      r[i] = maps[static_cast<std::size_t>(i)](v[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]);
    return r;
  }
};

Code apply_isomorphism(const CodeIsomorphism& m, const Code& v);

// All complement-commuting letter bijections on `pairs` pairs (p! * 2^p).
const std::vector<LetterMap>& all_letter_maps(int pairs);

struct CanonicalOptions {
  // Pin coordinate 0 to itself and restrict its letter map to the given set
  // (used when a structure attached to coordinate 0 must be preserved).
  bool pin_first_coordinate = false;
  std::vector<LetterMap> first_coordinate_maps;
};

// Lexicographically least image over coordinate permutations and letter
// bijections, under the prefix-multiset order (exact at every dimension).
Code canonical_form(const Code& v, const CanonicalOptions& opts = {});

inline bool are_isomorphic(const Code& v, const Code& w) {
  if (v.dim() != w.dim()) throw Error(ErrorKind::dimension_mismatch, "are_isomorphic: dimension mismatch");
  if (v.size() != w.size()) return false;
  return canonical_form(v) == canonical_form(w);
}

// Joint canonical form of an ordered pair under one simultaneous isomorphism.
std::pair<Code, Code> canonical_pair(const Code& v, const Code& w);

// Reference implementation by plain enumeration of the full group; intended
// for cross-checks at small d.
Code canonical_form_exhaustive(const Code& v);

}  // namespace polybox
