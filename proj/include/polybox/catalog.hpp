#pragma once

#include <optional>
#include <vector>

#include "polybox/code.hpp"

namespace polybox {

enum class TwinConstraint { none, exactly_one, zero };

// All partition codes of size n over (*S)^d up to isomorphism, filtered by
// the twin-pair constraint. Supported n: 3..6 at the minimal dimension for
// the form (2, 3, 3, 4).
std::vector<Code> catalog_partition_codes(int n, int dim, TwinConstraint twins);

// All disjoint equivalent twin-pair-free pairs with |V|=n, |W|=m over (*S)^d
// up to simultaneous isomorphism, after deleting shared constant coordinates.
// Supported sizes: (2,2) d=2, (2,3) d=3, (2,4) d in {3,4}, (3,3) d=3.
std::vector<std::pair<Code, Code>> catalog_equivalent_pairs(int n, int m, int dim);

// Shared-constant-coordinate normalization used by the pair catalog.
std::pair<Code, Code> strip_ambient(const Code& v, const Code& w);

struct CoverTemplateMatch {
  std::vector<int> coords;      // the essential coordinate set A
  std::vector<Letter> letters;  // l_1..l_k witnessing the form
  int words = 0;                // 5 or 6
};

// For a twin-free V covering w: |V|=5 matches the five-word minimal-cover
// form, |V|=6 (all words meeting w) the six-word form; |V|>6 gives nullopt;
// |V|<5 is reported as a violation of the minimal-cover bound.
std::optional<CoverTemplateMatch> classify_cover(const Word& w, const Code& v);

}  // namespace polybox
