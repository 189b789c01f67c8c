#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polybox/code.hpp"

namespace polybox {

// Box-intersection weight of two star-free words: the product over
// coordinates of 2 (equal), 1 (independent) or 0 (complementary).
inline std::int64_t g(const Word& v, const Word& w) {
  require_same_length(v, w);
  std::int64_t r = 1;
  for (int i = 0; i < v.size(); ++i) {
    if (v[i] == star || w[i] == star) throw Error(ErrorKind::star_present, "g: star-free words required");
    if (v[i] == w[i]) {
      r <<= 1;
    } else if (v[i] == complement(w[i])) {
      return 0;
    }
  }
  return r;
}

// Weight of a word against the all-star word: 2^(number of stars).
inline std::int64_t gbar(const Word& v) { return std::int64_t{1} << v.star_count(); }

struct CoverReport {
  Word target;
  std::int64_t total = 0;
  std::int64_t required = 0;  // 2^d
  bool covered = false;
  std::vector<std::pair<Word, std::int64_t>> contributions;  // words with g > 0
};

inline void require_star_free_polybox(const Code& v) {
  if (!v.star_free()) throw Error(ErrorKind::star_present, "star-free code required");
  if (!v.validated() && !is_polybox_code(v))
    throw Error(ErrorKind::not_polybox_code, "not a polybox code");
}

// Covering test: w is covered by V iff the weights sum to 2^d.
inline CoverReport covers(const Word& w, const Code& v) {
  if (!w.star_free()) throw Error(ErrorKind::star_present, "covers: star in target word");
  if (w.size() != v.dim()) throw Error(ErrorKind::dimension_mismatch, "covers: dimension mismatch");
  require_star_free_polybox(v);
  CoverReport rep;
  rep.target = w;
  rep.required = std::int64_t{1} << v.dim();
  for (const Word& u : v) {
    std::int64_t gv = g(u, w);
    if (gv > 0) rep.contributions.emplace_back(u, gv);
    rep.total += gv;
  }
  rep.covered = rep.total == rep.required;
  return rep;
}

inline bool code_covers(const Code& v, const Code& w) {
  for (const Word& u : v)
    if (!covers(u, w).covered) return false;
  return true;
}

inline bool are_equivalent(const Code& v, const Code& w) {
  return code_covers(v, w) && code_covers(w, v);
}

// Partition-code test: sum of gbar over the code equals 2^d.
inline bool is_partition_code(const Code& v) {
  if (!v.validated() && !is_polybox_code(v))
    throw Error(ErrorKind::not_polybox_code, "is_partition_code: not a polybox code");
  std::int64_t total = 0;
  for (const Word& u : v) total += gbar(u);
  return total == (std::int64_t{1} << v.dim());
}

// Residue construction: star the coordinates where v agrees with u, over the
// subset of V meeting u. The result is verified to be a partition code and
// the operation fails loudly on contradiction.
Code cover_residue(const Word& u, const Code& v);

}  // namespace polybox
