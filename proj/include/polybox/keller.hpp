#pragma once

#include <cstdint>
#include <vector>

#include "polybox/code.hpp"

namespace polybox {

// Star-free words are adjacent when dichotomous but not a twin pair.
inline bool keller_adjacent(const Word& u, const Word& w) {
  if (!u.star_free() || !w.star_free()) throw Error(ErrorKind::star_present, "keller: star-free words required");
  return are_dichotomous(u, w) && !is_twin_pair(u, w);
}

// Dense adjacency over all (2p)^d star-free words in canonical order.
class KellerGraph {
 public:
  KellerGraph(int dim, int pairs = 2);

  int dim() const { return dim_; }
  int pairs() const { return pairs_; }
  int order() const { return static_cast<int>(verts_.size()); }
  const std::vector<Word>& vertices() const { return verts_; }
  const Word& vertex(int i) const { return verts_[static_cast<std::size_t>(i)]; }
  int index_of(const Word& w) const;

  bool adjacent(int i, int j) const {
    return (rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1;
  }
  const std::vector<std::uint64_t>& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  int degree(int i) const;

 private:
  int dim_, pairs_;
  std::vector<Word> verts_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

bool is_clique(const Code& v, const KellerGraph& g);

struct MaxCliqueResult {
  Code clique;
  bool exact = false;
  std::uint64_t nodes = 0;
};

// Branch and bound with greedy-colouring bound; deterministic vertex order
// (descending degree, ties by canonical word order). Exact when the graph is
// within the size gate and the budget is not exhausted.
MaxCliqueResult max_clique(const KellerGraph& g, std::uint64_t node_budget = 0);

// No vertex of the graph extends the clique.
bool clique_is_maximal(const Code& v, const KellerGraph& g);

// The twelve-word code in dimension seven: the canonical pair's V with a
// constant tail appended on coordinates 5-7.
Code dim7_twelve_code(Letter l = 1, Letter s = 2);

struct LetterSpread {
  bool holds = false;       // five words pairwise distinct and non-complementary at i
  int distinct_pairs = 0;   // distinct pair classes present at coordinate i
  int min_pairs_required = 5;
};

// Five words pairwise non-complementary and distinct at coordinate i need
// five distinct pair classes, so this cannot hold below five pairs.
LetterSpread letter_spread_at(const Code& v, int i);

}  // namespace polybox
