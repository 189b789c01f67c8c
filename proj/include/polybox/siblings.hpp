#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polybox/code.hpp"

namespace polybox {

// Graph on a code with an edge for each i-siblings relation; the colour set
// records every witnessing coordinate.
struct SiblingsGraph {
  Code vertices;
  struct Edge {
    int u, w;            // indices into vertices, u < w
    unsigned colors;     // bit i set = i-siblings
  };
  std::vector<Edge> edges;

  std::vector<int> degrees() const {
    std::vector<int> d(static_cast<std::size_t>(vertices.size()), 0);
    for (const Edge& e : edges) {
      ++d[static_cast<std::size_t>(e.u)];
      ++d[static_cast<std::size_t>(e.w)];
    }
    return d;
  }
};

SiblingsGraph siblings_graph(const Code& v);

struct DegreeBoundReport {
  bool holds = true;            // average degree <= m/2
  double average_degree = 0.0;
  int max_adjacent_degree_sum = 0;
  bool triangle_free = true;    // checked when the vertex code is twin-free
  bool triangle_checked = false;
};

DegreeBoundReport graph_degree_bound_check(const SiblingsGraph& g);

// Per-coordinate letter counts |V^{i,l}|.
struct Distribution {
  int dim = 0;
  int pairs = 2;
  // counts[i][letter_key(l)] over the alphabet with star.
  std::vector<std::array<int, 2 * max_pairs + 1>> counts;

  int count(int i, Letter l) const {
    return counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(letter_key(l))];
  }
};

Distribution distribution(const Code& v);

// The admissible per-coordinate distributions of a twelve-word code, as case
// numbers 1..13 (13 only at d=4); nullopt when the counts match none.
std::optional<int> twelve_code_distribution_case(const std::array<int, 4>& counts, int dim);

// Convenience: case match at one coordinate of a 12-word star-free code.
std::optional<int> twelve_code_distribution_case(const Distribution& dist, int i);

// The completion-search side condition: every coordinate and every unordered
// pair of non-complementary letters has an i-siblings inside V^{i,l} u V^{i,s}.
bool siblings_condition(const Code& v);

}  // namespace polybox
