#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "polybox/cells.hpp"

namespace polybox {

struct SuitEnumOptions {
  bool allow_stars = false;
  int max_words = 0;              // 0 = unbounded
  std::uint64_t node_budget = 1'000'000;
  std::uint64_t max_suits = 0;    // 0 = unbounded
};

struct SuitEnumeration {
  CellBox polybox;
  std::vector<Code> suits;   // canonical sorted order
  bool truncated = false;    // node budget hit
  std::uint64_t nodes = 0;
};

// All exact covers of F by pairwise-disjoint word boxes drawn from the
// candidate words whose box lies inside F. Deterministic: branch on the
// lowest uncovered cell, candidates in canonical word order.
SuitEnumeration enumerate_suits(const CellBox& f, const SuitEnumOptions& opts = {});

// Visitor form; return false from the callback to stop early.
// Returns true when the enumeration was exhaustive (no budget/stop cut).
bool enumerate_suits_visit(const CellBox& f, const SuitEnumOptions& opts,
                           const std::function<bool(const Code&)>& visit,
                           std::uint64_t* nodes_out = nullptr);

enum class Rigidity { rigid, not_rigid, indeterminate };

// A star-free polybox code is rigid when its polybox has no other star-free suit.
Rigidity is_rigid(const Code& v, std::uint64_t node_budget = 1'000'000);

// Some partition code containing V, found by exact cover of the complement
// cells with stars allowed; nullopt when none exists.
std::optional<Code> extend_to_partition(const Code& v, std::uint64_t node_budget = 1'000'000);

struct EquivalentDisjointResult {
  std::vector<Code> codes;
  bool truncated = false;
};

// All star-free codes with the same polybox as V and no common word,
// optionally restricted to twin-pair-free codes.
EquivalentDisjointResult enumerate_equivalent_disjoint(const Code& v,
                                                       std::uint64_t node_budget = 1'000'000,
                                                       bool twin_free_only = false);

}  // namespace polybox
