#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polybox/code.hpp"

namespace polybox {

// Fixed full-length rows plus first-coordinate letter-count constraints for
// the free rows of a 12-word completion search.
struct InitialConfig {
  int case_id = 0;
  std::string variant;             // table/variant tag, e.g. "A1", "w2", "f00042"
  int dim = 4;
  Code fixed;                      // pairwise dichotomous, twin-pair-free
  std::array<int, 4> remaining{};  // counts for +1, -1, +2, -2 at coordinate 0

  int free_rows() const { return remaining[0] + remaining[1] + remaining[2] + remaining[3]; }
};

struct SearchOptions {
  int jobs = 1;
  std::uint64_t node_budget = 0;   // per config; 0 = unbounded
  bool symmetry_breaking = true;
  bool early_siblings_prune = false;
  bool dedup_family = true;        // isomorphism dedup of the case-8 family
  std::string checkpoint_path;     // search state snapshots (run_all level)
};

struct SearchOutcome {
  InitialConfig config;
  std::vector<Code> completions;   // canonical forms, deduplicated
  std::uint64_t raw_completions = 0;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
  double wall_seconds = 0.0;
};

// The literal initial-configuration tables for one case, every variant,
// isomorphism-deduplicated. Admissible: cases 1-7 and 9-12 at d in {4,5},
// case 8 at d in {4,5,6}, case 13 at d=4.
std::vector<InitialConfig> initial_configs(int case_id, int dim, bool dedup_family = true);

bool case_admissible(int case_id, int dim);

// Backtracking completion to 12-word twin-pair-free polybox codes matching
// the count constraints and the per-coordinate siblings condition.
SearchOutcome complete(const InitialConfig& config, const SearchOptions& opts = {});

// Every admissible (case, variant) at the given dimension.
std::vector<SearchOutcome> run_all(int dim, const SearchOptions& opts = {});

// Brute-force reference: enumerate free-row combinations directly and apply
// the full acceptance predicate; for cross-checking `complete` at d=4.
std::vector<Code> complete_brute_force(const InitialConfig& config);

// The canonical pair of disjoint equivalent twin-pair-free 12-word codes and
// its two partition-code extensions, built from two non-complementary
// distinct letters.
struct TwelvePair {
  Code v, w;        // 12 words each
  Code w1, w2;      // 16-word partition codes
  Code common;      // w1 n w2 (4 words)
};

TwelvePair twelve_pair(Letter l = 1, Letter s = 2);

struct TwelvePairReport {
  struct Clause {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Clause> clauses;
  bool all_ok = true;
  std::vector<std::string> notes;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    clauses.push_back({name, ok, detail});
    all_ok = all_ok && ok;
  }
};

// Full verification of the construction; `mutate` replaces one word of V
// first (perturbation control, the report must then fail).
TwelvePairReport twelve_pair_report(Letter l = 1, Letter s = 2, bool mutate = false);

}  // namespace polybox
