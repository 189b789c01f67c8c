#include "polybox/suits.hpp"

#include <algorithm>

namespace polybox {

namespace {

struct Candidate {
  Word word;
  CellBox box;
  std::size_t pop;
};

struct CoverSearch {
  const std::vector<Candidate>& cands;
  const std::vector<std::vector<int>>& by_cell;  // candidate indices covering each cell
  const SuitEnumOptions& opts;
  const std::function<bool(const Code&)>& visit;
  int dim;
  int pairs;
  std::uint64_t nodes = 0;
  bool stopped = false;     // caller asked to stop
  bool truncated = false;   // budget hit
  std::size_t max_pop = 0;
  std::vector<int> chosen;

  void run(CellBox& uncovered) {
    if (stopped || truncated) return;
    if (uncovered.empty()) {
      std::vector<Word> words;
      words.reserve(chosen.size());
      for (int c : chosen) words.push_back(cands[static_cast<std::size_t>(c)].word);
      Code suit(std::move(words), dim, pairs);
      suit.validate_polybox();
      if (!visit(suit)) stopped = true;
      return;
    }
    if (opts.max_words > 0) {
      std::size_t room = static_cast<std::size_t>(opts.max_words) - chosen.size();
      if (room == 0 || uncovered.popcount() > room * max_pop) return;
    }
    std::size_t cell = uncovered.lowest_set();
    for (int ci : by_cell[cell]) {
      const Candidate& c = cands[static_cast<std::size_t>(ci)];
      if (++nodes > opts.node_budget && opts.node_budget > 0) {
        truncated = true;
        return;
      }
      if (!c.box.is_subset_of(uncovered)) continue;
      chosen.push_back(ci);
      uncovered.subtract(c.box);
      run(uncovered);
      uncovered |= c.box;
      chosen.pop_back();
      if (stopped || truncated) return;
    }
  }
};

}  // namespace

bool enumerate_suits_visit(const CellBox& f, const SuitEnumOptions& opts,
                           const std::function<bool(const Code&)>& visit,
                           std::uint64_t* nodes_out) {
  if (f.empty()) throw Error(ErrorKind::empty_code, "enumerate_suits: empty polybox");
  int d = f.dim();
  int p = f.pairs();

  std::vector<Candidate> cands;
  for (const Word& w : all_words(d, p, opts.allow_stars)) {
    CellBox box = cells(w, p);
    if (box.is_subset_of(f)) {
      std::size_t pop = box.popcount();
      cands.push_back({w, std::move(box), pop});
    }
  }
  std::vector<std::vector<int>> by_cell(f.cell_count());
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t cell = 0; cell < f.cell_count(); ++cell)
      if (cands[i].box.test(cell)) by_cell[cell].push_back(static_cast<int>(i));

  CoverSearch s{cands, by_cell, opts, visit, d, p};
  for (const Candidate& c : cands) s.max_pop = std::max(s.max_pop, c.pop);
  CellBox uncovered = f;
  s.run(uncovered);
  if (nodes_out) *nodes_out = s.nodes;
  return !s.truncated && !s.stopped;
}

SuitEnumeration enumerate_suits(const CellBox& f, const SuitEnumOptions& opts) {
  SuitEnumeration result;
  result.polybox = f;
  bool complete = enumerate_suits_visit(
      f, opts,
      [&](const Code& suit) {
        result.suits.push_back(suit);
        return opts.max_suits == 0 || result.suits.size() < opts.max_suits;
      },
      &result.nodes);
  result.truncated = !complete && (opts.max_suits == 0 || result.suits.size() < opts.max_suits);
  std::sort(result.suits.begin(), result.suits.end());
  return result;
}

Rigidity is_rigid(const Code& v, std::uint64_t node_budget) {
  if (!v.star_free()) throw Error(ErrorKind::star_present, "is_rigid: star-free code required");
  Code checked = v;
  checked.validate_polybox();
  CellBox f = cells_code(checked);
  SuitEnumOptions opts;
  opts.allow_stars = false;
  opts.node_budget = node_budget;
  bool other_found = false;
  std::uint64_t nodes = 0;
  bool complete = enumerate_suits_visit(
      f, opts,
      [&](const Code& suit) {
        if (!(suit == checked)) {
          other_found = true;
          return false;
        }
        return true;
      },
      &nodes);
  if (other_found) return Rigidity::not_rigid;
  if (!complete) return Rigidity::indeterminate;
  return Rigidity::rigid;
}

std::optional<Code> extend_to_partition(const Code& v, std::uint64_t node_budget) {
  Code checked = v;
  checked.validate_polybox();
  CellBox have = cells_code(checked);
  CellBox missing = have.complement_box();
  if (missing.empty()) return checked;

  SuitEnumOptions opts;
  opts.allow_stars = true;
  opts.node_budget = node_budget;
  std::optional<Code> extension;
  enumerate_suits_visit(missing, opts, [&](const Code& suit) {
    extension = suit;
    return false;
  });
  if (!extension) return std::nullopt;
  Code result = code_union(checked, *extension);
  result.validate_polybox();
  return result;
}

EquivalentDisjointResult enumerate_equivalent_disjoint(const Code& v, std::uint64_t node_budget,
                                                       bool twin_free_only) {
  if (!v.star_free()) throw Error(ErrorKind::star_present, "star-free code required");
  Code checked = v;
  checked.validate_polybox();
  CellBox f = cells_code(checked);
  SuitEnumOptions opts;
  opts.allow_stars = false;
  opts.node_budget = node_budget;
  EquivalentDisjointResult out;
  bool complete = enumerate_suits_visit(f, opts, [&](const Code& suit) {
    if (suit == checked) return true;
    if (!codes_disjoint(suit, checked)) return true;
    if (twin_free_only && !twin_pair_free(suit)) return true;
    out.codes.push_back(suit);
    return true;
  });
  out.truncated = !complete;
  std::sort(out.codes.begin(), out.codes.end());
  return out;
}

}  // namespace polybox
