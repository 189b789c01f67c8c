#include "polybox/cover.hpp"

namespace polybox {

Code cover_residue(const Word& u, const Code& v) {
  if (!u.star_free()) throw Error(ErrorKind::star_present, "cover_residue: star in u");
  if (u.size() != v.dim()) throw Error(ErrorKind::dimension_mismatch, "cover_residue: dimension mismatch");
  require_star_free_polybox(v);

  // Meeting-subset convention: words disjoint from u are dropped first.
  std::vector<Word> meeting;
  for (const Word& w : v)
    if (g(w, u) > 0) meeting.push_back(w);
  if (meeting.empty())
    throw Error(ErrorKind::empty_intersection, "cover_residue: no word of V meets u");

  CoverReport rep = covers(u, v);
  if (!rep.covered)
    throw Error(ErrorKind::not_covered, "cover_residue: u not covered by V");

  std::vector<Word> starred;
  starred.reserve(meeting.size());
  for (const Word& w : meeting) {
    Word r = w;
    for (int i = 0; i < r.size(); ++i)
      if (r[i] == u[i]) r[i] = star;
    starred.push_back(r);
  }
  Code result(std::move(starred), v.dim(), v.pairs());
  result.validate_polybox();
  if (!is_partition_code(result))
    throw Error(ErrorKind::residue_contradiction,
                "cover_residue: residue fails the partition-code test");
  return result;
}

}  // namespace polybox
