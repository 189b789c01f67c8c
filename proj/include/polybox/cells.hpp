#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polybox/code.hpp"

namespace polybox {

// Bit-set over the (2^p)^d cells of the equicomplementary box. A transversal
// is a p-bit mask (bit k-1 set = pair k contributes its primed letter); the
// cell index is base-2^p little-endian over coordinates.
class CellBox {
 public:
  CellBox() = default;
  CellBox(int dim, int pairs)
      : dim_(dim), pairs_(pairs), ncells_(std::size_t{1} << (static_cast<unsigned>(dim * pairs))) {
    bits_.assign((ncells_ + 63) / 64, 0);
  }

  static CellBox full(int dim, int pairs) {
    CellBox f(dim, pairs);
    for (std::size_t i = 0; i + 1 < f.bits_.size(); ++i) f.bits_[i] = ~std::uint64_t{0};
    std::size_t rem = f.ncells_ % 64;
    f.bits_.back() = rem == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rem) - 1);
    return f;
  }

  int dim() const { return dim_; }
  int pairs() const { return pairs_; }
  std::size_t cell_count() const { return ncells_; }

  bool test(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t popcount() const;
  bool empty() const;
  bool is_subset_of(const CellBox& other) const;
  bool intersects(const CellBox& other) const;
  std::size_t lowest_set() const;  // ncells_ when empty

  CellBox& operator|=(const CellBox& o);
  CellBox& operator&=(const CellBox& o);
  CellBox& subtract(const CellBox& o);
  CellBox complement_box() const;

  friend bool operator==(const CellBox& a, const CellBox& b) {
    return a.dim_ == b.dim_ && a.pairs_ == b.pairs_ && a.bits_ == b.bits_;
  }

  // Debug dump: hex nibbles from cell 0 upward, most-significant cell last.
  std::string hex() const;

  const std::vector<std::uint64_t>& raw() const { return bits_; }

 private:
  int dim_ = 0;
  int pairs_ = 0;
  std::size_t ncells_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Does letter x admit transversal t (t a p-bit mask)?
constexpr bool letter_admits(Letter x, unsigned t) {
  if (x == star) return true;
  int k = x < 0 ? -x : x;
  bool primed_in_t = (t >> (k - 1)) & 1u;
  return (x < 0) == primed_in_t;
}

// Product box of one word.
CellBox cells(const Word& w, int pairs = 2);

// Union over the code; disjointness asserted for validated polybox codes.
CellBox cells_code(const Code& v);

// Every axis-i line fully inside or fully outside F.
bool is_i_cylinder(const CellBox& f, int i);

// Words whose box meets the slice plane at transversal x of coordinate i,
// projected by dropping coordinate i.
Code slice(const Code& v, int i, unsigned x);

}  // namespace polybox
