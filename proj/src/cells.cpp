#include "polybox/cells.hpp"

#include <bit>

namespace polybox {

std::size_t CellBox::popcount() const {
  std::size_t c = 0;
  for (std::uint64_t b : bits_) c += static_cast<std::size_t>(std::popcount(b));
  return c;
}

bool CellBox::empty() const {
  for (std::uint64_t b : bits_)
    if (b) return false;
  return true;
}

bool CellBox::is_subset_of(const CellBox& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

bool CellBox::intersects(const CellBox& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & other.bits_[i]) return true;
  return false;
}

std::size_t CellBox::lowest_set() const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(bits_[i]));
  return ncells_;
}

CellBox& CellBox::operator|=(const CellBox& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

CellBox& CellBox::operator&=(const CellBox& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  return *this;
}

CellBox& CellBox::subtract(const CellBox& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
  return *this;
}

CellBox CellBox::complement_box() const {
  CellBox r = full(dim_, pairs_);
  r.subtract(*this);
  return r;
}

std::string CellBox::hex() const {
  static const char digits[] = "0123456789abcdef";
  std::size_t nibbles = (ncells_ + 3) / 4;
  std::string s;
  s.reserve(nibbles);
  for (std::size_t i = 0; i < nibbles; ++i) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) {
      std::size_t cell = i * 4 + b;
      if (cell < ncells_ && test(cell)) v |= 1u << b;
    }
    s += digits[v];
  }
  return s;
}

CellBox cells(const Word& w, int pairs) {
  int d = w.size();
  unsigned t = 1u << pairs;  // transversals per coordinate
  CellBox box(d, pairs);
  // Allowed transversal list per coordinate, then an odometer over the product.
  std::array<std::vector<unsigned>, max_dim> allowed;
  for (int i = 0; i < d; ++i) {
    for (unsigned x = 0; x < t; ++x)
      if (letter_admits(w[i], x)) allowed[static_cast<std::size_t>(i)].push_back(x);
  }
  std::array<std::size_t, max_dim> idx{};
  for (;;) {
    std::size_t cell = 0;
    for (int i = d - 1; i >= 0; --i)
      cell = cell * t + allowed[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
    box.set(cell);
    int i = 0;
    while (i < d && idx[static_cast<std::size_t>(i)] + 1 == allowed[static_cast<std::size_t>(i)].size()) {
      idx[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == d) break;
    ++idx[static_cast<std::size_t>(i)];
  }
  return box;
}

CellBox cells_code(const Code& v) {
  CellBox box(v.dim(), v.pairs());
  std::size_t expected = 0;
  for (const Word& w : v) {
    CellBox b = cells(w, v.pairs());
    expected += b.popcount();
    box |= b;
  }
  if (v.validated() && box.popcount() != expected)
    throw Error(ErrorKind::not_polybox_code, "cells_code: boxes of a validated code overlap");
  return box;
}

bool is_i_cylinder(const CellBox& f, int i) {
  if (i < 0 || i >= f.dim()) throw Error(ErrorKind::bad_coordinate, "is_i_cylinder: bad coordinate");
  unsigned t = 1u << f.pairs();
  std::size_t stride = 1;
  for (int k = 0; k < i; ++k) stride *= t;
  std::size_t block = stride * t;
  for (std::size_t base = 0; base < f.cell_count(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      bool first = f.test(base + off);
      for (unsigned x = 1; x < t; ++x)
        if (f.test(base + off + stride * x) != first) return false;
    }
  }
  return true;
}

Code slice(const Code& v, int i, unsigned x) {
  if (i < 0 || i >= v.dim()) throw Error(ErrorKind::bad_coordinate, "slice: bad coordinate");
  if (x >= (1u << v.pairs())) throw Error(ErrorKind::bad_coordinate, "slice: bad transversal");
  std::vector<Word> out;
  for (const Word& w : v)
    if (letter_admits(w[i], x)) out.push_back(drop_mask(w, 1u << i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Code(std::move(out), v.dim() - 1, v.pairs());
}

}  // namespace polybox
