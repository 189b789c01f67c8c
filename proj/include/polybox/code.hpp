#pragma once

#include <algorithm>
#include <vector>

#include "polybox/word.hpp"

namespace polybox {

// A duplicate-free set of words of one length, kept in canonical sorted
// order. `pairs` bounds the alphabet; `validated` records that the polybox
// property (pairwise dichotomy) has been checked.
class Code {
 public:
  Code() = default;
  Code(std::vector<Word> words, int dim, int pairs = 2)
      : words_(std::move(words)), dim_(dim), pairs_(pairs) {
    if (dim_ < 1 || dim_ > max_dim) throw Error(ErrorKind::bad_coordinate, "bad dimension");
    if (pairs_ < 1 || pairs_ > max_pairs) throw Error(ErrorKind::bad_letter, "bad pair count");
    for (const Word& w : words_) {
      if (w.size() != dim_) throw Error(ErrorKind::length_mismatch, "word length != code dim");
      for (int i = 0; i < w.size(); ++i) {
        int v = w[i] < 0 ? -w[i] : w[i];
        if (v > pairs_) throw Error(ErrorKind::bad_letter, "letter outside pair budget");
      }
    }
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
      throw Error(ErrorKind::duplicate_word, "duplicate word in code");
  }

  int dim() const { return dim_; }
  int pairs() const { return pairs_; }
  int size() const { return static_cast<int>(words_.size()); }
  bool empty() const { return words_.empty(); }
  const std::vector<Word>& words() const { return words_; }
  const Word& operator[](int i) const { return words_[static_cast<std::size_t>(i)]; }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  bool validated() const { return validated_; }

  bool contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
  }

  bool star_free() const {
    return std::all_of(words_.begin(), words_.end(), [](const Word& w) { return w.star_free(); });
  }

  friend bool operator==(const Code& a, const Code& b) {
    return a.dim_ == b.dim_ && a.words_ == b.words_;
  }
  friend bool operator<(const Code& a, const Code& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    return a.words_ < b.words_;
  }

  // Marks the polybox property as checked. Throws when it does not hold.
  Code& validate_polybox() {
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::size_t j = i + 1; j < words_.size(); ++j)
        if (!are_dichotomous(words_[i], words_[j]))
          throw Error(ErrorKind::not_polybox_code, "not a polybox code: " + to_string(words_[i]) +
                                                       " vs " + to_string(words_[j]));
    validated_ = true;
    return *this;
  }

 private:
  std::vector<Word> words_;
  int dim_ = 1;
  int pairs_ = 2;
  bool validated_ = false;
};

// Every unordered pair of distinct words is dichotomous.
inline bool is_polybox_code(const Code& v) {
  if (v.validated()) return true;
  for (int i = 0; i < v.size(); ++i)
    for (int j = i + 1; j < v.size(); ++j)
      if (!are_dichotomous(v[i], v[j])) return false;
  return true;
}

inline std::vector<std::pair<Word, Word>> twin_pairs(const Code& v) {
  std::vector<std::pair<Word, Word>> out;
  for (int i = 0; i < v.size(); ++i)
    for (int j = i + 1; j < v.size(); ++j)
      if (is_twin_pair(v[i], v[j])) out.emplace_back(v[i], v[j]);
  return out;
}

inline bool twin_pair_free(const Code& v) {
  for (int i = 0; i < v.size(); ++i)
    for (int j = i + 1; j < v.size(); ++j)
      if (is_twin_pair(v[i], v[j])) return false;
  return true;
}

inline Code code_union(const Code& a, const Code& b) {
  std::vector<Word> w;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(w));
  return Code(std::move(w), a.dim(), std::max(a.pairs(), b.pairs()));
}

inline Code code_intersection(const Code& a, const Code& b) {
  std::vector<Word> w;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(w));
  return Code(std::move(w), a.dim(), std::max(a.pairs(), b.pairs()));
}

inline Code code_difference(const Code& a, const Code& b) {
  std::vector<Word> w;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(w));
  return Code(std::move(w), a.dim(), a.pairs());
}

inline bool codes_disjoint(const Code& a, const Code& b) {
  return code_intersection(a, b).empty();
}

// All words of the given length in canonical order, optionally with stars.
std::vector<Word> all_words(int dim, int pairs, bool with_star);

}  // namespace polybox
