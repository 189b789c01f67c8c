#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace polybox {

// Letters are signed small integers: 0 is the star, +k/-k are the two
// members of the k-th complementary pair (a=+1, a'=-1, b=+2, b'=-2).
using Letter = std::int8_t;

inline constexpr Letter star = 0;
inline constexpr int max_dim = 8;
inline constexpr int max_pairs = 3;

constexpr Letter complement(Letter x) { return static_cast<Letter>(-x); }

// Total order used everywhere: * < +1 < -1 < +2 < -2 < +3 < -3.
constexpr int letter_key(Letter x) {
  return x == 0 ? 0 : 2 * (x < 0 ? -x : x) - (x > 0 ? 1 : 0);
}

constexpr Letter letter_from_key(int k) {
  return k == 0 ? star
                : static_cast<Letter>((k % 2 != 0) ? (k + 1) / 2 : -(k / 2));
}

// Number of distinct letters with pair index <= p, star included.
constexpr int alphabet_size(int pairs, bool with_star) {
  return 2 * pairs + (with_star ? 1 : 0);
}

enum class ErrorKind {
  length_mismatch,
  dimension_mismatch,
  bad_coordinate,
  bad_letter,
  star_present,
  not_polybox_code,
  duplicate_word,
  empty_code,
  empty_intersection,
  not_covered,
  residue_contradiction,
  parse_error,
  unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Fixed-size word of up to max_dim letters. Value type, trivially copyable.
struct Word {
  std::array<Letter, max_dim> a{};
  std::uint8_t n = 0;

  Word() = default;
  Word(std::initializer_list<int> letters) {
    if (letters.size() > max_dim) throw Error(ErrorKind::bad_coordinate, "word too long");
    for (int v : letters) a[n++] = static_cast<Letter>(v);
  }

  int size() const { return n; }
  Letter operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
  Letter& operator[](int i) { return a[static_cast<std::size_t>(i)]; }

  bool star_free() const {
    for (int i = 0; i < n; ++i)
      if (a[static_cast<std::size_t>(i)] == star) return false;
    return true;
  }

  int star_count() const {
    int c = 0;
    for (int i = 0; i < n; ++i) c += (a[static_cast<std::size_t>(i)] == star);
    return c;
  }

  friend bool operator==(const Word& x, const Word& y) {
    if (x.n != y.n) return false;
    for (int i = 0; i < x.n; ++i)
      if (x.a[static_cast<std::size_t>(i)] != y.a[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  friend bool operator<(const Word& x, const Word& y) {
    if (x.n != y.n) return x.n < y.n;
    for (int i = 0; i < x.n; ++i) {
      int kx = letter_key(x.a[static_cast<std::size_t>(i)]);
      int ky = letter_key(y.a[static_cast<std::size_t>(i)]);
      if (kx != ky) return kx < ky;
    }
    return false;
  }
};

inline void require_same_length(const Word& u, const Word& w) {
  if (u.n != w.n) throw Error(ErrorKind::length_mismatch, "word length mismatch");
}

// u and w are dichotomous: some position carries a complementary non-star pair.
inline bool are_dichotomous(const Word& u, const Word& w) {
  require_same_length(u, w);
  for (int i = 0; i < u.size(); ++i)
    if (u[i] != star && u[i] == complement(w[i])) return true;
  return false;
}

// Twin pair: exactly one position differs, and there it is complementary non-star.
inline bool is_twin_pair(const Word& u, const Word& w) {
  require_same_length(u, w);
  int diff = -1;
  for (int i = 0; i < u.size(); ++i) {
    if (u[i] == w[i]) continue;
    if (diff >= 0) return false;
    diff = i;
  }
  return diff >= 0 && u[diff] != star && u[diff] == complement(w[diff]);
}

// Remove the coordinates in `mask` (bit i set = drop 0-based coordinate i).
inline Word drop_mask(const Word& w, unsigned mask) {
  if (mask >> w.size()) throw Error(ErrorKind::bad_coordinate, "drop: coordinate out of range");
  Word r;
  for (int i = 0; i < w.size(); ++i)
    if (!(mask & (1u << i))) r.a[static_cast<std::size_t>(r.n++)] = w[i];
  return r;
}

inline Word drop(const Word& w, std::initializer_list<int> coords) {
  unsigned mask = 0;
  for (int c : coords) {
    if (c < 0 || c >= w.size()) throw Error(ErrorKind::bad_coordinate, "drop: coordinate out of range");
    mask |= 1u << c;
  }
  return drop_mask(w, mask);
}

// i-siblings: distinct non-complementary letters at i, and the words with
// coordinate i removed form a twin pair.
inline bool is_i_siblings(const Word& u, const Word& w, int i) {
  require_same_length(u, w);
  if (i < 0 || i >= u.size()) throw Error(ErrorKind::bad_coordinate, "siblings: bad coordinate");
  if (u[i] == w[i] || u[i] == complement(w[i])) return false;
  return is_twin_pair(drop_mask(u, 1u << i), drop_mask(w, 1u << i));
}

inline Word concat(const Word& u, const Word& w) {
  if (u.size() + w.size() > max_dim) throw Error(ErrorKind::bad_coordinate, "concat too long");
  Word r = u;
  for (int i = 0; i < w.size(); ++i) r.a[static_cast<std::size_t>(r.n++)] = w[i];
  return r;
}

std::string to_string(Letter x);
std::string to_string(const Word& w);

}  // namespace polybox
