#pragma once

// reduced words in a free group of rank k.  letters are small ints:
// 2*i is the i-th generator, 2*i+1 its inverse, so inversion is ^1.
// ascii form: generators a..z, inverses A..Z.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "horolab/errors.hpp"
#include "horolab/rng.hpp"

namespace horolab::tree {

using Letter = int;

inline Letter letter_inverse(Letter l) { return l ^ 1; }
inline int letter_gen(Letter l) { return l >> 1; }

inline char letter_char(Letter l) {
  char base = (l & 1) ? 'A' : 'a';
  return static_cast<char>(base + (l >> 1));
}

Letter letter_from_char(char c, int rank);

// always stored reduced; construction reduces
class ReducedWord {
 public:
  ReducedWord() = default;

  static ReducedWord parse(std::string_view text, int rank);
  static ReducedWord from_letters(const std::vector<Letter>& letters);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }

  ReducedWord inverse() const;
  ReducedWord subword(std::size_t begin, std::size_t end) const;

  // reduced concatenation
  friend ReducedWord operator*(const ReducedWord& lhs, const ReducedWord& rhs);

  bool operator==(const ReducedWord& other) const = default;

  // total order by (length, lexicographic); a well-order on the group
  bool shorter_lex_less(const ReducedWord& other) const;

  // "e" for the empty word
  std::string str() const;

  const std::vector<std::int8_t>& raw() const { return letters_; }

 private:
  std::vector<std::int8_t> letters_;
};

ReducedWord random_reduced_word(Rng& rng, int rank, std::size_t length);

// length of the longest common prefix
std::size_t common_prefix(const ReducedWord& x, const ReducedWord& y);

// word metric d(x, y) = |x^-1 y|
std::size_t word_distance(const ReducedWord& x, const ReducedWord& y);

}  // namespace horolab::tree
