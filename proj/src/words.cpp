#include "horolab/words.hpp"

#include <algorithm>

namespace horolab::tree {

Letter letter_from_char(char c, int rank) {
  int idx;
  bool inv;
  if (c >= 'a' && c <= 'z') {
    idx = c - 'a';
    inv = false;
  } else if (c >= 'A' && c <= 'Z') {
    idx = c - 'A';
    inv = true;
  } else {
    throw MalformedWordError(std::string("bad letter '") + c + "'");
  }
  if (idx >= rank) {
    throw MalformedWordError(std::string("letter '") + c +
                             "' outside rank " + std::to_string(rank));
  }
  return 2 * idx + (inv ? 1 : 0);
}

ReducedWord ReducedWord::parse(std::string_view text, int rank) {
  if (text == "e") return {};
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(letter_from_char(c, rank));
  return from_letters(letters);
}

ReducedWord ReducedWord::from_letters(const std::vector<Letter>& letters) {
  ReducedWord w;
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (!w.letters_.empty() && w.letters_.back() == letter_inverse(l)) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(static_cast<std::int8_t>(l));
    }
  }
  return w;
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(static_cast<std::int8_t>(letter_inverse(*it)));
  }
  return w;
}

ReducedWord ReducedWord::subword(std::size_t begin, std::size_t end) const {
  ReducedWord w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                    letters_.begin() + static_cast<std::ptrdiff_t>(end));
  return w;  // a subword of a reduced word is reduced
}

ReducedWord operator*(const ReducedWord& lhs, const ReducedWord& rhs) {
  ReducedWord w = lhs;
  for (std::int8_t l : rhs.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == (l ^ 1)) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

bool ReducedWord::shorter_lex_less(const ReducedWord& other) const {
  if (letters_.size() != other.letters_.size()) {
    return letters_.size() < other.letters_.size();
  }
  return std::lexicographical_compare(letters_.begin(), letters_.end(),
                                      other.letters_.begin(),
                                      other.letters_.end());
}

std::string ReducedWord::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  s.reserve(letters_.size());
  for (std::int8_t l : letters_) s.push_back(letter_char(l));
  return s;
}

ReducedWord random_reduced_word(Rng& rng, int rank, std::size_t length) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (letters.empty()) {
      letters.push_back(static_cast<Letter>(rng.below(2ull * rank)));
    } else {
      // skip the inverse of the previous letter so the word stays reduced
      Letter prev = letters.back();
      Letter pick = static_cast<Letter>(rng.below(2ull * rank - 1));
      if (pick >= letter_inverse(prev)) ++pick;
      letters.push_back(pick);
    }
  }
  return ReducedWord::from_letters(letters);
}

std::size_t common_prefix(const ReducedWord& x, const ReducedWord& y) {
  std::size_t n = std::min(x.length(), y.length());
  std::size_t i = 0;
  while (i < n && x.at(i) == y.at(i)) ++i;
  return i;
}

std::size_t word_distance(const ReducedWord& x, const ReducedWord& y) {
  // |x^-1 y| = |x| + |y| - 2*(common prefix)
  std::size_t c = common_prefix(x, y);
  return x.length() + y.length() - 2 * c;
}

}  // namespace horolab::tree
