#pragma once

// normal forms and ball enumeration for the acting groups: Z^b optionally
// times finite cyclic factors, and free groups F_k acting regularly.
// group words are ReducedWord sequences over generator letters; abelian
// elements are exponent vectors with torsion coordinates reduced mod m.

#include <string>
#include <vector>

#include "horolab/errors.hpp"
#include "horolab/words.hpp"

namespace horolab::erg {

using tree::Letter;
using tree::ReducedWord;
using tree::letter_inverse;

struct GroupSpec {
  int free_rank = 0;                // b for Z^b, k for F_k
  std::vector<long long> moduli;    // finite cyclic factors (abelian only)
  bool free_kind = false;           // true: F_{free_rank}, no torsion allowed

  int symbol_count() const {
    return free_rank + static_cast<int>(moduli.size());
  }
  bool is_infinite() const { return free_rank >= 1; }
  void validate() const;
  std::string describe() const;  // "Z", "Z^2 x Z/2", "F_2", ...
};

// exponent vector: free coordinates then torsion coordinates in [0, m_j)
using AbElem = std::vector<long long>;

AbElem ab_identity(const GroupSpec& g);
AbElem ab_reduce(const GroupSpec& g, AbElem v);
AbElem ab_add(const GroupSpec& g, const AbElem& x, const AbElem& y);
AbElem ab_negate(const GroupSpec& g, const AbElem& x);
bool ab_is_identity(const AbElem& x);

AbElem word_to_abelian(const GroupSpec& g, const ReducedWord& w);

// canonical word: generator blocks in symbol order, torsion exponents taken
// the short way around the cycle
ReducedWord abelian_to_word(const GroupSpec& g, const AbElem& v);

// word metric: sum of |exponents| with cyclic distance on torsion factors
long long ab_norm(const GroupSpec& g, const AbElem& v);

// every element of norm <= R, sorted by (norm, coordinates); duplicate-free
// and closed under inversion
std::vector<AbElem> abelian_ball(const GroupSpec& g, int R);

// every reduced word of length <= R in F_rank, in shortlex order
std::vector<ReducedWord> free_ball(int rank, int R, std::size_t cap = 4000000);

}  // namespace horolab::erg
