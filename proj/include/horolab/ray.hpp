#pragma once

// boundary points of the tree: infinite reduced words.  two flavours:
//   - eventually periodic, u v v v..., held in canonical form
//     (shortest prefix u, primitive period v, concatenation reduced)
//   - sampled, drawn letter by letter from the uniform boundary measure
//     (first letter uniform over 2k, later ones uniform over the 2k-1
//     non-backtracking choices), extended lazily and reproducibly
//
// the canonical EP form is what makes ray equality and caching meaningful;
// see eventually_periodic() for the normalization rules.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "horolab/words.hpp"

namespace horolab::tree {

class BoundaryRay {
 public:
  // canonicalizes (prefix, period); throws MalformedWordError if the period
  // is trivial
  static BoundaryRay eventually_periodic(const ReducedWord& prefix,
                                         const ReducedWord& period, int rank);

  static BoundaryRay sampled(int rank, std::uint64_t seed);

  // "u|v" (u may be empty: "|a" is a^inf); words in ascii letters
  static BoundaryRay parse(std::string_view text, int rank);

  bool is_periodic() const { return periodic_; }
  int rank() const { return rank_; }

  const ReducedWord& prefix() const { return prefix_; }
  const ReducedWord& period() const { return period_; }

  Letter at(std::size_t i) const;

  // first n letters as a word (already reduced by construction)
  ReducedWord prefix_word(std::size_t n) const;

  // length of the longest common prefix of w and the ray
  std::size_t common_prefix_with(const ReducedWord& w) const;

  // the ray g*omega; eventually periodic rays only
  BoundaryRay translated(const ReducedWord& g) const;

  // canonical text: "u|v" for periodic, "sampled:<seed>" otherwise
  std::string label() const;

  bool same_ray(const BoundaryRay& other) const;

 private:
  BoundaryRay() = default;

  int rank_ = 2;
  bool periodic_ = true;
  ReducedWord prefix_;
  ReducedWord period_;

  // sampled state; shared so rays stay cheap to copy while the letter cache
  // grows once for all copies
  struct SampleState {
    std::uint64_t seed = 0;
    Rng rng{0};
    std::vector<std::int8_t> letters;
  };
  std::shared_ptr<SampleState> sample_;

  void extend_to(std::size_t n) const;
};

// uniform boundary sample; alias kept close to the measure it draws from
BoundaryRay sample_uniform_ray(int rank, std::uint64_t seed);

// random canonical EP ray for property tests
BoundaryRay random_ep_ray(Rng& rng, int rank, std::size_t max_prefix,
                          std::size_t max_period);

}  // namespace horolab::tree
