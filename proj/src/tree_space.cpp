#include "horolab/tree_space.hpp"

namespace horolab::tree {

Rational cylinder_mass(int rank, const ReducedWord& w) {
  if (w.empty()) return 1;
  Rational first(1, 2 * rank);
  Rational branch(1, 2 * rank - 1);
  return first * rat_pow(branch, static_cast<long long>(w.length()) - 1);
}

Rational stream_density(int rank, const ReducedWord& g,
                        const BoundaryRay& omega) {
  // push the cylinder of omega's first n letters through g^-1 and take the
  // mass ratio; stable once the cancellation between g^-1 and the ray has
  // run its course
  ReducedWord ginv = g.inverse();
  std::size_t cp = omega.common_prefix_with(g);
  std::size_t n = std::max<std::size_t>(g.length() + 1, cp + 2);

  ReducedWord wn = omega.prefix_word(n);
  ReducedWord moved = ginv * wn;
  if (moved.empty()) {
    // g is itself a ray prefix of length n; push one letter deeper
    ++n;
    wn = omega.prefix_word(n);
    moved = ginv * wn;
  }
  Rational ratio = cylinder_mass(rank, moved) / cylinder_mass(rank, wn);

  // stabilization check: one more letter must give the same ratio
  ReducedWord wn2 = omega.prefix_word(n + 1);
  ReducedWord moved2 = ginv * wn2;
  Rational ratio2 = cylinder_mass(rank, moved2) / cylinder_mass(rank, wn2);
  if (ratio != ratio2) {
    throw InvariantViolation("stream_density: cylinder ratio failed to stabilize");
  }
  return ratio;
}

}  // namespace horolab::tree
