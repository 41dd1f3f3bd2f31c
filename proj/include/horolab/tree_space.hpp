#pragma once

// the cayley tree of a free group of rank k as a geodesic space, together
// with the uniform measure on its boundary.
//
// all quantities here are exact: distances are integers, busemann values
// are integers, cylinder masses and boundary densities are rationals.

#include "horolab/rational.hpp"
#include "horolab/ray.hpp"
#include "horolab/words.hpp"

namespace horolab::tree {

struct TreeSpace {
  using Point = ReducedWord;
  using BoundaryPoint = BoundaryRay;

  int rank_value = 2;

  Point basepoint() const { return {}; }

  long long distance_exact(const Point& x, const Point& y) const {
    return static_cast<long long>(word_distance(x, y));
  }
  double distance(const Point& x, const Point& y) const {
    return static_cast<double>(distance_exact(x, y));
  }

  // n-th point of the geodesic from the basepoint toward the ray
  Point boundary_approach(const BoundaryPoint& omega, int n) const {
    return omega.prefix_word(static_cast<std::size_t>(n));
  }

  double delta() const { return 0.0; }

  // busemann cocycle at omega, exact:
  //   b(x, y) = [ |y| - 2 cp(y, omega) ] - [ |x| - 2 cp(x, omega) ]
  // equals lim d(y, omega_n) - d(x, omega_n); the limit is attained once
  // n passes both common prefixes
  long long busemann_exact(const BoundaryPoint& omega, const Point& x,
                           const Point& y) const {
    long long hx = static_cast<long long>(x.length()) -
                   2 * static_cast<long long>(omega.common_prefix_with(x));
    long long hy = static_cast<long long>(y.length()) -
                   2 * static_cast<long long>(omega.common_prefix_with(y));
    return hy - hx;
  }

  double busemann_double(const BoundaryPoint& omega, const Point& x,
                         const Point& y) const {
    return static_cast<double>(busemann_exact(omega, x, y));
  }
};

// uniform measure of the cylinder of all rays extending w:
// mass(e) = 1, mass(w) = (2k)^-1 (2k-1)^-(|w|-1)
Rational cylinder_mass(int rank, const ReducedWord& w);

// radon-nikodym derivative d(g lambda)/d lambda at omega for the uniform
// boundary measure, computed as the stabilized cylinder-mass ratio
//   lambda(g^-1 Cyl(omega_n)) / lambda(Cyl(omega_n)),  n large.
// the ratio is constant once n > cp(g, omega), which the implementation
// checks before returning.  exact; equals (2k-1)^(2 cp(g, omega) - |g|).
Rational stream_density(int rank, const ReducedWord& g, const BoundaryRay& omega);

}  // namespace horolab::tree
