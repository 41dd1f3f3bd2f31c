#pragma once

// the hyperbolic plane as the Poincare unit disk.  boundary points are unit
// complex numbers; busemann values come from the Poisson kernel in closed
// form, so the generic limsup machinery is only needed as a cross check.

#include <complex>

#include "horolab/errors.hpp"
#include "horolab/mobius.hpp"

namespace horolab::disk {

double hyp_distance(Cx x, Cx y);

// (1 - |z|^2) / |z - xi|^2 for |z| < 1, |xi| = 1
double poisson_kernel(Cx z, Cx xi);

// b_xi(x, y) = lim_{z -> xi} d(y, z) - d(x, z) = log(P(x, xi) / P(y, xi))
double busemann_poisson(Cx xi, Cx x, Cx y);

// conformal density of g at xi: P(g(0), xi) = exp(-b_xi(0, g(0)))
double visual_density(const MobiusMap& g, Cx xi);

// distance from w to the geodesic ray [0, xi)
double dist_to_radial_ray(Cx w, Cx xi);

struct DiskSpace {
  using Point = Cx;
  using BoundaryPoint = Cx;

  Point basepoint() const { return {0.0, 0.0}; }
  double distance(Point x, Point y) const { return hyp_distance(x, y); }

  // points marching to xi at speed 2 log 2 per step; depth is capped where
  // double precision stops resolving 1 - |z|^2
  Point boundary_approach(BoundaryPoint xi, int n) const;

  // a four-point hyperbolicity constant for the disk (valid, not sharp)
  double delta() const { return 1.0; }

  double busemann_double(BoundaryPoint xi, Point x, Point y) const {
    return busemann_poisson(xi, x, y);
  }
};

// same geometry with the closed-form busemann hidden, to exercise the
// window-limsup path in tests
struct DiskSpaceNoExact {
  using Point = Cx;
  using BoundaryPoint = Cx;

  DiskSpace inner;

  Point basepoint() const { return inner.basepoint(); }
  double distance(Point x, Point y) const { return inner.distance(x, y); }
  Point boundary_approach(BoundaryPoint xi, int n) const {
    return inner.boundary_approach(xi, n);
  }
  double delta() const { return inner.delta(); }
};

inline constexpr int kMaxApproachDepth = 34;

}  // namespace horolab::disk
