#pragma once

// model-independent hyperbolic geometry.  a space model supplies a
// basepoint, distances, a declared hyperbolicity constant and a sequence of
// inner points approaching any boundary point; everything here is built
// from those.  models may additionally supply an exact busemann evaluator
// (the tree and the disk both do), in which case the generic entry points
// use it and tag results as exact.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <vector>

#include "horolab/errors.hpp"

namespace horolab::geom {

template <class M>
concept SpaceModel = requires(const M& m, const typename M::Point& x,
                              const typename M::BoundaryPoint& w, int n) {
  { m.basepoint() } -> std::convertible_to<typename M::Point>;
  { m.distance(x, x) } -> std::convertible_to<double>;
  { m.boundary_approach(w, n) } -> std::convertible_to<typename M::Point>;
  { m.delta() } -> std::convertible_to<double>;
};

template <class M>
concept HasExactBusemann = SpaceModel<M> &&
    requires(const M& m, const typename M::Point& x,
             const typename M::BoundaryPoint& w) {
      { m.busemann_double(w, x, x) } -> std::convertible_to<double>;
    };

// (x|y)_o = (d(o,x) + d(o,y) - d(x,y)) / 2
template <SpaceModel M>
double gromov_product(const M& m, const typename M::Point& x,
                      const typename M::Point& y, const typename M::Point& o) {
  return 0.5 * (m.distance(o, x) + m.distance(o, y) - m.distance(x, y));
}

template <SpaceModel M>
double gromov_product(const M& m, const typename M::Point& x,
                      const typename M::Point& y) {
  return gromov_product(m, x, y, m.basepoint());
}

// empirical hyperbolicity defect of a finite sample: the largest violation
// of min((x|y)_o, (y|z)_o) <= (x|z)_o + delta over ordered quadruples,
// clamped at zero.  a lower bound for the true constant of the space.
template <SpaceModel M>
double delta_estimate(const M& m, const std::vector<typename M::Point>& sample) {
  const std::size_t n = sample.size();
  if (n < 2) return 0.0;

  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = m.distance(sample[i], sample[j]);
      dist[i * n + j] = d;
      dist[j * n + i] = d;
    }
  }

  double worst = 0.0;
  std::vector<double> gp(n * n, 0.0);
  for (std::size_t o = 0; o < n; ++o) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        gp[i * n + j] = 0.5 * (dist[o * n + i] + dist[o * n + j] - dist[i * n + j]);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const double* gx = &gp[x * n];
        const double* gy = &gp[y * n];
        const double gxy = gx[y];
        for (std::size_t z = 0; z < n; ++z) {
          double lhs = std::min(gxy, gy[z]) - gx[z];
          if (lhs > worst) worst = lhs;
        }
      }
    }
  }
  return worst;
}

struct BusemannValue {
  double value = 0.0;
  bool exact = false;
  int depth = 0;        // deepest approach index inspected, 0 when exact
  bool converged = true;
};

namespace detail {

// finite-depth surrogate for limsup_z d(y,z) - d(x,z): max over the window
// [depth, 2*depth]; if the two half-windows disagree by more than tol the
// window doubles, a bounded number of times
template <SpaceModel M>
BusemannValue busemann_window(const M& m, const typename M::BoundaryPoint& w,
                              const typename M::Point& x,
                              const typename M::Point& y, int depth,
                              double tol) {
  BusemannValue out;
  for (int attempt = 0; attempt < 4; ++attempt) {
    double max_lo = -1e300, max_hi = -1e300;
    int mid = depth + depth / 2;
    for (int n = depth; n <= 2 * depth; ++n) {
      auto z = m.boundary_approach(w, n);
      double v = m.distance(y, z) - m.distance(x, z);
      if (n < mid) {
        max_lo = std::max(max_lo, v);
      } else {
        max_hi = std::max(max_hi, v);
      }
    }
    out.value = std::max(max_lo, max_hi);
    out.depth = 2 * depth;
    out.converged = std::abs(max_lo - max_hi) <= tol;
    if (out.converged) return out;
    depth *= 2;
  }
  return out;
}

}  // namespace detail

// busemann cocycle b_w(x, y): exact when the model provides it, otherwise
// the windowed surrogate above
template <SpaceModel M>
BusemannValue busemann(const M& m, const typename M::BoundaryPoint& w,
                       const typename M::Point& x, const typename M::Point& y,
                       int depth = 16, double tol = 1e-7) {
  if constexpr (HasExactBusemann<M>) {
    (void)depth;
    (void)tol;
    return BusemannValue{m.busemann_double(w, x, y), true, 0, true};
  } else {
    return detail::busemann_window(m, w, x, y, depth, tol);
  }
}

// cyclic defect b(x,y) + b(y,z) + b(z,x); zero for exact cocycles, and in
// general pinched between 0 and the model constant
template <SpaceModel M>
double quasicocycle_defect(const M& m, const typename M::BoundaryPoint& w,
                           const typename M::Point& x,
                           const typename M::Point& y,
                           const typename M::Point& z, int depth = 16) {
  return busemann(m, w, x, y, depth).value + busemann(m, w, y, z, depth).value +
         busemann(m, w, z, x, depth).value;
}

struct HoroballResult {
  bool member = false;
  bool boundary_case = false;  // |level - t| below resolution; flagged, never silent
};

// x lies in the level-t horoball at w centered on o when b_w(o, x) <= t
template <SpaceModel M>
HoroballResult horoball_member(const M& m, const typename M::BoundaryPoint& w,
                               const typename M::Point& o,
                               const typename M::Point& x, double t,
                               int depth = 16, double flag_tol = 1e-9) {
  BusemannValue b = busemann(m, w, o, x, depth);
  HoroballResult r;
  r.member = b.value <= t;
  r.boundary_case = std::abs(b.value - t) < flag_tol;
  return r;
}

}  // namespace horolab::geom
