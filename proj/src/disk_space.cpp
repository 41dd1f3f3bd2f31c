#include "horolab/disk_space.hpp"

#include <algorithm>
#include <cmath>

namespace horolab::disk {

namespace {

double interior_gap(Cx z) {
  double g = 1.0 - std::norm(z);
  if (!(g > 1e-300)) {
    throw NumericDegeneracyError("point is on or outside the unit circle");
  }
  return g;
}

void check_unit(Cx xi) {
  if (std::abs(std::abs(xi) - 1.0) > 1e-9) {
    throw NumericDegeneracyError("boundary point is off the unit circle");
  }
}

}  // namespace

double hyp_distance(Cx x, Cx y) {
  double num = 2.0 * std::norm(x - y);
  double den = interior_gap(x) * interior_gap(y);
  return std::acosh(1.0 + num / den);
}

double poisson_kernel(Cx z, Cx xi) {
  check_unit(xi);
  double sep = std::norm(z - xi);
  if (!(sep > 1e-300)) throw NumericDegeneracyError("point collides with boundary point");
  return interior_gap(z) / sep;
}

double busemann_poisson(Cx xi, Cx x, Cx y) {
  return std::log(poisson_kernel(x, xi)) - std::log(poisson_kernel(y, xi));
}

double visual_density(const MobiusMap& g, Cx xi) {
  return poisson_kernel(g.apply_zero(), xi);
}

double dist_to_radial_ray(Cx w, Cx xi) {
  check_unit(xi);
  if (std::abs(w) >= 1.0) throw NumericDegeneracyError("point outside the disk");
  // rotate the ray onto [0, 1), then move to the upper half plane where the
  // ray becomes the vertical segment {iy : 0 < y <= 1}
  Cx wr = w * std::conj(xi);
  double den = std::norm(Cx{1.0, 0.0} + wr);
  if (den < 1e-300) return hyp_distance(w, Cx{0, 0});  // w at -xi: the ray start is nearest
  double zx = 2.0 * wr.imag() / den;
  double zy = (1.0 - std::norm(wr)) / den;
  double r = std::hypot(zx, zy);
  if (r <= 1.0) return std::asinh(std::abs(zx) / zy);  // foot of perpendicular inside the segment
  return hyp_distance(w, Cx{0, 0});  // otherwise the ray start (the disk origin) is nearest
}

DiskSpace::Point DiskSpace::boundary_approach(BoundaryPoint xi, int n) const {
  check_unit(xi);
  if (n < 0) n = 0;
  n = std::min(n, kMaxApproachDepth);
  return (1.0 - std::ldexp(1.0, -n)) * xi;
}

}  // namespace horolab::disk
