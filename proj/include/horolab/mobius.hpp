#pragma once

// SU(1,1) Mobius transformations of the unit disk and orbit enumeration.
// a map is stored by the top row (a, b) of [[a, b], [conj b, conj a]] with
// |a|^2 - |b|^2 = 1; the action is z -> (a z + b) / (conj(b) z + conj(a)).

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "horolab/errors.hpp"

namespace horolab::disk {

using Cx = std::complex<double>;

struct MobiusMap {
  Cx a{1.0, 0.0};
  Cx b{0.0, 0.0};

  Cx apply(Cx z) const;
  Cx apply_zero() const { return b / std::conj(a); }
  MobiusMap inverse() const { return {std::conj(a), -b}; }
  MobiusMap operator*(const MobiusMap& o) const;  // composition, this after o

  double det_defect() const;     // | |a|^2 - |b|^2 - 1 |
  MobiusMap renormalized() const;
  bool is_identity(double tol = 1e-9) const;  // up to overall sign

  // d(0, g(0)) = acosh(|a|^2 + |b|^2), no cancellation
  double displacement() const;
};

struct IsometricCircle {
  Cx center;
  double radius = 0.0;
};

// {z : |conj(b) z + conj(a)| = 1}; undefined for b = 0 (throws)
IsometricCircle isometric_circle(const MobiusMap& g);

// the hyperbolic map with repelling fixed point p, attracting fixed point q
// (both on the unit circle) and translation length tau > 0
MobiusMap hyperbolic_map(Cx p, Cx q, double tau);

// how orbit enumeration recognizes repeated group elements
enum class DedupMode {
  integer_matrix,  // recover the preimage in SL(2, Z) and compare exactly
  free_reduced,    // generators are free: skip backtracking, never repeat
  rounded_key,     // quantized matrix entries with neighbor probing
};

struct MobiusGroup {
  std::string name;
  std::vector<MobiusMap> gens;
  DedupMode dedup = DedupMode::rounded_key;

  // gens then their inverses; letter i has inverse letter i ^ 1 interleaved
  std::vector<MobiusMap> letters() const;
};

// S: z -> -z and T: z -> z + 1 carried over from the upper half plane
MobiusGroup preset_psl2z();

// rank-2 free group: translation length tau along two orthogonal diameters.
// throws InvalidPresetError unless the four isometric circles are pairwise
// disjoint (the ping-pong configuration), which fails for small tau
MobiusGroup preset_schottky(double tau);

MobiusGroup preset_by_name(const std::string& name, double tau);

struct OrbitPoint {
  MobiusMap g;
  Cx point;        // g(0)
  int word_length = 0;
};

struct OrbitBallOptions {
  double slack = 2.0;          // expansion margin beyond the target radius
  std::size_t cap = 4000000;   // element limit, CapacityError beyond
};

// all distinct orbit points of 0 within hyperbolic distance radius of 0,
// breadth-first by word length.  expansion is pruned at radius + slack;
// for lattice presets the orbit stays generator-connected well inside that
// margin, and the free presets need none
std::vector<OrbitPoint> orbit_ball(const MobiusGroup& grp, double radius,
                                   const OrbitBallOptions& opt = {});

// all distinct elements with word length <= max_len, identity first
std::vector<OrbitPoint> enumerate_elements(const MobiusGroup& grp, int max_len,
                                           std::size_t cap = 4000000);

}  // namespace horolab::disk
