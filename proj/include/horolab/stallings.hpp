#pragma once

// folded core graphs for finitely generated subgroups of a free group.
//
// a subgroup given by generator words becomes a wedge of loops at the base
// vertex; folding identifies edges with equal labels at a common vertex
// until the graph is deterministic, then degree-one non-base vertices are
// pruned.  membership, ball enumeration, ray readability and the horoball
// counting tables all run on the folded graph.
//
// vertex numbering is the breadth-first order from the base, so equal
// subgroups always produce the identical adjacency dump.

#include <optional>
#include <string>
#include <vector>

#include "horolab/rational.hpp"
#include "horolab/ray.hpp"
#include "horolab/words.hpp"

namespace horolab::tree {

class StallingsGraph {
 public:
  // fold the subgroup generated by the given words
  static StallingsGraph fold(int rank, const std::vector<ReducedWord>& generators);

  int rank() const { return rank_; }
  int base() const { return 0; }
  int vertex_count() const { return static_cast<int>(edges_.size()); }

  // target of the letter-labelled edge at v, or -1
  int edge(int v, Letter l) const { return edges_[static_cast<std::size_t>(v)][static_cast<std::size_t>(l)]; }

  int degree(int v) const;

  // subgroup membership: w readable as a closed path at the base
  bool contains(const ReducedWord& w) const;

  // all subgroup elements of word length <= radius, duplicate-free,
  // ordered by (length, lex)
  std::vector<ReducedWord> enumerate_ball(int radius) const;

  // plain adjacency text: header lines then one line per positive edge
  std::string adjacency_dump() const;

  bool operator==(const StallingsGraph& other) const = default;

 private:
  int rank_ = 2;
  std::vector<std::vector<int>> edges_;  // [vertex][letter] -> vertex or -1
};

// outcome of reading a ray from the base vertex
struct RayReading {
  bool readable_forever = false;  // meaningful for eventually periodic rays
  // 1-based position of the first unreadable letter; 0 if none found within
  // the inspected range
  std::size_t exit_position = 0;
  // vertices[i] = vertex after reading i letters (vertices[0] = base)
  std::vector<int> vertices;
};

// follow the ray's letters through the graph.  eventually periodic rays are
// decided exactly (cycle detection over (vertex, phase) states); sampled
// rays are followed for max_letters letters.
RayReading read_ray(const StallingsGraph& g, const BoundaryRay& ray,
                    std::size_t max_letters);

struct EpHorosphericDecision {
  bool in_big_horospheric = false;
  std::size_t exit_position = 0;    // when not in: first unreadable letter, 1-based
  // when in: subgroup elements tracking the ray arbitrarily deep; witness n
  // has a prefix of >= n ray letters, so its busemann level is <= |V| - n
  std::vector<ReducedWord> witnesses;
};

// exact membership of an eventually periodic ray in the big horospheric
// limit set of the subgroup.  the ray lies in it iff its letters can be
// read from the base forever; see the project readme for the argument.
EpHorosphericDecision decide_ep_horospheric(const StallingsGraph& g,
                                            const BoundaryRay& ray);

// counts of subgroup elements bucketed by how far they track a ray.
//
//   tot(c, n) = #{ h in H : h = (first c ray letters) * w, |w| = n,
//                  common prefix of h with the ray exactly c }
//
// every h in the radius-R ball is counted once at c = cp(h, ray), so
// horoball occupancy, radial tube counts and the density series all reduce
// to weighted sums over these tables.  computed by a non-backtracking
// path-count dynamic program; never enumerates the ball.
class CpPathTables {
 public:
  CpPathTables(const StallingsGraph& g, const BoundaryRay& ray, int radius);

  int radius() const { return radius_; }
  // letters of the ray readable from the base, capped at radius
  std::size_t readable_prefix() const { return tot_.size() - 1; }

  // #{ h in H : |h| <= R, |h| - 2 cp(h, ray) <= t }, exact
  Int occupancy(long long t, int R) const;

  // #{ h in H : |h| <= R, |h| - cp(h, ray) <= c }, exact ("radial tube")
  Int radial_count(long long c, int R) const;

  // sum over the radius-R ball of (2k-1)^(2 cp(h) - |h|), exact
  Rational series_partial(int R) const;

 private:
  int radius_ = 0;
  int rank_ = 2;
  // tot_[c][n]; rows only for readable c
  std::vector<std::vector<Int>> tot_;
};

}  // namespace horolab::tree
