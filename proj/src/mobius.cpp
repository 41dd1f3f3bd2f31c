#include "horolab/mobius.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <unordered_set>
#include <unordered_map>

namespace horolab::disk {

Cx MobiusMap::apply(Cx z) const {
  Cx den = std::conj(b) * z + std::conj(a);
  if (std::abs(den) < 1e-300) throw NumericDegeneracyError("mobius pole hit");
  return (a * z + b) / den;
}

MobiusMap MobiusMap::operator*(const MobiusMap& o) const {
  MobiusMap r;
  r.a = a * o.a + b * std::conj(o.b);
  r.b = a * o.b + b * std::conj(o.a);
  return r.renormalized();
}

double MobiusMap::det_defect() const {
  return std::abs(std::norm(a) - std::norm(b) - 1.0);
}

MobiusMap MobiusMap::renormalized() const {
  double det = std::norm(a) - std::norm(b);
  if (!(det > 1e-12)) throw NumericDegeneracyError("mobius determinant collapsed");
  double s = std::sqrt(det);
  return {a / s, b / s};
}

bool MobiusMap::is_identity(double tol) const {
  double off = std::abs(b);
  return off <= tol && (std::abs(a - Cx{1, 0}) <= tol || std::abs(a + Cx{1, 0}) <= tol);
}

double MobiusMap::displacement() const {
  return std::acosh(std::max(1.0, std::norm(a) + std::norm(b)));
}

IsometricCircle isometric_circle(const MobiusMap& g) {
  if (std::abs(g.b) < 1e-300) {
    throw NumericDegeneracyError("isometric circle undefined for rotation about 0");
  }
  return {-std::conj(g.a) / std::conj(g.b), 1.0 / std::abs(g.b)};
}

MobiusMap hyperbolic_map(Cx p, Cx q, double tau) {
  if (std::abs(std::abs(p) - 1.0) > 1e-9 || std::abs(std::abs(q) - 1.0) > 1e-9) {
    throw InvalidPresetError("axis endpoints must lie on the unit circle");
  }
  if (std::abs(p - q) < 1e-9) throw InvalidPresetError("axis endpoints coincide");
  if (!(tau > 0.0)) throw InvalidPresetError("translation length must be positive");
  double lam = std::exp(tau / 2.0);
  Cx d = q - p;
  MobiusMap g;
  g.a = (q * lam - p / lam) / d;
  g.b = p * q * (1.0 / lam - lam) / d;
  return g.renormalized();
}

std::vector<MobiusMap> MobiusGroup::letters() const {
  std::vector<MobiusMap> out;
  out.reserve(gens.size() * 2);
  for (const auto& g : gens) {
    out.push_back(g);
    out.push_back(g.inverse());
  }
  return out;
}

MobiusGroup preset_psl2z() {
  MobiusGroup grp;
  grp.name = "psl2z";
  grp.gens = {MobiusMap{Cx{0, -1}, Cx{0, 0}},       // z -> -z (from z -> -1/z upstairs)
              MobiusMap{Cx{1, 0.5}, Cx{0, -0.5}}};  // from z -> z + 1 upstairs
  grp.dedup = DedupMode::integer_matrix;
  return grp;
}

MobiusGroup preset_schottky(double tau) {
  MobiusGroup grp;
  grp.name = "schottky";
  grp.gens = {hyperbolic_map(Cx{-1, 0}, Cx{1, 0}, tau),
              hyperbolic_map(Cx{0, -1}, Cx{0, 1}, tau)};
  grp.dedup = DedupMode::free_reduced;

  std::vector<IsometricCircle> circles;
  for (const auto& g : grp.letters()) circles.push_back(isometric_circle(g));
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      double gap = std::abs(circles[i].center - circles[j].center) -
                   circles[i].radius - circles[j].radius;
      if (gap <= 1e-9) {
        throw InvalidPresetError(
            "schottky isometric circles overlap; increase the translation length");
      }
    }
  }
  return grp;
}

MobiusGroup preset_by_name(const std::string& name, double tau) {
  if (name == "psl2z") return preset_psl2z();
  if (name == "schottky") return preset_schottky(tau);
  throw InvalidPresetError("unknown disk preset: " + name);
}

namespace {

// exact identification for groups conjugated from SL(2, Z): the preimage
// matrix is [[re a + re b, im a - im b], [-im a - im b, re a - re b]]
struct IntegerKey {
  std::array<long long, 4> m{};
  bool operator==(const IntegerKey&) const = default;
};

struct IntegerKeyHash {
  std::size_t operator()(const IntegerKey& k) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (long long v : k.m) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

IntegerKey integer_key(const MobiusMap& g) {
  double raw[4] = {g.a.real() + g.b.real(), g.a.imag() - g.b.imag(),
                   -g.a.imag() - g.b.imag(), g.a.real() - g.b.real()};
  IntegerKey k;
  for (int i = 0; i < 4; ++i) {
    double r = std::llround(raw[i]);
    if (std::abs(raw[i] - r) > 0.2) {
      throw NumericDegeneracyError("orbit element strays from the integer lattice");
    }
    k.m[i] = static_cast<long long>(r);
  }
  for (int i = 0; i < 4; ++i) {
    if (k.m[i] == 0) continue;
    if (k.m[i] < 0) {
      for (auto& v : k.m) v = -v;
    }
    break;
  }
  return k;
}

// fallback identification by quantized entries; floor cells with +-1 probing
// so grid straddles cannot split one element into two
struct CellHash {
  std::size_t operator()(const IntegerKey& k) const { return IntegerKeyHash{}(k); }
};

class RoundedDedup {
 public:
  bool insert(const MobiusMap& g) {
    std::array<double, 4> e = entries(g);
    std::array<double, 4> ne;
    for (int i = 0; i < 4; ++i) ne[i] = -e[i];
    if (probe(e) || probe(ne)) return false;
    cells_[cell_of(e)].push_back(e);
    return true;
  }

 private:
  static constexpr double kGrid = 1e6;
  static constexpr double kTol = 1e-8;

  static std::array<double, 4> entries(const MobiusMap& g) {
    return {g.a.real(), g.a.imag(), g.b.real(), g.b.imag()};
  }

  static IntegerKey cell_of(const std::array<double, 4>& e) {
    IntegerKey k;
    for (int i = 0; i < 4; ++i) k.m[i] = static_cast<long long>(std::floor(e[i] * kGrid));
    return k;
  }

  bool probe(const std::array<double, 4>& e) const {
    IntegerKey base = cell_of(e);
    IntegerKey c;
    for (int d0 = -1; d0 <= 1; ++d0)
      for (int d1 = -1; d1 <= 1; ++d1)
        for (int d2 = -1; d2 <= 1; ++d2)
          for (int d3 = -1; d3 <= 1; ++d3) {
            c.m = {base.m[0] + d0, base.m[1] + d1, base.m[2] + d2, base.m[3] + d3};
            auto it = cells_.find(c);
            if (it == cells_.end()) continue;
            for (const auto& s : it->second) {
              double diff = 0.0;
              for (int i = 0; i < 4; ++i) diff = std::max(diff, std::abs(s[i] - e[i]));
              if (diff <= kTol) return true;
            }
          }
    return false;
  }

  std::unordered_map<IntegerKey, std::vector<std::array<double, 4>>, CellHash> cells_;
};

struct BfsNode {
  std::size_t index;  // into the result vector
  int last_letter;
};

// shared breadth-first expansion; radius < 0 disables the metric prune and
// max_len < 0 disables the word-length stop
std::vector<OrbitPoint> expand(const MobiusGroup& grp, double radius, double slack,
                               int max_len, std::size_t cap) {
  auto letters = grp.letters();
  const int nl = static_cast<int>(letters.size());

  std::vector<OrbitPoint> out;
  std::deque<BfsNode> queue;
  std::unordered_set<IntegerKey, IntegerKeyHash> int_seen;
  RoundedDedup rounded;

  auto try_insert = [&](const MobiusMap& g) {
    switch (grp.dedup) {
      case DedupMode::integer_matrix:
        return int_seen.insert(integer_key(g)).second;
      case DedupMode::free_reduced:
        return true;
      case DedupMode::rounded_key:
        return rounded.insert(g);
    }
    return false;
  };

  auto record = [&](const MobiusMap& g, int len, int last) {
    if (out.size() >= cap) throw CapacityError("orbit enumeration exceeds element cap");
    out.push_back({g, g.apply_zero(), len});
    queue.push_back({out.size() - 1, last});
  };

  MobiusMap id;
  try_insert(id);
  record(id, 0, -1);

  while (!queue.empty()) {
    BfsNode node = queue.front();
    queue.pop_front();
    OrbitPoint cur = out[node.index];  // copy, out may reallocate
    if (max_len >= 0 && cur.word_length >= max_len) continue;
    if (radius >= 0.0 && cur.g.displacement() > radius + slack) continue;
    for (int l = 0; l < nl; ++l) {
      if (node.last_letter >= 0 && l == (node.last_letter ^ 1)) continue;
      MobiusMap next = cur.g * letters[l];
      if (radius >= 0.0 && next.displacement() > radius + slack) continue;
      if (!try_insert(next)) continue;
      record(next, cur.word_length + 1, l);
    }
  }
  return out;
}

}  // namespace

std::vector<OrbitPoint> orbit_ball(const MobiusGroup& grp, double radius,
                                   const OrbitBallOptions& opt) {
  if (!(radius >= 0.0)) throw ConfigError("orbit radius must be nonnegative");
  auto all = expand(grp, radius, opt.slack, -1, opt.cap);
  std::vector<OrbitPoint> out;
  out.reserve(all.size());
  for (auto& p : all) {
    if (p.g.displacement() <= radius) out.push_back(std::move(p));
  }
  return out;
}

std::vector<OrbitPoint> enumerate_elements(const MobiusGroup& grp, int max_len,
                                           std::size_t cap) {
  if (max_len < 0) throw ConfigError("word length bound must be nonnegative");
  return expand(grp, -1.0, 0.0, max_len, cap);
}

}  // namespace horolab::disk
