#include "horolab/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace horolab::tree {

namespace {

// union-find folding over a growing edge table
struct Folder {
  std::vector<int> parent;
  std::vector<std::map<int, int>> out;  // per root: letter -> target vertex

  int make_vertex() {
    parent.push_back(static_cast<int>(parent.size()));
    out.emplace_back();
    return parent.back();
  }

  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }

  std::deque<std::pair<int, int>> pending;

  // record edge v --l--> w together with its inverse
  void add_edge(int v, Letter l, int w) {
    half_edge(v, l, w);
    half_edge(w, letter_inverse(l), v);
  }

  void half_edge(int v, Letter l, int w) {
    v = find(v);
    w = find(w);
    auto& m = out[static_cast<std::size_t>(v)];
    auto it = m.find(l);
    if (it == m.end()) {
      m[l] = w;
    } else if (find(it->second) != w) {
      pending.emplace_back(it->second, w);
    }
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (out[static_cast<std::size_t>(a)].size() < out[static_cast<std::size_t>(b)].size()) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    auto moved = std::move(out[static_cast<std::size_t>(b)]);
    out[static_cast<std::size_t>(b)].clear();
    for (auto [l, t] : moved) half_edge(a, l, t);
  }

  void settle() {
    while (!pending.empty()) {
      auto [a, b] = pending.front();
      pending.pop_front();
      unite(a, b);
    }
  }
};

}  // namespace

StallingsGraph StallingsGraph::fold(int rank,
                                    const std::vector<ReducedWord>& generators) {
  Folder f;
  int base = f.make_vertex();
  for (const ReducedWord& g : generators) {
    if (g.empty()) continue;
    int cur = base;
    for (std::size_t i = 0; i < g.length(); ++i) {
      int next = (i + 1 == g.length()) ? base : f.make_vertex();
      f.add_edge(cur, g.at(i), next);
      f.settle();
      cur = f.find(next);
    }
  }
  f.settle();

  // collect surviving roots and their folded edges
  int root_base = f.find(base);
  std::map<int, std::map<int, int>> folded;
  for (int v = 0; v < static_cast<int>(f.parent.size()); ++v) {
    if (f.find(v) != v) continue;
    auto& m = folded[v];
    for (auto [l, t] : f.out[static_cast<std::size_t>(v)]) m[l] = f.find(t);
  }

  // prune non-base vertices of degree <= 1 until the graph is a core graph
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = folded.begin(); it != folded.end();) {
      if (it->first != root_base && it->second.size() <= 1) {
        if (!it->second.empty()) {
          auto [l, t] = *it->second.begin();
          folded[t].erase(letter_inverse(l));
        }
        it = folded.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  if (folded.find(root_base) == folded.end()) {
    folded[root_base] = {};  // trivial subgroup: base vertex only
  }

  // renumber breadth-first from the base, letters in ascending order, so
  // the numbering is canonical
  std::map<int, int> number;
  std::vector<int> order;
  std::queue<int> bfs;
  number[root_base] = 0;
  order.push_back(root_base);
  bfs.push(root_base);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (auto [l, t] : folded[v]) {
      if (number.find(t) == number.end()) {
        number[t] = static_cast<int>(order.size());
        order.push_back(t);
        bfs.push(t);
      }
    }
  }

  StallingsGraph g;
  g.rank_ = rank;
  g.edges_.assign(order.size(), std::vector<int>(2 * static_cast<std::size_t>(rank), -1));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto [l, t] : folded[order[i]]) {
      g.edges_[i][static_cast<std::size_t>(l)] = number[t];
    }
  }
  return g;
}

int StallingsGraph::degree(int v) const {
  int d = 0;
  for (int t : edges_[static_cast<std::size_t>(v)]) {
    if (t >= 0) ++d;
  }
  return d;
}

bool StallingsGraph::contains(const ReducedWord& w) const {
  int v = base();
  for (std::size_t i = 0; i < w.length(); ++i) {
    v = edge(v, w.at(i));
    if (v < 0) return false;
  }
  return v == base();
}

std::vector<ReducedWord> StallingsGraph::enumerate_ball(int radius) const {
  std::vector<ReducedWord> found;
  std::vector<Letter> stack;

  // depth-first over non-backtracking paths; letters ascend, so the
  // enumeration order is deterministic and the final sort is stable-cheap
  auto recurse = [&](auto&& self, int v, int last, int depth) -> void {
    if (v == base()) found.push_back(ReducedWord::from_letters(stack));
    if (depth == radius) return;
    for (Letter l = 0; l < 2 * rank_; ++l) {
      if (last >= 0 && l == letter_inverse(last)) continue;
      int t = edge(v, l);
      if (t < 0) continue;
      stack.push_back(l);
      self(self, t, l, depth + 1);
      stack.pop_back();
    }
  };
  recurse(recurse, base(), -1, 0);

  std::sort(found.begin(), found.end(),
            [](const ReducedWord& a, const ReducedWord& b) {
              return a.shorter_lex_less(b);
            });
  return found;
}

std::string StallingsGraph::adjacency_dump() const {
  std::ostringstream os;
  os << "rank " << rank_ << "\n";
  os << "vertices " << vertex_count() << "\n";
  os << "base " << base() << "\n";
  for (int v = 0; v < vertex_count(); ++v) {
    for (Letter l = 0; l < 2 * rank_; l += 2) {  // positive letters only
      int t = edge(v, l);
      if (t >= 0) os << v << " " << letter_char(l) << " " << t << "\n";
    }
  }
  return os.str();
}

RayReading read_ray(const StallingsGraph& g, const BoundaryRay& ray,
                    std::size_t max_letters) {
  RayReading r;
  r.vertices.push_back(g.base());
  int v = g.base();

  // for eventually periodic rays a repeated (vertex, phase) state proves the
  // reading cycles forever; keep walking afterwards until max_letters so
  // callers get the vertex trace they asked for
  std::set<std::pair<int, std::size_t>> seen;
  bool decided = !ray.is_periodic();
  std::size_t up = 0, vp = 1;
  if (ray.is_periodic()) {
    up = ray.prefix().length();
    vp = ray.period().length();
  }
  for (std::size_t i = 0;; ++i) {
    if (!decided && i >= up) {
      auto key = std::make_pair(v, (i - up) % vp);
      if (seen.count(key)) {
        r.readable_forever = true;
        decided = true;
      } else {
        seen.insert(key);
      }
    }
    if (i >= max_letters && decided) return r;
    int t = g.edge(v, ray.at(i));
    if (t < 0) {
      r.exit_position = i + 1;
      return r;
    }
    v = t;
    r.vertices.push_back(v);
  }
}

namespace {

// shortest word read along a path from v back to the base
std::vector<ReducedWord> return_words(const StallingsGraph& g) {
  int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, Letter>> step(static_cast<std::size_t>(n), {-1, 0});  // next hop toward base
  std::queue<int> q;
  dist[static_cast<std::size_t>(g.base())] = 0;
  q.push(g.base());
  // bfs from the base over reversed edges; step[v] then walks toward base
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (Letter l = 0; l < 2 * g.rank(); ++l) {
      int t = g.edge(v, l);
      if (t >= 0 && dist[static_cast<std::size_t>(t)] < 0) {
        dist[static_cast<std::size_t>(t)] = dist[static_cast<std::size_t>(v)] + 1;
        step[static_cast<std::size_t>(t)] = {v, letter_inverse(l)};
        q.push(t);
      }
    }
  }
  std::vector<ReducedWord> words(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<Letter> ls;
    int cur = v;
    while (cur != g.base()) {
      auto [to, l] = step[static_cast<std::size_t>(cur)];
      ls.push_back(l);
      cur = to;
    }
    words[static_cast<std::size_t>(v)] = ReducedWord::from_letters(ls);
  }
  return words;
}

}  // namespace

EpHorosphericDecision decide_ep_horospheric(const StallingsGraph& g,
                                            const BoundaryRay& ray) {
  if (!ray.is_periodic()) {
    throw Error("decide_ep_horospheric: ray must be eventually periodic");
  }
  EpHorosphericDecision d;
  RayReading r = read_ray(g, ray, 0);
  if (!r.readable_forever) {
    d.in_big_horospheric = false;
    d.exit_position = r.exit_position;
    return d;
  }
  d.in_big_horospheric = true;
  // witnesses: prefix_n * (shortest return path); their horoball levels
  // |h| - 2 cp(h, ray) <= |V| - n drop without bound as n grows
  auto returns = return_words(g);
  std::size_t depth = r.vertices.size() - 1;
  for (std::size_t n : {std::size_t{1}, std::size_t{2}, depth}) {
    if (n == 0 || n > depth) continue;
    ReducedWord h = ray.prefix_word(n) * returns[static_cast<std::size_t>(r.vertices[n])];
    if (d.witnesses.empty() || !(h == d.witnesses.back())) d.witnesses.push_back(h);
  }
  return d;
}

CpPathTables::CpPathTables(const StallingsGraph& g, const BoundaryRay& ray,
                           int radius)
    : radius_(radius), rank_(g.rank()) {
  // vertices along the ray, while readable, up to c = radius
  RayReading reading = read_ray(g, ray, static_cast<std::size_t>(radius));
  std::size_t max_c = reading.vertices.size() - 1;
  if (max_c > static_cast<std::size_t>(radius)) max_c = static_cast<std::size_t>(radius);

  const int letters = 2 * rank_;
  const int none = letters;  // sentinel incoming label for the start state

  tot_.assign(max_c + 1, {});
  for (std::size_t c = 0; c <= max_c; ++c) {
    int budget = radius - static_cast<int>(c);
    auto& row = tot_[c];
    row.assign(static_cast<std::size_t>(budget) + 1, Int(0));

    // state: (vertex, last letter used); start at the ray's c-th vertex with
    // the ray letter c-1 as incoming label
    int start_v = reading.vertices[c];
    int start_last = (c == 0) ? none : ray.at(c - 1);
    // walking back along the ray is forbidden by reducedness of h, and the
    // next ray letter is forbidden so that cp(h, ray) is exactly c
    Letter forbidden_first = ray.at(c);

    std::vector<std::vector<Int>> cur(
        static_cast<std::size_t>(g.vertex_count()),
        std::vector<Int>(static_cast<std::size_t>(letters) + 1, Int(0)));
    cur[static_cast<std::size_t>(start_v)][static_cast<std::size_t>(start_last)] = 1;
    if (start_v == g.base()) row[0] = 1;

    for (int n = 1; n <= budget; ++n) {
      std::vector<std::vector<Int>> next(
          static_cast<std::size_t>(g.vertex_count()),
          std::vector<Int>(static_cast<std::size_t>(letters) + 1, Int(0)));
      for (int v = 0; v < g.vertex_count(); ++v) {
        for (int last = 0; last <= letters; ++last) {
          const Int& cnt = cur[static_cast<std::size_t>(v)][static_cast<std::size_t>(last)];
          if (cnt == 0) continue;
          for (Letter l = 0; l < letters; ++l) {
            if (last != none && l == (last ^ 1)) continue;  // backtrack
            if (n == 1 && l == forbidden_first) continue;
            int t = g.edge(v, l);
            if (t < 0) continue;
            next[static_cast<std::size_t>(t)][static_cast<std::size_t>(l)] += cnt;
          }
        }
      }
      cur.swap(next);
      Int at_base = 0;
      for (int last = 0; last <= letters; ++last) {
        at_base += cur[static_cast<std::size_t>(g.base())][static_cast<std::size_t>(last)];
      }
      row[static_cast<std::size_t>(n)] = at_base;
    }
  }
}

Int CpPathTables::occupancy(long long t, int R) const {
  if (R > radius_) throw Error("occupancy: R exceeds table radius");
  // h = (c ray letters) * w with |w| = n: |h| = c + n and the horoball
  // condition |h| - 2c <= t caps n at c + t
  Int total = 0;
  for (std::size_t c = 0; c < tot_.size(); ++c) {
    long long cap = std::min<long long>(R - static_cast<long long>(c),
                                        static_cast<long long>(c) + t);
    if (cap < 0) continue;
    const auto& row = tot_[c];
    for (long long n = 0; n <= cap && n < static_cast<long long>(row.size()); ++n) {
      total += row[static_cast<std::size_t>(n)];
    }
  }
  return total;
}

Int CpPathTables::radial_count(long long c_max, int R) const {
  if (R > radius_) throw Error("radial_count: R exceeds table radius");
  Int total = 0;
  for (std::size_t c = 0; c < tot_.size(); ++c) {
    long long cap = std::min<long long>(R - static_cast<long long>(c), c_max);
    if (cap < 0) continue;
    const auto& row = tot_[c];
    for (long long n = 0; n <= cap && n < static_cast<long long>(row.size()); ++n) {
      total += row[static_cast<std::size_t>(n)];
    }
  }
  return total;
}

Rational CpPathTables::series_partial(int R) const {
  if (R > radius_) throw Error("series_partial: R exceeds table radius");
  // term of h: (2k-1)^(2c - |h|) with |h| = c + n, i.e. (2k-1)^(c - n)
  Rational q(2 * rank_ - 1);
  Rational total = 0;
  for (std::size_t c = 0; c < tot_.size(); ++c) {
    long long cap = R - static_cast<long long>(c);
    if (cap < 0) continue;
    const auto& row = tot_[c];
    for (long long n = 0; n <= cap && n < static_cast<long long>(row.size()); ++n) {
      if (row[static_cast<std::size_t>(n)] == 0) continue;
      Rational term = rat_pow(q, static_cast<long long>(c) - n);
      total += term * Rational(row[static_cast<std::size_t>(n)]);
    }
  }
  return total;
}

}  // namespace horolab::tree
