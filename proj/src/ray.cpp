#include "horolab/ray.hpp"

#include <algorithm>

namespace horolab::tree {

namespace {

// is v = z^m for a proper divisor length |z|?  if so return the primitive z
ReducedWord primitive_root(const ReducedWord& v) {
  std::size_t n = v.length();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) {
      if (v.at(i) != v.at(i % d)) ok = false;
    }
    if (ok) return v.subword(0, d);
  }
  return v;
}

ReducedWord rotate_left(const ReducedWord& v) {
  std::vector<Letter> ls;
  ls.reserve(v.length());
  for (std::size_t i = 1; i < v.length(); ++i) ls.push_back(v.at(i));
  ls.push_back(v.at(0));
  return ReducedWord::from_letters(ls);
}

ReducedWord rotate_right(const ReducedWord& v) {
  std::vector<Letter> ls;
  ls.reserve(v.length());
  ls.push_back(v.at(v.length() - 1));
  for (std::size_t i = 0; i + 1 < v.length(); ++i) ls.push_back(v.at(i));
  return ReducedWord::from_letters(ls);
}

ReducedWord drop_last(const ReducedWord& u) { return u.subword(0, u.length() - 1); }

}  // namespace

BoundaryRay BoundaryRay::eventually_periodic(const ReducedWord& prefix,
                                             const ReducedWord& period,
                                             int rank) {
  if (period.empty()) {
    throw MalformedWordError("boundary ray needs a nonempty period");
  }
  ReducedWord u = prefix;
  ReducedWord v = period;

  // make the period cyclically reduced, absorbing conjugating letters into
  // the prefix: u (c w c^-1)^inf = (u c) w^inf
  while (v.length() >= 2 && v.at(0) == letter_inverse(v.at(v.length() - 1))) {
    std::vector<Letter> push{v.at(0)};
    u = u * ReducedWord::from_letters(push);
    v = v.subword(1, v.length() - 1);
  }
  if (v.empty()) {
    throw MalformedWordError("period collapses to the empty word");
  }
  v = primitive_root(v);

  // shrink the prefix: cancel u's tail into the period, or absorb a shared
  // last letter by rotating the period.  each step shortens u, so this
  // terminates with the minimal prefix.
  for (;;) {
    if (u.empty()) break;
    Letter last = u.at(u.length() - 1);
    if (last == letter_inverse(v.at(0))) {
      // u d (c w)^inf with d = c^-1  ->  (u') (w c)^inf
      u = drop_last(u);
      v = rotate_left(v);
    } else if (last == v.at(v.length() - 1)) {
      // (u' c) (w c)^inf = u' (c w)^inf
      u = drop_last(u);
      v = rotate_right(v);
    } else {
      break;
    }
  }

  BoundaryRay ray;
  ray.rank_ = rank;
  ray.periodic_ = true;
  ray.prefix_ = u;
  ray.period_ = v;

  // canonical form must read as a genuine reduced infinite word
  if (!u.empty() && u.at(u.length() - 1) == letter_inverse(v.at(0))) {
    throw MalformedWordError("ray did not canonicalize; period reduces into prefix");
  }
  return ray;
}

BoundaryRay BoundaryRay::sampled(int rank, std::uint64_t seed) {
  BoundaryRay ray;
  ray.rank_ = rank;
  ray.periodic_ = false;
  ray.sample_ = std::make_shared<SampleState>();
  ray.sample_->seed = seed;
  ray.sample_->rng = Rng(seed);
  return ray;
}

BoundaryRay BoundaryRay::parse(std::string_view text, int rank) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw MalformedWordError("ray literal needs the form 'prefix|period': '" +
                             std::string(text) + "'");
  }
  ReducedWord u = ReducedWord::parse(text.substr(0, bar), rank);
  ReducedWord v = ReducedWord::parse(text.substr(bar + 1), rank);
  return eventually_periodic(u, v, rank);
}

void BoundaryRay::extend_to(std::size_t n) const {
  auto& st = *sample_;
  while (st.letters.size() < n) {
    if (st.letters.empty()) {
      st.letters.push_back(
          static_cast<std::int8_t>(st.rng.below(2ull * rank_)));
    } else {
      Letter prev = st.letters.back();
      Letter pick = static_cast<Letter>(st.rng.below(2ull * rank_ - 1));
      if (pick >= letter_inverse(prev)) ++pick;
      st.letters.push_back(static_cast<std::int8_t>(pick));
    }
  }
}

Letter BoundaryRay::at(std::size_t i) const {
  if (periodic_) {
    if (i < prefix_.length()) return prefix_.at(i);
    return period_.at((i - prefix_.length()) % period_.length());
  }
  extend_to(i + 1);
  return sample_->letters[i];
}

ReducedWord BoundaryRay::prefix_word(std::size_t n) const {
  std::vector<Letter> ls;
  ls.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ls.push_back(at(i));
  return ReducedWord::from_letters(ls);
}

std::size_t BoundaryRay::common_prefix_with(const ReducedWord& w) const {
  std::size_t i = 0;
  while (i < w.length() && w.at(i) == at(i)) ++i;
  return i;
}

BoundaryRay BoundaryRay::translated(const ReducedWord& g) const {
  if (!periodic_) {
    throw Error("translated: only eventually periodic rays support exact translation");
  }
  // g u v^inf: cancellation consumes at most |g| letters, so soaking |g|
  // worth of periods into the explicit prefix is always enough
  std::size_t copies = g.length() / period_.length() + 2;
  ReducedWord long_prefix = prefix_;
  for (std::size_t i = 0; i < copies; ++i) long_prefix = long_prefix * period_;
  return eventually_periodic(g * long_prefix, period_, rank_);
}

std::string BoundaryRay::label() const {
  if (periodic_) {
    std::string u = prefix_.empty() ? "" : prefix_.str();
    return u + "|" + period_.str();
  }
  return "sampled:" + std::to_string(sample_->seed);
}

bool BoundaryRay::same_ray(const BoundaryRay& other) const {
  if (periodic_ != other.periodic_) return false;
  if (periodic_) return prefix_ == other.prefix_ && period_ == other.period_;
  return sample_ == other.sample_;
}

BoundaryRay sample_uniform_ray(int rank, std::uint64_t seed) {
  return BoundaryRay::sampled(rank, seed);
}

BoundaryRay random_ep_ray(Rng& rng, int rank, std::size_t max_prefix,
                          std::size_t max_period) {
  for (;;) {
    std::size_t up = rng.below(max_prefix + 1);
    std::size_t vp = 1 + rng.below(max_period);
    ReducedWord u = random_reduced_word(rng, rank, up);
    ReducedWord v = random_reduced_word(rng, rank, vp);
    if (v.empty()) continue;
    try {
      return BoundaryRay::eventually_periodic(u, v, rank);
    } catch (const MalformedWordError&) {
      // period collapsed; draw again
    }
  }
}

}  // namespace horolab::tree
