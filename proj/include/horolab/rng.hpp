#pragma once

// deterministic randomness.  std::uniform_int_distribution is
// implementation-defined, so all draws go through explicit rejection
// sampling on mt19937_64; identical seeds give identical streams on any
// platform.  per-sample seeds are derived with splitmix64 so parallel
// workers never share a stream.

#include <cstdint>
#include <random>

namespace horolab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// seed for the index-th independent substream of a master seed
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (0xa0761d6478bd642full * (index + 1));
  std::uint64_t a = splitmix64(s);
  std::uint64_t b = splitmix64(s);
  return a ^ (b << 1);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform over [0, n), n >= 1, unbiased via rejection
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // uniform double in [0, 1) with 53 significant bits
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace horolab
