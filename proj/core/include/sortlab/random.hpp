#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace sortlab {

/// SplitMix64 (Steele, Lea, Flood). Small, fast and splittable: `split()`
/// derives an independent stream, which is what per-trial seeding needs.
/// Output is identical on every platform, unlike the std distributions.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  SplitMix64 split() { return SplitMix64((*this)()); }

 private:
  std::uint64_t state_;
};

__extension__ typedef unsigned __int128 uint128;

/// Uniform value in [0, bound) by multiply-shift. bound must be > 0.
template <class Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const uint128 product = static_cast<uint128>(rng()) * bound;
  return static_cast<std::uint64_t>(product >> 64);
}

/// Mixes several words into one seed; used to give every (n, trial) pair its
/// own stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  SplitMix64 g(base ^ (a * 0xd6e8feb86659fd93ULL));
  g();
  SplitMix64 h(g() ^ (b * 0xa0761d6478bd642fULL));
  return h();
}

template <class T, class Rng>
void shuffle(std::span<T> a, Rng& rng) {
  for (std::size_t i = a.size(); i > 1; --i) {
    const std::size_t j = uniform_below(rng, i);
    using std::swap;
    swap(a[i - 1], a[j]);
  }
}

/// Always returns 0. Drives the pivot sampler to pick the leading elements
/// of every segment, which on sorted input yields maximally skewed pivots.
struct ZeroRng {
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return 0; }
};

}  // namespace sortlab
