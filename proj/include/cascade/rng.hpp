#pragma once

#include <cstdint>
#include <vector>

#include "cascade/rat.hpp"

namespace cascade {

// splitmix64; streams derived from (seed, index) are independent of worker
// count, which is what makes every stochastic command reproducible.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double next_unit() { return (next() >> 11) * 0x1.0p-53; }

  static SplitMix64 derive(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    mix.next();
    return mix;
  }
};

// A uniform variate in [0,1) whose bits are drawn lazily, so comparisons
// against exact rationals are exact in distribution.
class LazyUniform {
 public:
  explicit LazyUniform(SplitMix64& rng) : rng_(&rng) {}

  // Is the variate < q? Extends the bit expansion until decided.
  bool less_than(const Rat& q) {
    if (q.sgn() <= 0) return false;
    if (q >= Rat(1)) return true;
    for (;;) {
      // value in [lo_, lo_ + width_)
      if (q <= lo_) return false;
      if (lo_ + width_ <= q) return true;
      extend();
    }
  }

 private:
  void extend() {
    std::uint64_t limb = rng_->next();
    width_ /= Rat(mpz_class(1) << 64, 1);
    lo_ += Rat(mpz_class(limb), 1) * width_;
  }

  SplitMix64* rng_;
  Rat lo_ = Rat(0);
  Rat width_ = Rat(1);
};

// Samples an index from exact cumulative weights (cum.back() == total).
// Expected O(log n) double-bracketing with exact verification.
int sample_index(SplitMix64& rng, const std::vector<Rat>& cum, const Rat& total);

}  // namespace cascade
