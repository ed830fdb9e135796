#pragma once

#include <cstdint>

#include "actnet/core/matrix.hpp"

namespace actnet {

// Deterministic xoshiro256++ stream, seeded through splitmix64. The
// algorithm is fixed permanently: a given seed plus a given call sequence
// reproduces the same outputs on every run. Uniform draws are pure bit
// manipulation; normal draws go through polar Box-Muller (sqrt/log), so
// they are bit-stable per platform libm.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0,1), 53-bit resolution.
  double next_double();

  double uniform(double lo, double hi);

  // N(mean, std^2); std must be >= 0.
  double normal(double mean = 0.0, double std = 1.0);

  // Derived generator for an independent substream. Deterministic in
  // (parent seed, stream id); used to give worker chunks their own streams.
  Rng child(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// n i.i.d. N(mean, std^2) draws. std < 0 raises ArgumentError.
Vector sample_normal(Rng& rng, std::size_t n, double mean, double std);

// n points uniform in the axis-aligned box [lo, hi]; returned as an
// n x dim row-major matrix (one point per row). Requires lo[i] <= hi[i].
Matrix sample_uniform_box(Rng& rng, std::size_t n, const Vector& lo, const Vector& hi);

}  // namespace actnet
