#include "actnet/core/rng.hpp"

#include <cmath>

namespace actnet {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
  std::uint64_t x = seed;
  for (auto& s : s_) s = splitmix64(x);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

double Rng::normal(double mean, double std) {
  if (std < 0.0) throw ArgumentError("normal: std must be >= 0");
  if (has_spare_) {
    has_spare_ = false;
    return mean + std * spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return mean + std * (u * f);
}

Rng Rng::child(std::uint64_t stream) const {
  // Mix the stream id into a fresh seed so substreams do not overlap the
  // parent sequence for any practical draw count.
  std::uint64_t x = seed_ ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL);
  return Rng(splitmix64(x));
}

Vector sample_normal(Rng& rng, std::size_t n, double mean, double std) {
  if (std < 0.0) throw ArgumentError("sample_normal: std must be >= 0");
  Vector out(n);
  for (auto& x : out) x = rng.normal(mean, std);
  return out;
}

Matrix sample_uniform_box(Rng& rng, std::size_t n, const Vector& lo, const Vector& hi) {
  if (lo.size() != hi.size()) throw DimensionError("sample_uniform_box: lo/hi length mismatch");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) throw ArgumentError("sample_uniform_box: lo > hi in coordinate " + std::to_string(i));
  }
  const int d = static_cast<int>(lo.size());
  Matrix pts(static_cast<int>(n), d);
  for (std::size_t i = 0; i < n; ++i) {
    double* p = pts.row(static_cast<int>(i));
    for (int j = 0; j < d; ++j) p[j] = rng.uniform(lo[j], hi[j]);
  }
  return pts;
}

}  // namespace actnet
