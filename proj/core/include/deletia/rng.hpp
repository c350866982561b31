#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace deletia {

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seeded generator used everywhere randomness is consumed.
///
/// Sampling helpers are implemented here rather than through the
/// std distributions so that streams are identical across standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 bits of precision.
  double uniform_real();
  bool bit() { return (next() >> 63) != 0; }
  bool bernoulli(double p) { return uniform_real() < p; }
  /// Index drawn proportionally to the nonnegative weights.
  std::size_t categorical(std::span<const double> weights);

  /// Independent child stream; the same (seed, stream) pair always gives
  /// the same child.
  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace deletia
