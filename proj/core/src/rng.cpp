#include "deletia/rng.hpp"

#include "deletia/error.hpp"

namespace deletia {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::mt19937_64 make_engine(std::uint64_t seed) {
  std::uint64_t s = seed;
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s)),
                    static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s))};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(make_engine(seed)) {}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  require(bound > 0, Errc::invalid_argument, "uniform bound must be positive");
  if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

double Rng::uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::size_t Rng::categorical(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  require(total > 0.0, Errc::all_zero_weights, "categorical weights sum to zero");
  double r = uniform_real() * total;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_positive = i;
    if (r < weights[i]) return i;
    r -= weights[i];
  }
  return last_positive;
}

Rng Rng::split(std::uint64_t stream) const {
  std::uint64_t s = seed_ ^ (stream * 0xD1B54A32D192ED03ULL);
  splitmix64(s);
  return Rng(splitmix64(s));
}

}  // namespace deletia
