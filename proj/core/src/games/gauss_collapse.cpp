#include "deletia/games/gauss_collapse.hpp"

#include <cmath>

#include "deletia/error.hpp"
#include "deletia/gaussian.hpp"

namespace deletia::games {

double GaussCollapseParams::witness_bound() const { return sigma * std::sqrt(static_cast<double>(m) / 2.0); }

nlohmann::json GaussCollapseParams::to_json() const {
  return {{"n", n}, {"m", m}, {"q", q}, {"sigma", sigma}, {"witness_bound", witness_bound()}};
}

GameKey gauss_key(const hash::StructuredKey& key, double sigma) {
  const auto m = key.a.cols();
  auto ajtai = std::make_shared<const hash::AjtaiFunction>(key.a, 0.0);
  GameKey out;
  out.h = ajtai;
  out.amplitudes.resize(ajtai->domain().size());
  for (std::uint64_t x = 0; x < out.amplitudes.size(); ++x)
    out.amplitudes[x] = zq::rho_sigma(ajtai->vector_at(x), sigma);
  const double bound = sigma * std::sqrt(static_cast<double>(m) / 2.0);
  out.accepts = [ajtai, bound](std::uint64_t y, std::uint64_t w) {
    if (w >= ajtai->domain().size() || ajtai->eval(w) != y) return false;
    return zq::norm_sq_within(ajtai->vector_at(w).norm_sq(), bound);
  };
  out.release = -key.kernel;
  return out;
}

std::vector<GameKey> gauss_pool(const GaussCollapseParams& params, std::uint64_t seed, std::size_t count) {
  require(params.m >= 2, Errc::invalid_argument, "gauss-collapse needs m >= 2");
  require(zq::is_prime(params.q), Errc::invalid_argument, "gauss-collapse needs a prime modulus");
  zq::table_cells(params.q, params.m);
  std::vector<GameKey> pool;
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = Rng(seed).split(i);
    pool.push_back(gauss_key(hash::structured_ajtai_keygen(params.n, params.m, params.q, rng), params.sigma));
  }
  return pool;
}

}  // namespace deletia::games
