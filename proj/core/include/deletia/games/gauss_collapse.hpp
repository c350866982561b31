#pragma once

#include <nlohmann/json.hpp>

#include "deletia/games/experiments.hpp"
#include "deletia/hash/ajtai.hpp"

namespace deletia::games {

struct GaussCollapseParams {
  std::size_t n = 1;
  std::size_t m = 2;
  zq::Modulus q = 13;
  double sigma = 3.0;

  double witness_bound() const;  ///< sigma * sqrt(m/2)
  nlohmann::json to_json() const;
};

/// Amplitudes rho_sigma over all of Z_q^m; witnesses must satisfy
/// A w = y and ||w|| <= sigma sqrt(m/2); the short kernel vector
/// (x_bar, -1) is released after a valid witness.
GameKey gauss_key(const hash::StructuredKey& key, double sigma);
std::vector<GameKey> gauss_pool(const GaussCollapseParams& params, std::uint64_t seed, std::size_t count);

}  // namespace deletia::games
