#pragma once

#include <array>

#include <nlohmann/json.hpp>

#include "deletia/games/experiments.hpp"

namespace deletia::games {

/// Exact acceptance probabilities for the four hybrids.
struct LadderReport {
  std::array<double, 4> accept0{};  ///< Pr[Exp_i(0) = 1]
  std::array<double, 4> accept1{};  ///< Pr[Exp_i(1) = 1]
  /// Pr[phase projection on C succeeds | valid certificate], hybrids 2 and 3.
  std::array<double, 2> projection_success{};

  double advantage(std::size_t level) const;
  nlohmann::json to_json() const;
};

/// Pr[Exp_level(b) = 1]; level 0 is the certified-everlasting experiment.
/// Requires the measurement M[h] to fit in at most 12 bits.
double ladder_accept(const std::vector<GameKey>& pool, const AdversaryPair& adv, int level, int b,
                     double* projection_success = nullptr);

LadderReport hybrid_ladder(const std::vector<GameKey>& pool, const AdversaryPair& adv);

}  // namespace deletia::games
