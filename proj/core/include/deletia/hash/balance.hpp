#pragma once

#include <optional>

#include "deletia/hash/family.hpp"

namespace deletia::hash {

struct BalanceReport {
  double delta_hat = 0.0;    ///< 1 - (99.5th percentile ratio), clamped to [0, 1)
  double delta = 0.0;        ///< threshold fraction_ok was evaluated at
  double fraction_ok = 0.0;  ///< share of samples with ratio <= 1 - delta
  double max_ratio = 0.0;
  std::size_t samples = 0;

  nlohmann::json to_json() const;
};

/// |A0 - A1| / (A0 + A1); zero for an empty fiber.
double fiber_ratio(std::uint64_t count0, std::uint64_t count1);
/// Nearest-rank estimate as described on BalanceReport::delta_hat.
double estimate_delta(std::vector<double> ratios);

/// Samples (h, x) pairs, counts each fiber's M-halves exactly and reports
/// how many satisfy the balance bound. Without `delta` the estimate
/// delta_hat is used as the threshold.
BalanceReport balance_estimate(const HashFamily& family, std::optional<double> delta, std::size_t trials, Rng& rng);

}  // namespace deletia::hash
