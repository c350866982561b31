#include "deletia/hash/balance.hpp"

#include <algorithm>
#include <cmath>

#include "deletia/error.hpp"

namespace deletia::hash {

nlohmann::json BalanceReport::to_json() const {
  return {{"delta_hat", delta_hat}, {"delta", delta}, {"fraction_ok", fraction_ok}, {"max_ratio", max_ratio},
          {"samples", samples}};
}

double fiber_ratio(std::uint64_t count0, std::uint64_t count1) {
  const auto total = count0 + count1;
  if (total == 0) return 0.0;
  const auto diff = count0 > count1 ? count0 - count1 : count1 - count0;
  return static_cast<double>(diff) / static_cast<double>(total);
}

double estimate_delta(std::vector<double> ratios) {
  if (ratios.empty()) return 0.0;
  std::sort(ratios.begin(), ratios.end());
  const auto rank = static_cast<std::size_t>(std::ceil(0.995 * static_cast<double>(ratios.size())));
  const double pct = ratios[std::clamp<std::size_t>(rank, 1, ratios.size()) - 1];
  return std::clamp(1.0 - pct, 0.0, std::nextafter(1.0, 0.0));
}

BalanceReport balance_estimate(const HashFamily& family, std::optional<double> delta, std::size_t trials, Rng& rng) {
  std::vector<double> ratios;
  ratios.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    auto key = family.sample(rng);
    require(key.h->has_predicate() && key.h->predicate_bits() == 1, Errc::missing_predicate,
            "balance_estimate needs a binary measurement predicate");
    const FiberTable table(*key.h);
    require(table.domain_count() > 0, Errc::invalid_argument, "empty domain");
    // Uniform in-domain x by rejection.
    std::uint64_t x;
    do {
      x = rng.uniform(key.h->domain().size());
    } while (!key.h->in_domain(x));
    const auto* fiber = table.find(key.h->eval(x));
    ratios.push_back(fiber_ratio(fiber->count0, fiber->count1));
  }
  BalanceReport rep;
  rep.samples = trials;
  rep.delta_hat = estimate_delta(ratios);
  rep.delta = delta.value_or(rep.delta_hat);
  std::size_t ok = 0;
  for (double r : ratios) {
    if (r <= 1.0 - rep.delta + 1e-12) ++ok;
    rep.max_ratio = std::max(rep.max_ratio, r);
  }
  rep.fraction_ok = trials ? static_cast<double>(ok) / static_cast<double>(trials) : 1.0;
  return rep;
}

}  // namespace deletia::hash
