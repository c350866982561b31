#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>

#include "deletia/hash/family.hpp"

namespace deletia::hash {

/// Handle to Z(aux): returns the auxiliary leak, callable at most once.
using AuxOracle = std::function<std::optional<Trapdoor>()>;
/// Challenger-side leak function applied to the sampled key.
using AuxLeak = std::function<std::optional<Trapdoor>(const SampledHash&)>;

class TcrAdversary {
 public:
  virtual ~TcrAdversary() = default;
  virtual std::string name() const = 0;
  /// Receives h, y and the X register; returns a candidate preimage.
  virtual std::uint64_t respond(const HashFunction& h, std::uint64_t y, const qsim::QState& x_register, Rng& rng,
                                const AuxOracle* aux) const = 0;
};

struct TcrTranscript {
  std::uint64_t seed = 0;
  std::uint64_t y = 0;
  std::uint64_t v = 0;
  std::uint64_t answer = 0;
  bool preimage = false;
  bool win = false;
  int aux_calls = 0;

  nlohmann::json to_json() const;
};

/// Runs the target-collision game once with the given key. `weights` is
/// the sampling distribution D over the domain (uniform over the domain
/// when empty).
TcrTranscript tcr_game(const SampledHash& key, const TcrAdversary& adversary, Rng& rng,
                       std::span<const double> weights = {}, const AuxLeak* leak = nullptr);
/// Samples the key from the family first.
TcrTranscript tcr_game(const HashFamily& family, const TcrAdversary& adversary, Rng& rng,
                       std::span<const double> weights = {}, const AuxLeak* leak = nullptr);

/// Measures X and returns the outcome (never wins).
std::unique_ptr<TcrAdversary> make_honest_tcr_adversary();
/// Returns a uniformly random element of h^{-1}(y) found by enumeration.
std::unique_ptr<TcrAdversary> make_brute_force_tcr_adversary();
/// Returns some in-domain x with h(x) != y.
std::unique_ptr<TcrAdversary> make_non_preimage_tcr_adversary();
/// Uses the leaked trapdoor to invert y, measures X to learn its
/// predicate value and answers with a preimage on the other side.
std::unique_ptr<TcrAdversary> make_trapdoor_tcr_adversary();

}  // namespace deletia::hash
