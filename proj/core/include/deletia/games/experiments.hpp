#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "deletia/games/adversary.hpp"
#include "deletia/qsim/density.hpp"
#include "deletia/rng.hpp"

namespace deletia::games {

/// One challenger key together with everything the experiments need to
/// run against it.
struct GameKey {
  hash::HashPtr h;
  /// Unnormalized amplitudes over the domain (zero outside the support).
  std::vector<double> amplitudes;
  /// Certificate check for image y.
  std::function<bool(std::uint64_t y, std::uint64_t cert)> accepts;
  /// Handed to the second stage after a valid certificate.
  std::optional<zq::ZqVector> release;
};

/// Uniform (or sqrt(weights)-shaped) superposition over the in-domain
/// points; certificates must be in-domain preimages.
GameKey toy_key(const hash::SampledHash& key, std::span<const double> weights = {});

struct Branch {
  std::uint64_t value;
  double probability;
  qsim::QState state;
};

/// Challenger steps 1-2: superposition on "X", h into Y, measure Y.
std::vector<Branch> image_branches(const GameKey& key);
/// Sampled variant of the same steps.
Branch sample_image(const GameKey& key, Rng& rng);
/// b = 1 branch of step 3: coherently compute M[h] and measure it.
std::vector<Branch> collapse_branches(const hash::HashFunction& h, const qsim::QState& x_state);
Branch sample_collapse(const hash::HashFunction& h, const qsim::QState& x_state, Rng& rng);

Challenge make_challenge(const GameKey& key, std::uint64_t y);

// ---- target-collapsing

/// Pr[b' = 1] averaged over the key pool.
double tc_accept_exact(const std::vector<GameKey>& pool, const Distinguisher& d, int b);
int tc_trial(const std::vector<GameKey>& pool, const Distinguisher& d, int b, Rng& rng);

// ---- certified-everlasting target-collapsing (and Gaussian-collapsing)

struct EvTrial {
  bool valid = false;
  int guess = 0;
};

struct EvExact {
  double accept = 0.0;       ///< Pr[b' = 1]
  double valid_rate = 0.0;   ///< Pr[certificate accepted]
};

EvExact ev_accept_exact(const std::vector<GameKey>& pool, const AdversaryPair& adv, int b);
EvTrial ev_trial(const std::vector<GameKey>& pool, const AdversaryPair& adv, int b, Rng& rng);

/// Trace distance between the b=0 and b=1 output ensembles: the residual
/// state (with the first stage's memo) on a valid certificate, a fixed
/// bottom state otherwise. Key and image are classical and averaged over.
double ev_output_distance(const std::vector<GameKey>& pool, const AdversaryPair& adv);

}  // namespace deletia::games
