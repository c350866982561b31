#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deletia/hash/family.hpp"
#include "deletia/qsim/state.hpp"
#include "deletia/zq.hpp"

namespace deletia::games {

/// What the challenger hands the adversary besides quantum registers.
struct Challenge {
  const hash::HashFunction* h = nullptr;
  std::uint64_t y = 0;
  /// Unnormalized sampling amplitudes sqrt(D(x)) over the domain.
  const std::vector<double>* amplitudes = nullptr;
  /// Auxiliary leak Z(aux), if the experiment variant provides one.
  const hash::Trapdoor* aux = nullptr;
  /// Released after a valid certificate in the Gaussian-collapsing game.
  std::optional<zq::ZqVector> released;
};

/// Normalized D-weighted superposition over h^{-1}(y) on segment "X".
qsim::QState fiber_reference(const Challenge& ch);

/// Channel ending in a single output bit. Implementations only touch the
/// segment named `x` of the joint state.
class Distinguisher {
 public:
  virtual ~Distinguisher() = default;
  virtual std::string name() const = 0;
  /// Pr[output 1]. `memo` is classical state forwarded by a first stage.
  virtual double accept_probability(const Challenge& ch, const qsim::QState& joint, std::string_view x,
                                    std::int64_t memo) const = 0;
};

struct DeletionBranch {
  std::uint64_t certificate;
  double probability;
  std::shared_ptr<const qsim::QState> joint;  ///< normalized residual joint state
  std::int64_t memo = 0;
};

/// First stage A0: produces a certificate, leaves a residual state.
class Deleter {
 public:
  virtual ~Deleter() = default;
  virtual std::string name() const = 0;
  /// All branches of the deleter's channel with their probabilities.
  virtual std::vector<DeletionBranch> act(const Challenge& ch, const qsim::QState& joint,
                                          std::string_view x) const = 0;
};

struct AdversaryPair {
  std::string name;
  std::shared_ptr<const Deleter> deleter;
  std::shared_ptr<const Distinguisher> distinguisher;
};

/// Single-stage adversaries: random-guesser, overlap-projector, swap-test.
std::shared_ptr<const Distinguisher> make_distinguisher(std::string_view name);
std::vector<std::string> distinguisher_names();

/// Two-stage adversaries: honest-deleter, overlap-projector,
/// garbage-certifier, brute-force-inverter, preimage-guesser, random-guesser.
AdversaryPair make_adversary_pair(std::string_view name);
std::vector<std::string> adversary_pair_names();

}  // namespace deletia::games
