#include "deletia/games/adversary.hpp"

#include <cmath>

#include "deletia/error.hpp"

namespace deletia::games {

qsim::QState fiber_reference(const Challenge& ch) {
  const auto& h = *ch.h;
  qsim::RegisterLayout layout{h.domain().segment("X")};
  std::vector<qsim::Amplitude> amps(layout.dimension());
  bool any = false;
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    if (!h.in_domain(x) || h.eval(x) != ch.y) continue;
    amps[x] = ch.amplitudes ? (*ch.amplitudes)[x] : 1.0;
    any = any || amps[x] != qsim::Amplitude{};
  }
  require(any, Errc::empty_preimage, "fiber reference is empty");
  return qsim::QState(std::move(layout), std::move(amps));
}

namespace {

using qsim::QState;

std::shared_ptr<const QState> share(QState s) { return std::make_shared<const QState>(std::move(s)); }

// ---------------------------------------------------------------- distinguishers

class RandomGuesser final : public Distinguisher {
 public:
  std::string name() const override { return "random-guesser"; }
  double accept_probability(const Challenge&, const QState&, std::string_view, std::int64_t) const override {
    return 0.5;
  }
};

/// Projects X onto the uncollapsed fiber state; answers 1 on failure.
class OverlapProjector final : public Distinguisher {
 public:
  std::string name() const override { return "overlap-projector"; }
  double accept_probability(const Challenge& ch, const QState& joint, std::string_view x,
                            std::int64_t) const override {
    return std::clamp(1.0 - qsim::projection_probability(joint, x, fiber_reference(ch)), 0.0, 1.0);
  }
};

class MemoReader final : public Distinguisher {
 public:
  std::string name() const override { return "memo-reader"; }
  double accept_probability(const Challenge&, const QState&, std::string_view, std::int64_t memo) const override {
    return memo ? 1.0 : 0.0;
  }
};

/// Swap test between X and a fresh copy of the fiber state; answers 1 when
/// the ancilla reads 1.
class SwapTest final : public Distinguisher {
 public:
  std::string name() const override { return "swap-test"; }
  double accept_probability(const Challenge& ch, const QState& joint, std::string_view x,
                            std::int64_t) const override {
    const auto& xseg = joint.layout().segment(x);
    auto reference = fiber_reference(ch);
    qsim::RegisterLayout ref_layout{qsim::Segment{"__ref", xseg.dims}};
    QState ref(ref_layout, std::vector<qsim::Amplitude>(reference.amplitudes().begin(), reference.amplitudes().end()));
    QState anc(qsim::RegisterLayout{qsim::Segment{"__anc", {2}}});
    auto state = qsim::tensor(qsim::tensor(joint, anc), ref);
    const double s = 1.0 / std::sqrt(2.0);
    const qsim::CMatrix hadamard(2, {s, s, s, -s});
    state = qsim::apply_unitary(std::move(state), "__anc", hadamard);
    const auto& layout = state.layout();
    const auto pa = layout.placement("__anc");
    const auto px = layout.placement(x);
    const auto pr = layout.placement("__ref");
    state = qsim::apply_permutation(std::move(state), [&](std::uint64_t i) {
      if (pa.extract(i) == 0) return i;
      const auto a = px.extract(i), b = pr.extract(i);
      return pr.replace(px.replace(i, b), a);
    });
    state = qsim::apply_unitary(std::move(state), "__anc", hadamard);
    return qsim::outcome_probabilities(state, "__anc")[1];
  }
};

// ---------------------------------------------------------------- deleters

class HonestDeleter final : public Deleter {
 public:
  std::string name() const override { return "honest-deleter"; }
  std::vector<DeletionBranch> act(const Challenge&, const QState& joint, std::string_view x) const override {
    std::vector<DeletionBranch> out;
    for (auto& b : qsim::measurement_branches(joint, x))
      out.push_back({b.value, b.probability, share(std::move(b.post_state)), 0});
    return out;
  }
};

/// Projects X onto the fiber state, remembers the outcome and certifies
/// with a preimage found by enumeration.
class OverlapDeleter final : public Deleter {
 public:
  std::string name() const override { return "overlap-projector"; }
  std::vector<DeletionBranch> act(const Challenge& ch, const QState& joint, std::string_view x) const override {
    const auto reference = fiber_reference(ch);
    std::uint64_t cert = 0;
    for (std::uint64_t i = 0; i < reference.dimension(); ++i)
      if (reference.amplitude(i) != qsim::Amplitude{}) {
        cert = i;
        break;
      }
    std::vector<DeletionBranch> out;
    const double p = qsim::projection_probability(joint, x, reference);
    if (p >= qsim::kMinProjection) {
      auto r = qsim::project(joint, x, reference);
      out.push_back({cert, r.probability, share(std::move(r.post_state)), 0});
    }
    if (1.0 - p >= qsim::kMinProjection) {
      auto r = qsim::project_complement(joint, x, reference);
      out.push_back({cert, r.probability, share(std::move(r.post_state)), 1});
    }
    return out;
  }
};

/// Leaves the state alone and submits a non-preimage.
class GarbageCertifier final : public Deleter {
 public:
  std::string name() const override { return "garbage-certifier"; }
  std::vector<DeletionBranch> act(const Challenge& ch, const QState& joint, std::string_view) const override {
    const auto& h = *ch.h;
    std::uint64_t cert = h.domain().size();
    for (std::uint64_t x = 0; x < h.domain().size(); ++x)
      if (h.eval(x) != ch.y) {
        cert = x;
        break;
      }
    return {{cert, 1.0, share(joint), 0}};
  }
};

/// Leaves the state alone and submits a uniformly random true preimage.
class BruteForceInverter final : public Deleter {
 public:
  std::string name() const override { return "brute-force-inverter"; }
  std::vector<DeletionBranch> act(const Challenge& ch, const QState& joint, std::string_view) const override {
    const auto& h = *ch.h;
    std::vector<std::uint64_t> fiber;
    for (std::uint64_t x = 0; x < h.domain().size(); ++x)
      if (h.in_domain(x) && h.eval(x) == ch.y) fiber.push_back(x);
    require(!fiber.empty(), Errc::empty_preimage, "no preimage to submit");
    const auto shared = share(joint);
    std::vector<DeletionBranch> out;
    for (auto x : fiber) out.push_back({x, 1.0 / static_cast<double>(fiber.size()), shared, 0});
    return out;
  }
};

/// Leaves the state alone and submits a uniformly random domain element.
class PreimageGuesser final : public Deleter {
 public:
  std::string name() const override { return "preimage-guesser"; }
  std::vector<DeletionBranch> act(const Challenge& ch, const QState& joint, std::string_view) const override {
    const auto n = ch.h->domain().size();
    const auto shared = share(joint);
    std::vector<DeletionBranch> out;
    for (std::uint64_t x = 0; x < n; ++x) out.push_back({x, 1.0 / static_cast<double>(n), shared, 0});
    return out;
  }
};

}  // namespace

std::shared_ptr<const Distinguisher> make_distinguisher(std::string_view name) {
  if (name == "random-guesser") return std::make_shared<RandomGuesser>();
  if (name == "overlap-projector") return std::make_shared<OverlapProjector>();
  if (name == "swap-test") return std::make_shared<SwapTest>();
  if (name == "memo-reader") return std::make_shared<MemoReader>();
  throw Error(Errc::config, "unknown distinguisher '" + std::string(name) + "'");
}

std::vector<std::string> distinguisher_names() { return {"random-guesser", "overlap-projector", "swap-test"}; }

AdversaryPair make_adversary_pair(std::string_view name) {
  const auto overlap = std::make_shared<OverlapProjector>();
  if (name == "honest-deleter") return {"honest-deleter", std::make_shared<HonestDeleter>(), overlap};
  if (name == "overlap-projector")
    return {"overlap-projector", std::make_shared<OverlapDeleter>(), std::make_shared<MemoReader>()};
  if (name == "garbage-certifier") return {"garbage-certifier", std::make_shared<GarbageCertifier>(), overlap};
  if (name == "brute-force-inverter")
    return {"brute-force-inverter", std::make_shared<BruteForceInverter>(), overlap};
  if (name == "preimage-guesser") return {"preimage-guesser", std::make_shared<PreimageGuesser>(), overlap};
  if (name == "random-guesser")
    return {"random-guesser", std::make_shared<HonestDeleter>(), std::make_shared<RandomGuesser>()};
  throw Error(Errc::config, "unknown adversary '" + std::string(name) + "'");
}

std::vector<std::string> adversary_pair_names() {
  return {"honest-deleter", "overlap-projector", "garbage-certifier", "brute-force-inverter", "preimage-guesser",
          "random-guesser"};
}

}  // namespace deletia::games
