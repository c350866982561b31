#include "deletia/hash/tcr.hpp"

#include <cmath>

#include "deletia/error.hpp"

namespace deletia::hash {

nlohmann::json TcrTranscript::to_json() const {
  return {{"seed", seed}, {"y", y}, {"v", v}, {"answer", answer}, {"preimage", preimage}, {"win", win},
          {"aux_calls", aux_calls}};
}

namespace {

std::vector<double> domain_weights(const HashFunction& h, std::span<const double> weights) {
  const auto n = h.domain().size();
  std::vector<double> w(n, 0.0);
  if (weights.empty()) {
    for (std::uint64_t x = 0; x < n; ++x) w[x] = h.in_domain(x) ? 1.0 : 0.0;
  } else {
    require(weights.size() == n, Errc::dimension_mismatch, "weights must cover the domain");
    for (std::uint64_t x = 0; x < n; ++x) w[x] = h.in_domain(x) ? weights[x] : 0.0;
  }
  return w;
}

}  // namespace

TcrTranscript tcr_game(const SampledHash& key, const TcrAdversary& adversary, Rng& rng, std::span<const double> weights,
                       const AuxLeak* leak) {
  const auto& h = *key.h;
  TcrTranscript tr;
  tr.seed = rng.seed();

  // Amplitudes are square roots of the sampling weights.
  auto w = domain_weights(h, weights);
  for (auto& x : w) x = std::sqrt(x);
  qsim::RegisterLayout layout{h.domain().segment("X"), h.range().segment("Y")};
  auto state = qsim::prepare_weighted(layout, "X", w);
  state = qsim::apply_classical(std::move(state), "X", "Y", [&](std::uint64_t x) { return h.eval(x); });
  auto ym = qsim::measure(state, "Y", rng);
  tr.y = ym.value;
  auto x_only = qsim::remove_segment(ym.post_state, "Y");

  qsim::QState x_register = x_only;
  if (h.has_predicate()) {
    const qsim::Segment v_seg{"V", {static_cast<std::size_t>(measurement_outcomes(h))}};
    auto joint = qsim::tensor(x_only, qsim::QState(qsim::RegisterLayout{v_seg}));
    joint = qsim::apply_classical(std::move(joint), "X", "V", [&](std::uint64_t x) { return h.predicate(x); });
    auto vm = qsim::measure(joint, "V", rng);
    tr.v = vm.value;
    x_register = qsim::remove_segment(vm.post_state, "V");
  } else {
    // Identity M: writing x into V and measuring V is measuring X.
    auto vm = qsim::measure(x_only, "X", rng);
    tr.v = vm.value;
    x_register = std::move(vm.post_state);
  }

  std::optional<AuxOracle> oracle;
  if (leak) {
    oracle = [&]() -> std::optional<Trapdoor> {
      require(tr.aux_calls == 0, Errc::aux_failure, "aux oracle may be queried once per game");
      ++tr.aux_calls;
      return (*leak)(key);
    };
  }
  tr.answer = adversary.respond(h, tr.y, x_register, rng, oracle ? &*oracle : nullptr);
  tr.preimage = tr.answer < h.domain().size() && h.in_domain(tr.answer) && h.eval(tr.answer) == tr.y;
  tr.win = tr.preimage && measurement_value(h, tr.answer) != tr.v;
  return tr;
}

TcrTranscript tcr_game(const HashFamily& family, const TcrAdversary& adversary, Rng& rng,
                       std::span<const double> weights, const AuxLeak* leak) {
  const auto key = family.sample(rng);
  return tcr_game(key, adversary, rng, weights, leak);
}

namespace {

class HonestTcr final : public TcrAdversary {
 public:
  std::string name() const override { return "honest"; }
  std::uint64_t respond(const HashFunction&, std::uint64_t, const qsim::QState& x, Rng& rng,
                        const AuxOracle*) const override {
    return qsim::measure(x, "X", rng).value;
  }
};

class BruteForceTcr final : public TcrAdversary {
 public:
  std::string name() const override { return "brute-force"; }
  std::uint64_t respond(const HashFunction& h, std::uint64_t y, const qsim::QState&, Rng& rng,
                        const AuxOracle*) const override {
    const FiberTable table(h);
    const auto* fiber = table.find(y);
    require(fiber != nullptr, Errc::empty_preimage, "image has no preimage");
    return fiber->points[rng.uniform(fiber->points.size())];
  }
};

class NonPreimageTcr final : public TcrAdversary {
 public:
  std::string name() const override { return "non-preimage"; }
  std::uint64_t respond(const HashFunction& h, std::uint64_t y, const qsim::QState&, Rng&,
                        const AuxOracle*) const override {
    for (std::uint64_t x = 0; x < h.domain().size(); ++x)
      if (h.in_domain(x) && h.eval(x) != y) return x;
    return h.domain().size();  // outside the domain: never a preimage
  }
};

class TrapdoorTcr final : public TcrAdversary {
 public:
  std::string name() const override { return "trapdoor-inverter"; }
  std::uint64_t respond(const HashFunction& h, std::uint64_t y, const qsim::QState& x, Rng& rng,
                        const AuxOracle* aux) const override {
    const auto seen = qsim::measure(x, "X", rng).value;
    if (aux == nullptr) return seen;
    const auto td = (*aux)();
    if (!td) return seen;
    const auto own = measurement_value(h, seen);
    for (auto cand : h.invert(*td, y))
      if (measurement_value(h, cand) != own) return cand;
    return seen;
  }
};

}  // namespace

std::unique_ptr<TcrAdversary> make_honest_tcr_adversary() { return std::make_unique<HonestTcr>(); }
std::unique_ptr<TcrAdversary> make_brute_force_tcr_adversary() { return std::make_unique<BruteForceTcr>(); }
std::unique_ptr<TcrAdversary> make_non_preimage_tcr_adversary() { return std::make_unique<NonPreimageTcr>(); }
std::unique_ptr<TcrAdversary> make_trapdoor_tcr_adversary() { return std::make_unique<TrapdoorTcr>(); }

}  // namespace deletia::hash
