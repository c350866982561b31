#include "deletia/pvd/commitment.hpp"

#include <cmath>

#include "deletia/error.hpp"

namespace deletia::pvd {

qsim::QState signed_fiber_state(const hash::HashFunction& h, const hash::Fiber& fiber, int bit) {
  require(!fiber.points.empty(), Errc::empty_preimage, "empty fiber");
  qsim::RegisterLayout layout{h.domain().segment("X")};
  std::vector<qsim::Amplitude> amps(layout.dimension());
  for (auto x : fiber.points) amps[x] = (bit && h.predicate(x)) ? -1.0 : 1.0;
  return qsim::QState(std::move(layout), std::move(amps));
}

qsim::QState signed_fiber_state(const hash::HashFunction& h, std::uint64_t y, int bit) {
  hash::Fiber fiber;
  for (std::uint64_t x = 0; x < h.domain().size(); ++x)
    if (h.in_domain(x) && h.eval(x) == y) fiber.points.push_back(x);
  return signed_fiber_state(h, fiber, bit);
}

double block_overlap(const hash::HashFunction& h, std::uint64_t y) {
  return qsim::inner_product(signed_fiber_state(h, y, 1), signed_fiber_state(h, y, 0)).real();
}

CommitmentPair commit(const hash::HashPtr& h, int bit, std::size_t reps, Rng& rng) {
  require(bit == 0 || bit == 1, Errc::invalid_argument, "committed value must be a bit");
  require(reps >= 1, Errc::invalid_argument, "need at least one block");
  require(h->has_predicate() && h->predicate_bits() == 1, Errc::missing_predicate, "commitment needs binary M");
  CommitmentPair pair{{h, {}}, {}, bit};
  qsim::RegisterLayout layout{h->domain().segment("X"), h->range().segment("Y")};
  std::vector<double> uniform(h->domain().size(), 0.0);
  for (std::uint64_t x = 0; x < uniform.size(); ++x) uniform[x] = h->in_domain(x) ? 1.0 : 0.0;
  for (std::size_t i = 0; i < reps; ++i) {
    auto state = qsim::prepare_weighted(layout, "X", uniform);
    if (bit) state = qsim::apply_diagonal(std::move(state), "X", [&](std::uint64_t x) -> qsim::Amplitude {
      return h->in_domain(x) && h->predicate(x) ? -1.0 : 1.0;
    });
    state = qsim::apply_classical(std::move(state), "X", "Y", [&](std::uint64_t x) { return h->eval(x); });
    auto outcome = qsim::measure(state, "Y", rng);
    pair.vk.ys.push_back(outcome.value);
    pair.blocks.push_back(qsim::remove_segment(outcome.post_state, "Y"));
  }
  return pair;
}

CommitmentPair commit(const hash::HashFamily& family, int bit, std::size_t reps, Rng& rng) {
  return commit(family.sample(rng).h, bit, reps, rng);
}

double open_probability(const CommitmentPair& pair, int bit) {
  double p = 1.0;
  for (std::size_t i = 0; i < pair.blocks.size(); ++i)
    p *= qsim::fidelity(signed_fiber_state(*pair.vk.h, pair.vk.ys[i], bit), pair.blocks[i]);
  return p;
}

bool open_verify(const CommitmentPair& pair, int bit, Rng& rng) {
  for (std::size_t i = 0; i < pair.blocks.size(); ++i)
    if (!rng.bernoulli(qsim::fidelity(signed_fiber_state(*pair.vk.h, pair.vk.ys[i], bit), pair.blocks[i])))
      return false;
  return true;
}

double cross_open_bound(const CommitmentPair& pair) {
  double p = 1.0;
  for (auto y : pair.vk.ys) {
    std::uint64_t a0 = 0, a1 = 0;
    for (std::uint64_t x = 0; x < pair.vk.h->domain().size(); ++x)
      if (pair.vk.h->in_domain(x) && pair.vk.h->eval(x) == y) (pair.vk.h->predicate(x) ? a1 : a0)++;
    const double r = (static_cast<double>(a0) - static_cast<double>(a1)) / static_cast<double>(a0 + a1);
    p *= r * r;
  }
  return p;
}

std::vector<std::uint64_t> commit_delete(CommitmentPair pair, Rng& rng) {
  std::vector<std::uint64_t> cert;
  for (const auto& block : pair.blocks) cert.push_back(qsim::measure(block, "X", rng).value);
  return cert;
}

bool commit_ver(const CommitmentKey& vk, const std::vector<std::uint64_t>& cert) {
  if (cert.size() != vk.ys.size() || cert.empty()) return false;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    if (cert[i] >= vk.h->domain().size() || !vk.h->in_domain(cert[i])) return false;
    if (vk.h->eval(cert[i]) != vk.ys[i]) return false;
  }
  return true;
}

qsim::DensityOp deletion_view(const qsim::QState& block) {
  const auto probs = qsim::outcome_probabilities(block, "X");
  qsim::CMatrix rho(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) rho(i, i) = probs[i];
  return qsim::DensityOp(block.layout(), std::move(rho));
}

}  // namespace deletia::pvd
