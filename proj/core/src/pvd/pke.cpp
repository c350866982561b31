#include "deletia/pvd/pke.hpp"

#include "deletia/error.hpp"

namespace deletia::pvd {

nlohmann::json PvdKeys::to_json() const {
  return {{"pk", pk->describe()}, {"lambda", lambda}, {"p0", p0}, {"p1", p1}, {"c", threshold}, {"eps", gap}};
}

PvdKeys calibrate(hash::HashPtr h, hash::Trapdoor td, std::size_t lambda) {
  require(h->supports_inversion(), Errc::missing_trapdoor, "family has no trapdoor inversion");
  require(h->has_predicate() && h->predicate_bits() == 1, Errc::missing_predicate, "PKE needs binary M");
  const hash::FiberTable table(*h);
  double p1 = 0.0;
  for (const auto& [y, fiber] : table.fibers()) {
    const double weight = static_cast<double>(fiber.points.size()) / static_cast<double>(table.domain_count());
    const double r = (static_cast<double>(fiber.count0) - static_cast<double>(fiber.count1)) /
                     static_cast<double>(fiber.points.size());
    p1 += weight * r * r;
  }
  PvdKeys keys{std::move(h), std::move(td), lambda, 1.0, p1, 0.0, 0.0};
  keys.threshold = (keys.p0 + keys.p1) / 2.0;
  keys.gap = (keys.p0 - keys.p1) / 2.0;
  return keys;
}

PvdKeys pvd_keygen(const hash::HashFamily& family, std::size_t lambda, Rng& rng) {
  require(lambda >= 1, Errc::invalid_argument, "lambda must be positive");
  auto key = family.sample(rng);
  require(key.trapdoor.has_value(), Errc::missing_trapdoor, "family sampled no trapdoor");
  return calibrate(std::move(key.h), std::move(*key.trapdoor), lambda);
}

PvdCiphertext pvd_encrypt(const hash::HashPtr& pk, std::size_t lambda, int bit, Rng& rng) {
  auto pair = commit(pk, bit, lambda, rng);
  return {std::move(pair.vk), std::move(pair.blocks)};
}

double recover_zero_probability(const hash::HashFunction& h, const hash::Trapdoor& td, std::uint64_t y,
                                const qsim::QState& block) {
  const auto reference = hash::superposition_invert(h, td, y, "X");
  return qsim::projection_probability(block, "X", reference);
}

int recover(const hash::HashFunction& h, const hash::Trapdoor& td, std::uint64_t y, const qsim::QState& block,
            Rng& rng) {
  return rng.bernoulli(recover_zero_probability(h, td, y, block)) ? 0 : 1;
}

int pvd_decrypt(const PvdKeys& keys, const hash::Trapdoor& td, const PvdCiphertext& ct, Rng& rng) {
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < ct.blocks.size(); ++i)
    if (recover(*keys.pk, td, ct.vk.ys[i], ct.blocks[i], rng) == 0) ++zeros;
  const double frac = static_cast<double>(zeros) / static_cast<double>(ct.blocks.size());
  return frac > keys.threshold ? 0 : 1;
}

int pvd_decrypt(const PvdKeys& keys, const PvdCiphertext& ct, Rng& rng) { return pvd_decrypt(keys, keys.sk, ct, rng); }

double pvd_decrypt_zero_probability(const PvdKeys& keys, const PvdCiphertext& ct) {
  // Poisson-binomial distribution of the number of zero outcomes.
  std::vector<double> dist{1.0};
  for (std::size_t i = 0; i < ct.blocks.size(); ++i) {
    const double p = recover_zero_probability(*keys.pk, keys.sk, ct.vk.ys[i], ct.blocks[i]);
    std::vector<double> next(dist.size() + 1, 0.0);
    for (std::size_t k = 0; k < dist.size(); ++k) {
      next[k] += dist[k] * (1.0 - p);
      next[k + 1] += dist[k] * p;
    }
    dist = std::move(next);
  }
  double zero = 0.0;
  const auto lambda = static_cast<double>(ct.blocks.size());
  for (std::size_t k = 0; k < dist.size(); ++k)
    if (static_cast<double>(k) / lambda > keys.threshold) zero += dist[k];
  return zero;
}

std::vector<std::uint64_t> pvd_delete(PvdCiphertext ct, Rng& rng) {
  return commit_delete(CommitmentPair{std::move(ct.vk), std::move(ct.blocks), 0}, rng);
}

bool pvd_verify(const PvdVerificationKey& vk, const std::vector<std::uint64_t>& cert) { return commit_ver(vk, cert); }

}  // namespace deletia::pvd
