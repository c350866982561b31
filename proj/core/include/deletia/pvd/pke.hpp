#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "deletia/hash/family.hpp"
#include "deletia/pvd/commitment.hpp"

namespace deletia::pvd {

struct PvdKeys {
  hash::HashPtr pk;
  hash::Trapdoor sk;
  std::size_t lambda = 8;
  double p0 = 1.0;        ///< Pr[Recover -> 0] on a b=0 block
  double p1 = 0.0;        ///< Pr[Recover -> 0] on a b=1 block, averaged over images
  double threshold = 0.5; ///< c = (p0 + p1) / 2
  double gap = 0.5;       ///< eps = (p0 - p1) / 2

  nlohmann::json to_json() const;
};

using PvdVerificationKey = CommitmentKey;

struct PvdCiphertext {
  PvdVerificationKey vk;
  std::vector<qsim::QState> blocks;
};

/// Samples (h, td) and calibrates c and eps exactly by fiber enumeration.
PvdKeys pvd_keygen(const hash::HashFamily& family, std::size_t lambda, Rng& rng);
/// Calibration for an already sampled key.
PvdKeys calibrate(hash::HashPtr h, hash::Trapdoor td, std::size_t lambda);

PvdCiphertext pvd_encrypt(const hash::HashPtr& pk, std::size_t lambda, int bit, Rng& rng);
inline PvdCiphertext pvd_encrypt(const PvdKeys& keys, int bit, Rng& rng) {
  return pvd_encrypt(keys.pk, keys.lambda, bit, rng);
}

/// Two-outcome measurement {|psi_{y,0}><psi_{y,0}|, I - ...} using the
/// trapdoor-prepared reference state. Returns 0 on the first outcome.
int recover(const hash::HashFunction& h, const hash::Trapdoor& td, std::uint64_t y, const qsim::QState& block,
            Rng& rng);
double recover_zero_probability(const hash::HashFunction& h, const hash::Trapdoor& td, std::uint64_t y,
                                const qsim::QState& block);

int pvd_decrypt(const PvdKeys& keys, const PvdCiphertext& ct, Rng& rng);
int pvd_decrypt(const PvdKeys& keys, const hash::Trapdoor& td, const PvdCiphertext& ct, Rng& rng);
/// Exact Pr[pvd_decrypt(ct) == 0].
double pvd_decrypt_zero_probability(const PvdKeys& keys, const PvdCiphertext& ct);

std::vector<std::uint64_t> pvd_delete(PvdCiphertext ct, Rng& rng);
bool pvd_verify(const PvdVerificationKey& vk, const std::vector<std::uint64_t>& cert);

}  // namespace deletia::pvd
