#pragma once

#include <vector>

#include "deletia/hash/family.hpp"
#include "deletia/qsim/density.hpp"
#include "deletia/qsim/state.hpp"

namespace deletia::pvd {

/// Normalized sum over h^{-1}(y) of (-1)^{b M[h](x)} |x>, on segment "X".
qsim::QState signed_fiber_state(const hash::HashFunction& h, const hash::Fiber& fiber, int bit);
qsim::QState signed_fiber_state(const hash::HashFunction& h, std::uint64_t y, int bit);

/// <psi_{y,1} | psi_{y,0}> from the two signed states.
double block_overlap(const hash::HashFunction& h, std::uint64_t y);

/// Receiver's record: the key and the measured images.
struct CommitmentKey {
  hash::HashPtr h;
  std::vector<std::uint64_t> ys;
};

struct CommitmentPair {
  CommitmentKey vk;
  std::vector<qsim::QState> blocks;  ///< committer's preimage registers
  int bit = 0;
};

/// lambda independent signed-fiber blocks for one sampled h.
CommitmentPair commit(const hash::HashPtr& h, int bit, std::size_t reps, Rng& rng);
CommitmentPair commit(const hash::HashFamily& family, int bit, std::size_t reps, Rng& rng);

/// Probability that opening `pair` as `bit` is accepted: the receiver
/// inverts the honest preparation and checks for all-zeros.
double open_probability(const CommitmentPair& pair, int bit);
bool open_verify(const CommitmentPair& pair, int bit, Rng& rng);
/// Product over blocks of ((A0 - A1)/(A0 + A1))^2.
double cross_open_bound(const CommitmentPair& pair);

std::vector<std::uint64_t> commit_delete(CommitmentPair pair, Rng& rng);
bool commit_ver(const CommitmentKey& vk, const std::vector<std::uint64_t>& cert);

/// Distribution of the deletion certificate of one block as a diagonal
/// density operator (the verifier-side view after deletion).
qsim::DensityOp deletion_view(const qsim::QState& block);

}  // namespace deletia::pvd
