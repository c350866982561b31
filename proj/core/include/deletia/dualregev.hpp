#pragma once

#include <nlohmann/json.hpp>

#include "deletia/gaussian.hpp"
#include "deletia/qsim/state.hpp"
#include "deletia/rng.hpp"
#include "deletia/zq.hpp"

namespace deletia::dualregev {

struct Params {
  std::size_t n = 1;
  std::size_t m = 2;
  zq::Modulus q = 31;
  double sigma = 5.5;

  double alpha() const noexcept { return 1.0 / sigma; }
  std::size_t slots() const noexcept { return m + 1; }
  /// sqrt(m+1) / (sqrt(2) alpha)
  double certificate_bound() const;
  zq::GaussianParams gaussian() const { return {sigma, q, m + 1}; }
  /// Throws invalid-argument / state-too-large for unusable parameters.
  void check() const;

  nlohmann::json to_json() const;
};

struct Keys {
  zq::ZqMatrix pk;  ///< A = [A_bar | A_bar x_bar], n x (m+1)
  zq::ZqVector sk;  ///< (-x_bar, 1)
  Params params;
};

struct VerificationKey {
  zq::ZqMatrix a;
  zq::ZqVector y;

  nlohmann::json to_json() const;
};

struct Ciphertext {
  VerificationKey vk;
  qsim::QState state;  ///< segment "X" of m+1 q-ary slots
};

/// Gaussian superposition over Z_q^cols, A applied into a fresh register,
/// image measured. Returns the coset state on `segment` and the image.
struct CosetSample {
  qsim::QState state;
  zq::ZqVector image;
};
CosetSample gen_gauss(const zq::ZqMatrix& a, double sigma, Rng& rng, const std::string& segment = "X");

/// Encryption core shared with the FHE columns: coset state for A, phase
/// omega^{<x, offset>}, inverse Fourier transform.
CosetSample dual_state(const zq::ZqMatrix& a, double sigma, const zq::ZqVector& offset, Rng& rng);

/// (0, ..., 0, floor(q/2)) of length m+1.
zq::ZqVector message_offset(const Params& params);

Keys keygen(const Params& params, Rng& rng);
Ciphertext encrypt(const zq::ZqMatrix& pk, const Params& params, int bit, Rng& rng);
inline Ciphertext encrypt(const Keys& keys, int bit, Rng& rng) { return encrypt(keys.pk, keys.params, bit, rng); }
/// Measures the ciphertext and rounds <c, sk>.
int decrypt(const Keys& keys, Ciphertext ct, Rng& rng);
/// Fourier-basis measurement of the ciphertext; returns the certificate.
zq::ZqVector delete_ciphertext(Ciphertext ct, Rng& rng);
bool verify(const VerificationKey& vk, const zq::ZqVector& pi, const Params& params);

/// 0 iff |centered(value)| < q/4; a tie at exactly q/4 decodes to 1.
int round_bit(std::int64_t value, zq::Modulus q);
int decode(const zq::ZqVector& c, const zq::ZqVector& sk);

/// Exact Pr[decrypt(ct) == bit].
double decrypt_probability(const Keys& keys, const Ciphertext& ct, int bit);
/// Exact outcome distribution of delete_ciphertext, indexed by encode_index.
std::vector<double> certificate_distribution(const Ciphertext& ct);
/// Exact Pr[verify(vk, delete_ciphertext(ct))].
double verify_probability(const Ciphertext& ct, const Params& params);

}  // namespace deletia::dualregev
