#include <gtest/gtest.h>

#include <cmath>

#include "deletia/dualregev.hpp"
#include "deletia/error.hpp"
#include "oracles.hpp"

using namespace deletia;
using namespace deletia::dualregev;

namespace {

oracle::imat to_imat(const zq::ZqMatrix& a) {
  oracle::imat out(a.rows(), std::vector<std::int64_t>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = a.at(r, c);
  return out;
}

std::vector<std::int64_t> to_ivec(const zq::ZqVector& v) { return {v.entries().begin(), v.entries().end()}; }

oracle::cvec to_cvec(const qsim::QState& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

}  // namespace

TEST(DualRegev, KeysSatisfyKernelRelation) {
  Rng rng(1);
  const Params p;
  const auto keys = keygen(p, rng);
  EXPECT_EQ(keys.pk.rows(), 1u);
  EXPECT_EQ(keys.pk.cols(), 3u);
  EXPECT_EQ(keys.pk * keys.sk, zq::ZqVector::zeros(1, 31));
}

TEST(DualRegev, RoundBitBoundary) {
  EXPECT_EQ(round_bit(0, 31), 0);
  EXPECT_EQ(round_bit(7, 31), 0);   // 28 < 31
  EXPECT_EQ(round_bit(8, 31), 1);
  EXPECT_EQ(round_bit(-7, 31), 0);
  EXPECT_EQ(round_bit(15, 31), 1);
  EXPECT_EQ(round_bit(2, 8), 1);  // tie at q/4 decodes to 1
}

TEST(DualRegev, GenGaussProducesCosetState) {
  Rng rng(2);
  const auto a = zq::ZqMatrix::uniform(1, 3, 13, rng);
  const auto sample = gen_gauss(a, 3.0, rng);
  const auto ref = oracle::coset_state(to_imat(a), 13, 3.0, to_ivec(sample.image));
  EXPECT_LT(oracle::pure_trace_distance(to_cvec(sample.state), ref), 1e-12);
}

TEST(DualRegev, CiphertextIsInverseTransformOfPhasedCoset) {
  Rng rng(3);
  const Params p{1, 2, 13, 3.0};
  const auto keys = keygen(p, rng);
  for (int bit : {0, 1}) {
    const auto ct = encrypt(keys, bit, rng);
    auto coset = oracle::coset_state(to_imat(ct.vk.a), p.q, p.sigma, to_ivec(ct.vk.y));
    const auto w = to_ivec(message_offset(p).scaled(bit));
    for (std::uint64_t i = 0; i < coset.size(); ++i) {
      const auto d = oracle::digits(i, p.q, 3);
      std::int64_t k = 0;
      for (int j = 0; j < 3; ++j) k += d[j] * w[j];
      coset[i] *= std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(oracle::mod(k, p.q)) / p.q);
    }
    const auto ref = oracle::dft(coset, p.q, 3, -1);
    const auto f = std::norm(oracle::dot(oracle::normalized(to_cvec(ct.state)), oracle::normalized(ref)));
    EXPECT_NEAR(f, 1.0, 1e-12);
  }
}

TEST(DualRegev, ExactCorrectnessAndVerification) {
  Rng rng(4);
  const Params p;
  const auto keys = keygen(p, rng);
  for (int rep = 0; rep < 4; ++rep)
    for (int bit : {0, 1}) {
      const auto ct = encrypt(keys, bit, rng);
      EXPECT_GE(decrypt_probability(keys, ct, bit), 0.9);
      EXPECT_NEAR(decrypt_probability(keys, ct, 0) + decrypt_probability(keys, ct, 1), 1.0, 1e-10);
      EXPECT_GE(verify_probability(ct, p), 0.99);
    }
}

TEST(DualRegev, CertificateDistributionHidesTheBit) {
  const Params p;
  Rng kr(5);
  const auto keys = keygen(p, kr);
  Rng r0(99), r1(99);
  const auto c0 = encrypt(keys, 0, r0);
  const auto c1 = encrypt(keys, 1, r1);
  ASSERT_EQ(c0.vk.y, c1.vk.y);
  const auto d0 = certificate_distribution(c0), d1 = certificate_distribution(c1);
  double tv = 0;
  for (std::size_t i = 0; i < d0.size(); ++i) tv += std::abs(d0[i] - d1[i]);
  EXPECT_LT(tv / 2, 1e-10);
}

TEST(DualRegev, SampledRoundTrip) {
  Rng rng(6);
  const Params p;
  const auto keys = keygen(p, rng);
  int ok = 0, verified = 0;
  for (int i = 0; i < 40; ++i) {
    const int bit = i % 2;
    auto ct = encrypt(keys, bit, rng);
    ok += decrypt(keys, ct, rng) == bit;
    const auto vk = ct.vk;
    const auto cert = delete_ciphertext(std::move(ct), rng);
    verified += verify(vk, cert, p);
  }
  EXPECT_GE(ok, 36);
  EXPECT_GE(verified, 39);
}

TEST(DualRegev, VerifyRejectsWrongShapeOrLongVector) {
  Rng rng(7);
  const Params p;
  const auto keys = keygen(p, rng);
  const auto ct = encrypt(keys, 0, rng);
  EXPECT_FALSE(verify(ct.vk, zq::ZqVector::zeros(2, 31), p));
  // A kernel vector plus a long offset fails the norm check.
  auto far = zq::ZqVector::zeros(3, 31);
  far.set(0, 15);
  far.set(1, 15);
  far.set(2, 15);
  EXPECT_FALSE(verify(ct.vk, far, p));
}

TEST(DualRegev, ParameterChecks) {
  Params p;
  p.q = 32;
  EXPECT_THROW(p.check(), Error);
  Params big;
  big.q = 1021;
  big.m = 3;
  EXPECT_THROW(big.check(), Error);
  EXPECT_NEAR(Params{}.certificate_bound(), std::sqrt(3.0) * 5.5 / std::sqrt(2.0), 1e-12);
}
