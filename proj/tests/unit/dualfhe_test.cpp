#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "deletia/dualfhe.hpp"
#include "deletia/error.hpp"

using namespace deletia;
using namespace deletia::fhe;

namespace {

Params classical_params() {
  Params p;
  p.n = 2;
  p.m = 8;
  p.q = 1073741789;
  p.sigma = static_cast<double>(p.q) / 150.0;
  p.depth = 2;
  return p;
}

}  // namespace

TEST(Fhe, ShapesAndKernel) {
  Rng rng(1);
  const auto p = classical_params();
  EXPECT_EQ(p.columns(), 270u);
  const auto keys = keygen(p, rng);
  EXPECT_EQ(keys.pk.rows(), 9u);
  EXPECT_EQ(keys.pk.cols(), 2u);
  EXPECT_EQ(keys.pk.transpose() * keys.sk, zq::ZqVector::zeros(2, p.q));
}

TEST(Fhe, ClassicalEncryptDecrypt) {
  Rng rng(2);
  const auto keys = keygen(classical_params(), rng);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(decrypt(keys, encrypt_classical(keys, i % 2, rng)), i % 2);
}

TEST(Fhe, NandTruthTable) {
  Rng rng(3);
  const auto keys = keygen(classical_params(), rng);
  for (int a : {0, 1})
    for (int b : {0, 1}) {
      const auto c = eval_nand(encrypt_classical(keys, a, rng), encrypt_classical(keys, b, rng));
      EXPECT_EQ(decrypt(keys, c), 1 - a * b) << a << b;
    }
}

TEST(Fhe, DepthTwoTree) {
  Rng rng(4);
  const auto keys = keygen(classical_params(), rng);
  for (int pattern = 0; pattern < 16; ++pattern) {
    std::vector<int> bits;
    std::vector<Ciphertext> leaves;
    for (int i = 0; i < 4; ++i) {
      bits.push_back((pattern >> i) & 1);
      leaves.push_back(encrypt_classical(keys, bits.back(), rng));
    }
    EXPECT_EQ(decrypt(keys, nand_tree(leaves)), nand_tree_plain(bits));
  }
  EXPECT_THROW(nand_tree_plain({1, 0, 1}), Error);
}

TEST(Fhe, NandUpdateIsZTranslation) {
  // The basis map shifts Z by an amount that depends only on (X, Y), so it
  // permutes every Z-slice; checked on the toy shape d = 1, q = 5, N = 3.
  Rng rng(5);
  const zq::Modulus q = 5;
  for (int rep = 0; rep < 10; ++rep) {
    const auto x = zq::ZqMatrix::uniform(1, 3, q, rng);
    const auto y = zq::ZqMatrix::uniform(1, 3, q, rng);
    std::set<std::vector<std::int64_t>> images;
    const auto shift = nand_update(x, y, zq::ZqMatrix::zeros(1, 3, q));
    for (std::int64_t z = 0; z < 125; ++z) {
      const zq::ZqMatrix zm(1, 3, {z / 25, (z / 5) % 5, z % 5}, q);
      const auto out = nand_update(x, y, zm);
      EXPECT_EQ(out - zm, shift);
      images.insert({out.entries().begin(), out.entries().end()});
    }
    EXPECT_EQ(images.size(), 125u);
  }
  EXPECT_THROW(nand_update(zq::ZqMatrix::zeros(1, 2, q), zq::ZqMatrix::zeros(1, 2, q), zq::ZqMatrix::zeros(1, 2, q)),
               Error);
}

TEST(Fhe, QuantumColumnsDecryptAndDelete) {
  Rng rng(6);
  const Params p;  // n=1, m=2, q=31
  EXPECT_EQ(p.columns(), 15u);
  const auto keys = keygen(p, rng);
  const dualregev::Params drp{p.n, p.m, p.q, p.sigma};
  const dualregev::Keys column_keys{keys.pk.transpose(), keys.sk, drp};
  for (int bit : {0, 1}) {
    auto ct = encrypt_quantum(keys, bit, rng);
    ASSERT_EQ(ct.columns.size(), 15u);
    // The decryption column carries 2^{l-1} = 16 on the last row, so it decodes like a dual-Regev ciphertext.
    const auto col = p.decryption_column();
    ASSERT_EQ(col, 14u);
    const dualregev::Ciphertext last{{column_keys.pk, ct.vk.ys[col]}, ct.columns[col]};
    EXPECT_GE(dualregev::decrypt_probability(column_keys, last, bit), 0.85);
    const auto vk = ct.vk;
    const auto certs = delete_ciphertext(std::move(ct), rng);
    EXPECT_TRUE(verify(vk, certs, p));
    auto tampered = certs;
    tampered.pop_back();
    EXPECT_FALSE(verify(vk, tampered, p));
  }
}

TEST(Fhe, MeasuredQuantumCiphertextIsClassicalShape) {
  Rng rng(7);
  const Params p;
  const auto keys = keygen(p, rng);
  const auto ct = encrypt_quantum(keys, 1, rng);
  const auto c = measure_ciphertext(ct, rng);
  EXPECT_EQ(c.c.rows(), 3u);
  EXPECT_EQ(c.c.cols(), 15u);
}

TEST(Fhe, SmallModulusAtTheNoiseFloor) {
  // q = 4099 sits just above 2^12, so the top gadget power is -3 and decryption
  // must read the 2^11 column. Noise at this size only leaves room for one gate.
  Params p = classical_params();
  p.q = 4099;
  p.sigma = static_cast<double>(p.q) / std::sqrt(8.0 * static_cast<double>(p.rows()));
  EXPECT_EQ(p.decryption_column(), 11u * p.rows() + p.m);
  Rng rng(8);
  const auto keys = keygen(p, rng);
  int fresh = 0, gates = 0;
  for (int rep = 0; rep < 10; ++rep)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const auto ca = encrypt_classical(keys, a, rng);
        fresh += decrypt(keys, ca) == a;
        gates += decrypt(keys, eval_nand(ca, encrypt_classical(keys, b, rng))) == 1 - a * b;
      }
  EXPECT_EQ(fresh, 40);
  EXPECT_EQ(gates, 40);
}
