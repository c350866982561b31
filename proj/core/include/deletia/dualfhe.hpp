#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "deletia/dualregev.hpp"
#include "deletia/qsim/state.hpp"
#include "deletia/zq.hpp"

namespace deletia::fhe {

struct Params {
  std::size_t n = 1;
  std::size_t m = 2;
  zq::Modulus q = 31;
  double sigma = 5.5;  ///< Gaussian parameter of the coset states; alpha*q = q/sigma
  std::size_t depth = 1;

  double alpha() const noexcept { return 1.0 / sigma; }
  std::size_t rows() const noexcept { return m + 1; }
  int gadget_bits() const { return zq::gadget_bits(q); }
  /// N = (m+1) * ceil(log2 q)
  std::size_t columns() const { return rows() * static_cast<std::size_t>(gadget_bits()); }
  /// Gadget column of the last row whose power of two is closest to q/2.
  std::size_t decryption_column() const;
  double certificate_bound() const;
  /// Width of the classical error entries, q / (sqrt(2) sigma).
  double error_width() const;
  void check() const;

  nlohmann::json to_json() const;
};

struct Keys {
  zq::ZqMatrix pk;  ///< A = [A_bar | A_bar x_bar]^T, (m+1) x n
  zq::ZqVector sk;  ///< (-x_bar, 1), sk^T A == 0
  Params params;
};

struct VerificationKey {
  zq::ZqMatrix a;                 ///< the public key A
  std::vector<zq::ZqVector> ys;   ///< y_1 .. y_N

  nlohmann::json to_json() const;
};

struct QuantumCiphertext {
  VerificationKey vk;
  std::vector<qsim::QState> columns;  ///< each over segment "X" of m+1 slots
};

/// A classical ciphertext matrix in Z_q^{(m+1) x N}.
struct Ciphertext {
  zq::ZqMatrix c;
};

Keys keygen(const Params& params, Rng& rng);
/// Column j is the dual state for A^T with offset bit*g_j.
QuantumCiphertext encrypt_quantum(const Keys& keys, int bit, Rng& rng);
/// C = A S + E + bit*G with uniform S and Gaussian E.
Ciphertext encrypt_classical(const Keys& keys, int bit, Rng& rng);
/// Measures every column in the computational basis.
Ciphertext measure_ciphertext(const QuantumCiphertext& ct, Rng& rng);

/// G - c0 * G^{-1}(c1)
Ciphertext eval_nand(const Ciphertext& c0, const Ciphertext& c1);
/// Basis map (X, Y, Z) -> (X, Y, Z + G - X G^{-1}(Y)).
zq::ZqMatrix nand_update(const zq::ZqMatrix& x, const zq::ZqMatrix& y, const zq::ZqMatrix& z);

int decrypt(const Keys& keys, const Ciphertext& ct);
std::vector<zq::ZqVector> delete_ciphertext(QuantumCiphertext ct, Rng& rng);
bool verify(const VerificationKey& vk, const std::vector<zq::ZqVector>& certs, const Params& params);

/// Leaves of a complete NAND tree of the given depth, evaluated in the clear.
int nand_tree_plain(const std::vector<int>& leaves);
/// Homomorphic evaluation of the same tree.
Ciphertext nand_tree(const std::vector<Ciphertext>& leaves);

}  // namespace deletia::fhe
