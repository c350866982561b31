#include "deletia/dualfhe.hpp"

#include <cmath>

#include "deletia/error.hpp"
#include "deletia/gaussian.hpp"
#include "deletia/hash/ajtai.hpp"

namespace deletia::fhe {

double Params::certificate_bound() const {
  return std::sqrt(static_cast<double>(m + 1)) / (std::sqrt(2.0) * alpha());
}

std::size_t Params::decryption_column() const {
  const int bits = gadget_bits();
  int best = bits - 1;
  for (int j = 0; j < bits; ++j)
    if (std::abs(zq::centered(zq::reduce(std::int64_t{1} << j, q), q)) >
        std::abs(zq::centered(zq::reduce(std::int64_t{1} << best, q), q)))
      best = j;
  return static_cast<std::size_t>(best) * rows() + rows() - 1;
}

double Params::error_width() const { return static_cast<double>(q) / (std::sqrt(2.0) * sigma); }

void Params::check() const {
  require(n >= 1 && m >= 1, Errc::invalid_argument, "need n >= 1 and m >= 1");
  require(zq::is_prime(q), Errc::invalid_argument, "modulus must be prime");
  require(sigma > 0.0, Errc::invalid_argument, "sigma must be positive");
}

nlohmann::json Params::to_json() const {
  return {{"n", n}, {"m", m}, {"q", q}, {"sigma", sigma}, {"L", depth}, {"N", columns()}};
}

nlohmann::json VerificationKey::to_json() const {
  nlohmann::json ys_json = nlohmann::json::array();
  for (const auto& y : ys) ys_json.push_back(zq::serialize(y));
  return {{"a", zq::serialize(a)}, {"y", ys_json}};
}

Keys keygen(const Params& params, Rng& rng) {
  params.check();
  auto key = hash::structured_ajtai_keygen(params.n, params.m + 1, params.q, rng);
  return {key.a.transpose(), std::move(key.kernel), params};
}

QuantumCiphertext encrypt_quantum(const Keys& keys, int bit, Rng& rng) {
  require(bit == 0 || bit == 1, Errc::invalid_argument, "plaintext must be a bit");
  const auto& p = keys.params;
  zq::table_cells(p.q, p.rows() + p.n);
  const auto g = zq::gadget_matrix(p.q, p.rows());
  const auto at = keys.pk.transpose();
  QuantumCiphertext ct{{keys.pk, {}}, {}};
  for (std::size_t j = 0; j < p.columns(); ++j) {
    auto col = dualregev::dual_state(at, p.sigma, g.column(j).scaled(bit), rng);
    ct.vk.ys.push_back(std::move(col.image));
    ct.columns.push_back(std::move(col.state));
  }
  return ct;
}

Ciphertext encrypt_classical(const Keys& keys, int bit, Rng& rng) {
  require(bit == 0 || bit == 1, Errc::invalid_argument, "plaintext must be a bit");
  const auto& p = keys.params;
  const auto cols = p.columns();
  const auto s = zq::ZqMatrix::uniform(p.n, cols, p.q, rng);
  const zq::DiscreteGaussian1D noise(p.error_width(), p.q);
  std::vector<std::int64_t> e(p.rows() * cols);
  for (auto& x : e) x = noise.sample(rng);
  const zq::ZqMatrix err(p.rows(), cols, std::move(e), p.q);
  return {keys.pk * s + err + zq::gadget_matrix(p.q, p.rows()).scaled(bit)};
}

Ciphertext measure_ciphertext(const QuantumCiphertext& ct, Rng& rng) {
  const auto q = ct.vk.a.modulus();
  std::vector<zq::ZqVector> cols;
  for (const auto& column : ct.columns) {
    auto outcome = qsim::measure(column, "X", rng);
    cols.emplace_back(std::vector<std::int64_t>(outcome.digits.begin(), outcome.digits.end()), q);
  }
  return {zq::ZqMatrix::from_columns(cols)};
}

zq::ZqMatrix nand_update(const zq::ZqMatrix& x, const zq::ZqMatrix& y, const zq::ZqMatrix& z) {
  require(x.rows() == y.rows() && x.cols() == y.cols() && z.rows() == x.rows() && z.cols() == x.cols(),
          Errc::dimension_mismatch, "NAND operands must share a shape");
  const auto g = zq::gadget_matrix(x.modulus(), x.rows());
  require(g.cols() == x.cols(), Errc::dimension_mismatch, "ciphertext width != gadget width");
  return z + g - x * zq::gadget_inverse(y);
}

Ciphertext eval_nand(const Ciphertext& c0, const Ciphertext& c1) {
  return {nand_update(c0.c, c1.c, zq::ZqMatrix::zeros(c0.c.rows(), c0.c.cols(), c0.c.modulus()))};
}

int decrypt(const Keys& keys, const Ciphertext& ct) {
  require(ct.c.rows() == keys.params.rows(), Errc::dimension_mismatch, "ciphertext rows != m+1");
  return dualregev::round_bit(ct.c.column(keys.params.decryption_column()).dot(keys.sk), keys.params.q);
}

std::vector<zq::ZqVector> delete_ciphertext(QuantumCiphertext ct, Rng& rng) {
  std::vector<zq::ZqVector> certs;
  const auto at = ct.vk.a.transpose();
  for (std::size_t j = 0; j < ct.columns.size(); ++j) {
    dualregev::Ciphertext column{{at, ct.vk.ys[j]}, std::move(ct.columns[j])};
    certs.push_back(dualregev::delete_ciphertext(std::move(column), rng));
  }
  return certs;
}

bool verify(const VerificationKey& vk, const std::vector<zq::ZqVector>& certs, const Params& params) {
  if (certs.empty() || certs.size() != vk.ys.size()) return false;
  const auto at = vk.a.transpose();
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (certs[i].size() != at.cols() || certs[i].modulus() != at.modulus()) return false;
    if (!zq::isis_verify(at, vk.ys[i], certs[i], params.certificate_bound())) return false;
  }
  return true;
}

int nand_tree_plain(const std::vector<int>& leaves) {
  require(!leaves.empty() && (leaves.size() & (leaves.size() - 1)) == 0, Errc::invalid_argument,
          "NAND tree needs a power-of-two number of leaves");
  std::vector<int> level = leaves;
  while (level.size() > 1) {
    std::vector<int> next;
    for (std::size_t i = 0; i < level.size(); i += 2) next.push_back(1 - level[i] * level[i + 1]);
    level = std::move(next);
  }
  return level.front();
}

Ciphertext nand_tree(const std::vector<Ciphertext>& leaves) {
  require(!leaves.empty() && (leaves.size() & (leaves.size() - 1)) == 0, Errc::invalid_argument,
          "NAND tree needs a power-of-two number of leaves");
  std::vector<Ciphertext> level = leaves;
  while (level.size() > 1) {
    std::vector<Ciphertext> next;
    for (std::size_t i = 0; i < level.size(); i += 2) next.push_back(eval_nand(level[i], level[i + 1]));
    level = std::move(next);
  }
  return level.front();
}

}  // namespace deletia::fhe
