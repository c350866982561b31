#include "deletia/dualregev.hpp"

#include <cmath>

#include "deletia/error.hpp"
#include "deletia/hash/ajtai.hpp"

namespace deletia::dualregev {

double Params::certificate_bound() const {
  return std::sqrt(static_cast<double>(m + 1)) / (std::sqrt(2.0) * alpha());
}

void Params::check() const {
  require(n >= 1 && m >= 1, Errc::invalid_argument, "need n >= 1 and m >= 1");
  require(zq::is_prime(q), Errc::invalid_argument, "modulus must be prime");
  require(sigma > 0.0, Errc::invalid_argument, "sigma must be positive");
  zq::table_cells(q, m + 1 + n);
}

nlohmann::json Params::to_json() const { return {{"n", n}, {"m", m}, {"q", q}, {"sigma", sigma}}; }

nlohmann::json VerificationKey::to_json() const { return {{"a", zq::serialize(a)}, {"y", zq::serialize(y)}}; }

CosetSample gen_gauss(const zq::ZqMatrix& a, double sigma, Rng& rng, const std::string& segment) {
  const auto q = a.modulus();
  const auto cols = a.cols(), rows = a.rows();
  const qsim::RegisterLayout layout{qsim::qudits(segment, cols, static_cast<std::size_t>(q))};
  const auto cells = zq::table_cells(q, cols);
  // Walk x in index order keeping its digits, so weights and images need no
  // per-point allocation.
  std::vector<double> weights(cells);
  std::vector<std::uint64_t> images(cells);
  std::vector<std::int64_t> digits(cols, 0);
  for (std::uint64_t x = 0; x < cells; ++x) {
    std::uint64_t norm_sq = 0;
    for (auto d : digits) {
      const auto c = zq::centered(d, q);
      norm_sq += static_cast<std::uint64_t>(c * c);
    }
    weights[x] = zq::rho_sigma_norm_sq(norm_sq, sigma);
    std::uint64_t image = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < cols; ++c) acc = (acc + a.at(r, c) * digits[c]) % q;
      image = image * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(acc);
    }
    images[x] = image;
    for (std::size_t i = cols; i-- > 0;) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
  }
  // Measuring the image register of sum_x rho(x)|x>|Ax> yields y with
  // probability proportional to the fiber's squared weight and leaves the
  // restricted superposition; sample that directly instead of carrying the
  // q^n-times larger joint register.
  std::vector<double> image_mass(static_cast<std::size_t>(zq::table_cells(q, rows)), 0.0);
  for (std::uint64_t x = 0; x < cells; ++x) image_mass[images[x]] += weights[x] * weights[x];
  const auto y = rng.categorical(image_mass);
  for (std::uint64_t x = 0; x < cells; ++x)
    if (images[x] != y) weights[x] = 0.0;
  zq::ZqVector image(zq::decode_index(y, q, rows), q);
  return {qsim::prepare_weighted(layout, segment, weights), std::move(image)};
}

CosetSample dual_state(const zq::ZqMatrix& a, double sigma, const zq::ZqVector& offset, Rng& rng) {
  require(offset.size() == a.cols(), Errc::dimension_mismatch, "offset length != matrix columns");
  auto coset = gen_gauss(a, sigma, rng, "X");
  auto state = qsim::phase_oracle(std::move(coset.state), "X", offset.entries());
  state = qsim::iqft(std::move(state), "X");
  return {std::move(state), std::move(coset.image)};
}

zq::ZqVector message_offset(const Params& params) {
  auto w = zq::ZqVector::zeros(params.m + 1, params.q);
  w.set(params.m, params.q / 2);
  return w;
}

Keys keygen(const Params& params, Rng& rng) {
  params.check();
  auto key = hash::structured_ajtai_keygen(params.n, params.m + 1, params.q, rng);
  return {std::move(key.a), std::move(key.kernel), params};
}

Ciphertext encrypt(const zq::ZqMatrix& pk, const Params& params, int bit, Rng& rng) {
  require(bit == 0 || bit == 1, Errc::invalid_argument, "plaintext must be a bit");
  require(pk.rows() == params.n && pk.cols() == params.m + 1, Errc::dimension_mismatch, "public key shape");
  auto sample = dual_state(pk, params.sigma, message_offset(params).scaled(bit), rng);
  return {{pk, std::move(sample.image)}, std::move(sample.state)};
}

int round_bit(std::int64_t value, zq::Modulus q) {
  const auto c = zq::centered(zq::reduce(value, q), q);
  return 4 * std::llabs(c) < q ? 0 : 1;
}

int decode(const zq::ZqVector& c, const zq::ZqVector& sk) { return round_bit(c.dot(sk), c.modulus()); }

int decrypt(const Keys& keys, Ciphertext ct, Rng& rng) {
  auto outcome = qsim::measure(ct.state, "X", rng);
  zq::ZqVector c(std::vector<std::int64_t>(outcome.digits.begin(), outcome.digits.end()), keys.params.q);
  return decode(c, keys.sk);
}

zq::ZqVector delete_ciphertext(Ciphertext ct, Rng& rng) {
  const auto q = ct.vk.a.modulus();
  auto state = qsim::qft(std::move(ct.state), "X");
  auto outcome = qsim::measure(state, "X", rng);
  return zq::ZqVector(std::vector<std::int64_t>(outcome.digits.begin(), outcome.digits.end()), q);
}

bool verify(const VerificationKey& vk, const zq::ZqVector& pi, const Params& params) {
  if (pi.size() != vk.a.cols() || pi.modulus() != vk.a.modulus()) return false;
  return zq::isis_verify(vk.a, vk.y, pi, params.certificate_bound());
}

double decrypt_probability(const Keys& keys, const Ciphertext& ct, int bit) {
  const auto amps = ct.state.amplitudes();
  const auto q = keys.params.q;
  const auto len = keys.params.m + 1;
  double p = 0.0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double w = std::norm(amps[i]);
    if (w == 0.0) continue;
    if (decode(zq::ZqVector(zq::decode_index(i, q, len), q), keys.sk) == bit) p += w;
  }
  return p;
}

std::vector<double> certificate_distribution(const Ciphertext& ct) {
  return qsim::outcome_probabilities(qsim::qft(ct.state, "X"), "X");
}

double verify_probability(const Ciphertext& ct, const Params& params) {
  const auto dist = certificate_distribution(ct);
  const auto q = ct.vk.a.modulus();
  double p = 0.0;
  for (std::uint64_t i = 0; i < dist.size(); ++i)
    if (dist[i] > 0.0 && verify(ct.vk, zq::ZqVector(zq::decode_index(i, q, ct.vk.a.cols()), q), params)) p += dist[i];
  return p;
}

}  // namespace deletia::dualregev
