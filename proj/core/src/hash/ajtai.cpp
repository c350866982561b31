#include "deletia/hash/ajtai.hpp"

#include <cmath>

#include "deletia/error.hpp"
#include "deletia/gaussian.hpp"

namespace deletia::hash {

AjtaiFunction::AjtaiFunction(zq::ZqMatrix a, double norm_bound)
    : a_(std::move(a)),
      norm_bound_(norm_bound),
      domain_(Space::zq(a_.modulus(), a_.cols())),
      range_(Space::zq(a_.modulus(), a_.rows())) {
  zq::table_cells(a_.modulus(), a_.cols());
}

zq::ZqVector AjtaiFunction::vector_at(std::uint64_t x) const {
  return zq::ZqVector(zq::decode_index(x, a_.modulus(), a_.cols()), a_.modulus());
}

bool AjtaiFunction::in_domain(std::uint64_t x) const {
  if (x >= domain_.size()) return false;
  if (norm_bound_ <= 0.0) return true;
  return zq::norm_sq_within(vector_at(x).norm_sq(), norm_bound_);
}

std::uint64_t AjtaiFunction::eval(std::uint64_t x) const {
  const auto y = a_ * vector_at(x);
  return zq::encode_index(y.entries(), a_.modulus());
}

nlohmann::json AjtaiFunction::describe() const {
  return {{"family", "ajtai"}, {"matrix", zq::serialize(a_)}, {"norm_bound", norm_bound_}};
}

AjtaiFamily::AjtaiFamily(std::size_t n, std::size_t m, zq::Modulus q, double sigma)
    : n_(n), m_(m), q_(q), sigma_(sigma) {
  require(zq::is_prime(q), Errc::invalid_argument, "Ajtai modulus must be prime");
  require(n >= 1 && m >= 1 && sigma > 0.0, Errc::invalid_argument, "invalid Ajtai parameters");
  zq::table_cells(q, m);
}

SampledHash AjtaiFamily::sample(Rng& rng) const {
  auto a = zq::ZqMatrix::uniform(n_, m_, q_, rng);
  const double bound = sigma_ * std::sqrt(static_cast<double>(m_) / 2.0);
  return {std::make_shared<AjtaiFunction>(std::move(a), bound), std::nullopt};
}

nlohmann::json AjtaiFamily::descriptor() const {
  return {{"name", "ajtai"}, {"params", {{"n", n_}, {"m", m_}, {"q", q_}, {"sigma", sigma_}}}};
}

StructuredKey structured_ajtai_keygen(std::size_t n, std::size_t m, zq::Modulus q, Rng& rng) {
  require(m >= 2, Errc::invalid_argument, "structured key needs m >= 2");
  const auto a_bar = zq::ZqMatrix::uniform(n, m - 1, q, rng);
  std::vector<std::int64_t> bits(m - 1);
  for (auto& b : bits) b = rng.bit() ? 1 : 0;
  zq::ZqVector x_bar(bits, q);
  auto a = a_bar.hconcat(a_bar * x_bar);
  auto kernel = (-x_bar).concat(zq::ZqVector({1}, q));
  return {std::move(a), std::move(kernel), std::move(x_bar)};
}

}  // namespace deletia::hash
