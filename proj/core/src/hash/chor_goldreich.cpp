#include "deletia/hash/chor_goldreich.hpp"

#include <algorithm>

#include "deletia/error.hpp"

namespace deletia::hash {

ChorGoldreichFunction::ChorGoldreichFunction(unsigned field_bits, unsigned out_bits,
                                             std::vector<std::uint32_t> coeffs)
    : field_(field_bits),
      out_bits_(out_bits),
      coeffs_(std::move(coeffs)),
      domain_(Space::bits(field_bits)),
      range_(Space::bits(out_bits)) {
  require(out_bits >= 1 && out_bits <= field_bits, Errc::invalid_argument, "need 1 <= n <= k");
  require(!coeffs_.empty(), Errc::invalid_argument, "polynomial needs at least one coefficient");
  for (auto c : coeffs_) require(c < field_.size(), Errc::invalid_argument, "coefficient outside the field");
}

std::uint64_t ChorGoldreichFunction::eval(std::uint64_t x) const {
  return field_.eval(coeffs_, static_cast<std::uint32_t>(x)) >> (field_.bits() - out_bits_);
}

std::vector<std::uint64_t> ChorGoldreichFunction::preimages(std::uint64_t y) const {
  const unsigned free_bits = field_.bits() - out_bits_;
  std::vector<std::uint64_t> out;
  for (std::uint32_t low = 0; low < (1u << free_bits); ++low) {
    const auto target = static_cast<std::uint32_t>((y << free_bits) | low);
    for (auto r : field_.roots(coeffs_, target)) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> ChorGoldreichFunction::invert(const Trapdoor&, std::uint64_t y) const {
  return preimages(y);
}

nlohmann::json ChorGoldreichFunction::describe() const {
  return {{"family", "chor-goldreich"}, {"k", field_.bits()}, {"n", out_bits_}, {"coefficients", coeffs_}};
}

ChorGoldreichFamily::ChorGoldreichFamily(unsigned t, unsigned field_bits, unsigned out_bits)
    : t_(t), field_bits_(field_bits), out_bits_(out_bits) {
  require(t >= 1, Errc::invalid_argument, "universality degree must be positive");
  require(field_bits >= 1 && field_bits <= 16, Errc::invalid_argument, "field bits must lie in [1, 16]");
  require(out_bits >= 1 && out_bits <= field_bits, Errc::invalid_argument, "need 1 <= n <= k");
}

SampledHash ChorGoldreichFamily::sample(Rng& rng) const {
  std::vector<std::uint32_t> coeffs(t_);
  for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng.uniform(1u << field_bits_));
  return {std::make_shared<ChorGoldreichFunction>(field_bits_, out_bits_, std::move(coeffs)), Trapdoor{}};
}

nlohmann::json ChorGoldreichFamily::descriptor() const {
  return {{"name", "chor-goldreich"}, {"params", {{"t", t_}, {"k", field_bits_}, {"n", out_bits_}}}};
}

}  // namespace deletia::hash
