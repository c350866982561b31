#pragma once

#include "deletia/hash/family.hpp"
#include "deletia/hash/gf2k.hpp"

namespace deletia::hash {

/// t-wise independent hash: the first (most significant) n bits of a
/// degree-(t-1) polynomial over GF(2^k). Inversion is public.
class ChorGoldreichFunction final : public HashFunction {
 public:
  ChorGoldreichFunction(unsigned field_bits, unsigned out_bits, std::vector<std::uint32_t> coeffs);

  std::string family() const override { return "chor-goldreich"; }
  const Space& domain() const override { return domain_; }
  const Space& range() const override { return range_; }
  std::uint64_t eval(std::uint64_t x) const override;
  bool supports_inversion() const override { return true; }
  /// Ignores the trapdoor: enumerates the 2^{k-n} completions of y and
  /// root-finds each one.
  std::vector<std::uint64_t> invert(const Trapdoor& td, std::uint64_t y) const override;
  std::vector<std::uint64_t> preimages(std::uint64_t y) const;
  nlohmann::json describe() const override;

  const std::vector<std::uint32_t>& coefficients() const noexcept { return coeffs_; }

 private:
  GF2k field_;
  unsigned out_bits_;
  std::vector<std::uint32_t> coeffs_;
  Space domain_, range_;
};

class ChorGoldreichFamily final : public HashFamily {
 public:
  ChorGoldreichFamily(unsigned t, unsigned field_bits, unsigned out_bits);

  std::string name() const override { return "chor-goldreich"; }
  SampledHash sample(Rng& rng) const override;
  bool has_trapdoor() const override { return true; }
  nlohmann::json descriptor() const override;

  unsigned field_bits() const noexcept { return field_bits_; }
  unsigned out_bits() const noexcept { return out_bits_; }

 private:
  unsigned t_, field_bits_, out_bits_;
};

}  // namespace deletia::hash
