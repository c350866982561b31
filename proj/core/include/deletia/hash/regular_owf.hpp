#pragma once

#include "deletia/hash/family.hpp"

namespace deletia::hash {

/// f(x) = g(x >> r) for an injective table g: {0,1}^{m-r} -> {0,1}^l, so
/// every image has exactly 2^r preimages. The trapdoor is the table.
class ToyRegularOWF final : public HashFunction {
 public:
  ToyRegularOWF(std::size_t input_bits, std::size_t regularity, std::vector<std::uint64_t> table,
                std::size_t output_bits);

  std::string family() const override { return "toy-regular-owf"; }
  const Space& domain() const override { return domain_; }
  const Space& range() const override { return range_; }
  std::uint64_t eval(std::uint64_t x) const override { return table_.at(x >> regularity_); }
  bool supports_inversion() const override { return true; }
  std::vector<std::uint64_t> invert(const Trapdoor& td, std::uint64_t y) const override;
  nlohmann::json describe() const override;

  std::size_t regularity() const noexcept { return regularity_; }
  const std::vector<std::uint64_t>& table() const noexcept { return table_; }

 private:
  std::size_t input_bits_, regularity_, output_bits_;
  std::vector<std::uint64_t> table_;
  Space domain_, range_;
};

class ToyRegularOWFFamily final : public HashFamily {
 public:
  /// output_bits = 0 selects m - r (a permutation of the compressed input).
  ToyRegularOWFFamily(std::size_t input_bits, std::size_t regularity, std::size_t output_bits = 0);

  std::string name() const override { return "toy-regular-owf"; }
  SampledHash sample(Rng& rng) const override;
  bool has_trapdoor() const override { return true; }
  nlohmann::json descriptor() const override;

  std::size_t output_bits() const noexcept { return output_bits_; }

 private:
  std::size_t input_bits_, regularity_, output_bits_;
};

}  // namespace deletia::hash
