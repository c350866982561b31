#pragma once

#include "deletia/hash/family.hpp"

namespace deletia::hash {

/// h(x) = min(f(x), f(x) ^ delta) with M[h](x) = [f(x) > f(x) ^ delta].
/// Bit strings compare big-endian, which is plain numeric order here.
class FDeltaFunction final : public HashFunction {
 public:
  FDeltaFunction(HashPtr base, std::uint64_t delta);

  std::string family() const override { return "fdelta"; }
  const Space& domain() const override { return base_->domain(); }
  const Space& range() const override { return base_->range(); }
  bool in_domain(std::uint64_t x) const override { return base_->in_domain(x); }
  std::uint64_t eval(std::uint64_t x) const override;
  bool has_predicate() const override { return true; }
  unsigned predicate_bits() const override { return 1; }
  std::uint64_t predicate(std::uint64_t x) const override;
  bool supports_inversion() const override { return base_->supports_inversion(); }
  std::vector<std::uint64_t> invert(const Trapdoor& td, std::uint64_t y) const override;
  nlohmann::json describe() const override;

  std::uint64_t delta() const noexcept { return delta_; }
  const HashFunction& base() const noexcept { return *base_; }

 private:
  HashPtr base_;
  std::uint64_t delta_;
};

class FDeltaFamily final : public HashFamily {
 public:
  explicit FDeltaFamily(FamilyPtr base);

  std::string name() const override { return "fdelta"; }
  SampledHash sample(Rng& rng) const override;
  bool has_predicate() const override { return true; }
  bool has_trapdoor() const override { return base_->has_trapdoor(); }
  nlohmann::json descriptor() const override;

 private:
  FamilyPtr base_;
};

}  // namespace deletia::hash
