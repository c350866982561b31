#pragma once

#include "deletia/hash/family.hpp"

namespace deletia::hash {

/// x -> outer(inner(x)). The trapdoor is the inner function's.
class ComposedFunction final : public HashFunction {
 public:
  ComposedFunction(HashPtr inner, HashPtr outer);

  std::string family() const override { return "composed"; }
  const Space& domain() const override { return inner_->domain(); }
  const Space& range() const override { return outer_->range(); }
  bool in_domain(std::uint64_t x) const override { return inner_->in_domain(x); }
  std::uint64_t eval(std::uint64_t x) const override { return outer_->eval(inner_->eval(x)); }
  bool supports_inversion() const override {
    return inner_->supports_inversion() && outer_->supports_inversion();
  }
  std::vector<std::uint64_t> invert(const Trapdoor& td, std::uint64_t y) const override;
  nlohmann::json describe() const override;

 private:
  HashPtr inner_, outer_;
};

/// Maps everything to one fixed value; used to exercise degenerate cases.
class ConstantFunction final : public HashFunction {
 public:
  ConstantFunction(std::size_t in_bits, std::size_t out_bits, std::uint64_t value);

  std::string family() const override { return "constant"; }
  const Space& domain() const override { return domain_; }
  const Space& range() const override { return range_; }
  std::uint64_t eval(std::uint64_t) const override { return value_; }
  bool supports_inversion() const override { return true; }
  std::vector<std::uint64_t> invert(const Trapdoor& td, std::uint64_t y) const override;
  nlohmann::json describe() const override;

 private:
  Space domain_, range_;
  std::uint64_t value_;
};

class ConstantFamily final : public HashFamily {
 public:
  ConstantFamily(std::size_t in_bits, std::size_t out_bits);

  std::string name() const override { return "constant"; }
  SampledHash sample(Rng& rng) const override;
  bool has_trapdoor() const override { return true; }
  nlohmann::json descriptor() const override;

 private:
  std::size_t in_bits_, out_bits_;
};

/// f'(x) = h(f(x)) for an almost-regular f and a universal h, as a family.
class ComposedFamily final : public HashFamily {
 public:
  ComposedFamily(FamilyPtr owf, FamilyPtr uhash);

  std::string name() const override { return "composed"; }
  SampledHash sample(Rng& rng) const override;
  bool has_trapdoor() const override { return owf_->has_trapdoor(); }
  nlohmann::json descriptor() const override;

 private:
  FamilyPtr owf_, uhash_;
};

FamilyPtr compose_balanced(FamilyPtr owf, FamilyPtr uhash);

}  // namespace deletia::hash
