#include "deletia/hash/compose.hpp"

#include <algorithm>

#include "deletia/error.hpp"

namespace deletia::hash {

ComposedFunction::ComposedFunction(HashPtr inner, HashPtr outer) : inner_(std::move(inner)), outer_(std::move(outer)) {
  require(inner_ && outer_, Errc::invalid_argument, "composition needs two functions");
  require(inner_->range() == outer_->domain(), Errc::dimension_mismatch, "inner range != outer domain");
  require(outer_->range().size() <= inner_->range().size(), Errc::dimension_mismatch,
          "outer range must not exceed inner range");
}

std::vector<std::uint64_t> ComposedFunction::invert(const Trapdoor& td, std::uint64_t y) const {
  std::vector<std::uint64_t> out;
  for (auto z : outer_->invert(Trapdoor{}, y)) {
    const auto part = inner_->invert(td, z);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json ComposedFunction::describe() const {
  return {{"family", "composed"}, {"inner", inner_->describe()}, {"outer", outer_->describe()}};
}

ConstantFunction::ConstantFunction(std::size_t in_bits, std::size_t out_bits, std::uint64_t value)
    : domain_(Space::bits(in_bits)), range_(Space::bits(out_bits)), value_(value) {
  require(value < range_.size(), Errc::invalid_argument, "constant outside the range");
}

std::vector<std::uint64_t> ConstantFunction::invert(const Trapdoor&, std::uint64_t y) const {
  std::vector<std::uint64_t> out;
  if (y == value_)
    for (std::uint64_t x = 0; x < domain_.size(); ++x) out.push_back(x);
  return out;
}

nlohmann::json ConstantFunction::describe() const { return {{"family", "constant"}, {"value", value_}}; }

ConstantFamily::ConstantFamily(std::size_t in_bits, std::size_t out_bits) : in_bits_(in_bits), out_bits_(out_bits) {}

SampledHash ConstantFamily::sample(Rng&) const {
  return {std::make_shared<ConstantFunction>(in_bits_, out_bits_, 0), Trapdoor{}};
}

nlohmann::json ConstantFamily::descriptor() const {
  return {{"name", "constant"}, {"params", {{"in_bits", in_bits_}, {"out_bits", out_bits_}}}};
}

ComposedFamily::ComposedFamily(FamilyPtr owf, FamilyPtr uhash) : owf_(std::move(owf)), uhash_(std::move(uhash)) {
  require(owf_ && uhash_, Errc::invalid_argument, "composition needs two families");
}

SampledHash ComposedFamily::sample(Rng& rng) const {
  auto f = owf_->sample(rng);
  auto u = uhash_->sample(rng);
  return {std::make_shared<ComposedFunction>(f.h, u.h), std::move(f.trapdoor)};
}

nlohmann::json ComposedFamily::descriptor() const {
  return {{"name", "composed"}, {"params", {{"owf", owf_->descriptor()}, {"uhash", uhash_->descriptor()}}}};
}

FamilyPtr compose_balanced(FamilyPtr owf, FamilyPtr uhash) {
  // Validate shapes eagerly with one throwaway sample.
  Rng probe(0);
  auto f = owf->sample(probe);
  auto u = uhash->sample(probe);
  ComposedFunction check(f.h, u.h);
  return std::make_shared<ComposedFamily>(std::move(owf), std::move(uhash));
}

}  // namespace deletia::hash
