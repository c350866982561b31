#include "deletia/hash/fdelta.hpp"

#include <algorithm>

#include "deletia/error.hpp"

namespace deletia::hash {

FDeltaFunction::FDeltaFunction(HashPtr base, std::uint64_t delta) : base_(std::move(base)), delta_(delta) {
  require(base_ != nullptr, Errc::invalid_argument, "fdelta needs a base function");
  require(base_->range().is_binary(), Errc::invalid_argument, "fdelta base must have a bit-string range");
  require(delta_ != 0 && delta_ < base_->range().size(), Errc::invalid_argument, "delta must be a nonzero string");
}

std::uint64_t FDeltaFunction::eval(std::uint64_t x) const {
  const auto z = base_->eval(x);
  return std::min(z, z ^ delta_);
}

std::uint64_t FDeltaFunction::predicate(std::uint64_t x) const {
  const auto z = base_->eval(x);
  return z > (z ^ delta_) ? 1 : 0;
}

std::vector<std::uint64_t> FDeltaFunction::invert(const Trapdoor& td, std::uint64_t y) const {
  auto out = base_->invert(td, y);
  const auto other = base_->invert(td, y ^ delta_);
  out.insert(out.end(), other.begin(), other.end());
  std::sort(out.begin(), out.end());
  // Only images that are the smaller member of their pair have preimages.
  if (y > (y ^ delta_)) out.clear();
  return out;
}

nlohmann::json FDeltaFunction::describe() const {
  return {{"family", "fdelta"}, {"delta", delta_}, {"base", base_->describe()}};
}

FDeltaFamily::FDeltaFamily(FamilyPtr base) : base_(std::move(base)) {
  require(base_ != nullptr, Errc::invalid_argument, "fdelta needs a base family");
}

SampledHash FDeltaFamily::sample(Rng& rng) const {
  auto inner = base_->sample(rng);
  const auto size = inner.h->range().size();
  require(size >= 2, Errc::invalid_argument, "fdelta base range must have at least one bit");
  const auto delta = 1 + rng.uniform(size - 1);
  return {std::make_shared<FDeltaFunction>(inner.h, delta), std::move(inner.trapdoor)};
}

nlohmann::json FDeltaFamily::descriptor() const {
  return {{"name", "fdelta"}, {"params", {{"base", base_->descriptor()}}}};
}

}  // namespace deletia::hash
