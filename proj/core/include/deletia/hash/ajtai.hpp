#pragma once

#include "deletia/hash/family.hpp"
#include "deletia/zq.hpp"

namespace deletia::hash {

/// h_A(x) = A x mod q over the ball ||x|| <= norm_bound (no bound if <= 0).
class AjtaiFunction final : public HashFunction {
 public:
  AjtaiFunction(zq::ZqMatrix a, double norm_bound);

  std::string family() const override { return "ajtai"; }
  const Space& domain() const override { return domain_; }
  const Space& range() const override { return range_; }
  bool in_domain(std::uint64_t x) const override;
  std::uint64_t eval(std::uint64_t x) const override;
  nlohmann::json describe() const override;

  const zq::ZqMatrix& matrix() const noexcept { return a_; }
  double norm_bound() const noexcept { return norm_bound_; }
  zq::ZqVector vector_at(std::uint64_t x) const;

 private:
  zq::ZqMatrix a_;
  double norm_bound_;
  Space domain_;
  Space range_;
};

class AjtaiFamily final : public HashFamily {
 public:
  /// Domain ball radius sigma*sqrt(m/2).
  AjtaiFamily(std::size_t n, std::size_t m, zq::Modulus q, double sigma);

  std::string name() const override { return "ajtai"; }
  SampledHash sample(Rng& rng) const override;
  nlohmann::json descriptor() const override;

 private:
  std::size_t n_, m_;
  zq::Modulus q_;
  double sigma_;
};

struct StructuredKey {
  zq::ZqMatrix a;      ///< [A_bar | A_bar * x_bar], n x m
  zq::ZqVector kernel;  ///< (-x_bar, 1), A * kernel == 0
  zq::ZqVector x_bar;   ///< binary, length m-1
};

StructuredKey structured_ajtai_keygen(std::size_t n, std::size_t m, zq::Modulus q, Rng& rng);

}  // namespace deletia::hash
