#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace deletia::hash {

/// Arithmetic in GF(2^k), 1 <= k <= 16, modulo a fixed irreducible
/// polynomial (bit i = coefficient of X^i, leading bit included).
class GF2k {
 public:
  explicit GF2k(unsigned k);
  GF2k(unsigned k, std::uint32_t modulus);

  unsigned bits() const noexcept { return k_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return 1u << k_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  std::uint32_t inverse(std::uint32_t a) const;

  /// Horner evaluation of sum coeffs[i] x^i.
  std::uint32_t eval(std::span<const std::uint32_t> coeffs, std::uint32_t x) const noexcept;
  /// All x with poly(x) == target, by exhaustive evaluation.
  std::vector<std::uint32_t> roots(std::span<const std::uint32_t> coeffs, std::uint32_t target) const;

 private:
  unsigned k_;
  std::uint32_t modulus_;
};

/// Default irreducible polynomial for each k in [1, 16].
std::uint32_t default_irreducible(unsigned k);
/// Brute-force irreducibility check over GF(2) (degree <= 16).
bool is_irreducible(std::uint32_t poly);

}  // namespace deletia::hash
