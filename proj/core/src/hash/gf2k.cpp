#include "deletia/hash/gf2k.hpp"

#include <array>
#include <bit>

#include "deletia/error.hpp"

namespace deletia::hash {

std::uint32_t default_irreducible(unsigned k) {
  static constexpr std::array<std::uint32_t, 17> kTable = {
      0,     0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,    0x11D,
      0x211, 0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
  };
  require(k >= 1 && k <= 16, Errc::invalid_argument, "field bits must lie in [1, 16]");
  return kTable[k];
}

namespace {

int degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const int d = degree(poly);
  if (d < 1) return false;
  for (std::uint32_t f = 2; degree(f) <= d / 2; ++f)
    if (poly_mod(poly, f) == 0) return false;
  return true;
}

GF2k::GF2k(unsigned k) : GF2k(k, default_irreducible(k)) {}

GF2k::GF2k(unsigned k, std::uint32_t modulus) : k_(k), modulus_(modulus) {
  require(k >= 1 && k <= 16, Errc::invalid_argument, "field bits must lie in [1, 16]");
  require(degree(modulus) == static_cast<int>(k), Errc::invalid_argument, "modulus degree != k");
}

std::uint32_t GF2k::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << k_)) a ^= modulus_;
  }
  return r;
}

std::uint32_t GF2k::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t GF2k::inverse(std::uint32_t a) const {
  require(a != 0, Errc::invalid_argument, "zero has no inverse");
  return pow(a, size() - 2);
}

std::uint32_t GF2k::eval(std::span<const std::uint32_t> coeffs, std::uint32_t x) const noexcept {
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = mul(acc, x) ^ coeffs[i];
  return acc;
}

std::vector<std::uint32_t> GF2k::roots(std::span<const std::uint32_t> coeffs, std::uint32_t target) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < size(); ++x)
    if (eval(coeffs, x) == target) out.push_back(x);
  return out;
}

}  // namespace deletia::hash
