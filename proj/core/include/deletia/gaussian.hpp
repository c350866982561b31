#pragma once

#include <cstdint>
#include <vector>

#include "deletia/rng.hpp"
#include "deletia/zq.hpp"

namespace deletia::zq {

/// Guard on exhaustive tables over Z_q^m.
inline constexpr std::uint64_t kMaxTableCells = std::uint64_t{1} << 22;

/// exp(-pi ||centered(x)||^2 / sigma^2)
double rho_sigma(const ZqVector& x, double sigma);
double rho_sigma_norm_sq(std::uint64_t norm_sq, double sigma);

struct GaussianParams {
  double sigma;
  Modulus q;
  std::size_t m;

  GaussianParams(double sigma, Modulus q, std::size_t m);

  double alpha() const noexcept { return 1.0 / sigma; }
  /// sigma in (sqrt(8m), q/sqrt(8m)); outside it the coset/LWE duality is
  /// not guaranteed and callers should warn.
  bool in_duality_interval() const noexcept;
  /// sigma in (sqrt(2m), q/sqrt(2m)), the looser interval used for the
  /// Ajtai collapsing statement.
  bool in_collapsing_interval() const noexcept;
  bool warn() const noexcept { return !in_duality_interval(); }
};

/// Exact normalized table over Z_q^m indexed by encode_index. With
/// truncate=true cells with ||x|| > sigma*sqrt(m) get probability zero.
std::vector<double> truncated_gaussian_pmf(const GaussianParams& params, bool truncate = true);

/// Number of cells q^m, or throws enumeration-too-large past kMaxTableCells.
std::uint64_t table_cells(Modulus q, std::size_t m);

/// One-dimensional discrete Gaussian D_{Z_q, s} on centered
/// representatives, cut at |x| <= tail*s. Suitable for large q.
class DiscreteGaussian1D {
 public:
  DiscreteGaussian1D(double s, Modulus q, double tail = 12.0);

  /// Sample as a residue in [0, q).
  std::int64_t sample(Rng& rng) const;
  std::int64_t radius() const noexcept { return radius_; }
  double probability(std::int64_t centered_value) const;

 private:
  Modulus q_;
  std::int64_t radius_;
  std::vector<double> cdf_;  // over -radius..radius
};

}  // namespace deletia::zq
