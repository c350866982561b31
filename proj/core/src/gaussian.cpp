#include "deletia/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "deletia/error.hpp"

namespace deletia::zq {

double rho_sigma_norm_sq(std::uint64_t norm_sq, double sigma) {
  require(sigma > 0.0, Errc::invalid_argument, "sigma must be positive");
  return std::exp(-std::numbers::pi * static_cast<double>(norm_sq) / (sigma * sigma));
}

double rho_sigma(const ZqVector& x, double sigma) { return rho_sigma_norm_sq(x.norm_sq(), sigma); }

GaussianParams::GaussianParams(double sigma_, Modulus q_, std::size_t m_) : sigma(sigma_), q(q_), m(m_) {
  require(sigma > 0.0, Errc::invalid_argument, "sigma must be positive");
  require(q >= 2, Errc::invalid_argument, "modulus must be >= 2");
  require(m >= 1, Errc::invalid_argument, "dimension must be positive");
}

bool GaussianParams::in_duality_interval() const noexcept {
  const double w = std::sqrt(8.0 * static_cast<double>(m));
  return sigma > w && sigma < static_cast<double>(q) / w;
}

bool GaussianParams::in_collapsing_interval() const noexcept {
  const double w = std::sqrt(2.0 * static_cast<double>(m));
  return sigma > w && sigma < static_cast<double>(q) / w;
}

std::uint64_t table_cells(Modulus q, std::size_t m) {
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < m; ++i) {
    cells *= static_cast<std::uint64_t>(q);
    require(cells <= kMaxTableCells, Errc::enumeration_too_large, "q^m exceeds the enumeration guard");
  }
  return cells;
}

std::vector<double> truncated_gaussian_pmf(const GaussianParams& params, bool truncate) {
  const auto cells = table_cells(params.q, params.m);
  const double radius = params.sigma * std::sqrt(static_cast<double>(params.m));
  std::vector<double> pmf(cells, 0.0);
  std::vector<std::int64_t> digits(params.m, 0);
  double total = 0.0;
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    std::uint64_t norm_sq = 0;
    for (auto d : digits) {
      const auto c = centered(d, params.q);
      norm_sq += static_cast<std::uint64_t>(c * c);
    }
    if (!truncate || norm_sq_within(norm_sq, radius)) {
      pmf[idx] = rho_sigma_norm_sq(norm_sq, params.sigma);
      total += pmf[idx];
    }
    for (std::size_t i = params.m; i-- > 0;) {
      if (++digits[i] < params.q) break;
      digits[i] = 0;
    }
  }
  for (auto& p : pmf) p /= total;
  return pmf;
}

DiscreteGaussian1D::DiscreteGaussian1D(double s, Modulus q, double tail) : q_(q) {
  require(s > 0.0 && tail > 0.0, Errc::invalid_argument, "Gaussian width and tail must be positive");
  const auto half = (q - 1) / 2;
  radius_ = std::min<std::int64_t>(half, static_cast<std::int64_t>(std::floor(tail * s)));
  require(radius_ <= (std::int64_t{1} << 24), Errc::enumeration_too_large, "Gaussian support too wide to tabulate");
  cdf_.resize(static_cast<std::size_t>(2 * radius_ + 1));
  double acc = 0.0;
  for (std::int64_t x = -radius_; x <= radius_; ++x) {
    acc += std::exp(-std::numbers::pi * static_cast<double>(x * x) / (s * s));
    cdf_[static_cast<std::size_t>(x + radius_)] = acc;
  }
  for (auto& c : cdf_) c /= acc;
}

std::int64_t DiscreteGaussian1D::sample(Rng& rng) const {
  const double u = rng.uniform_real();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto pos = static_cast<std::int64_t>(std::min<std::ptrdiff_t>(it - cdf_.begin(), cdf_.size() - 1));
  return reduce(pos - radius_, q_);
}

double DiscreteGaussian1D::probability(std::int64_t value) const {
  if (value < -radius_ || value > radius_) return 0.0;
  const auto i = static_cast<std::size_t>(value + radius_);
  return i == 0 ? cdf_[0] : cdf_[i] - cdf_[i - 1];
}

}  // namespace deletia::zq
