#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "deletia/error.hpp"
#include "deletia/gaussian.hpp"
#include "oracles.hpp"

using namespace deletia;

TEST(Gaussian, RhoMatchesFormula) {
  const zq::ZqVector x({1, 12}, 13);  // centered (1, -1)
  EXPECT_NEAR(zq::rho_sigma(x, 3.0), std::exp(-std::numbers::pi * 2 / 9), 1e-15);
  EXPECT_DOUBLE_EQ(zq::rho_sigma(zq::ZqVector::zeros(3, 13), 3.0), 1.0);
  EXPECT_NEAR(zq::rho_sigma(x, 3.0), oracle::rho({1, 12}, 13, 3.0), 1e-15);
}

TEST(Gaussian, IntervalsAtShippedParameters) {
  // sqrt(8*3) ~ 4.9 < 5.5 < 31/4.9 ~ 6.3
  EXPECT_TRUE(zq::GaussianParams(5.5, 31, 3).in_duality_interval());
  // sqrt(16) = 4 > 3: outside the duality window but inside the collapsing one.
  const zq::GaussianParams small(3.0, 13, 2);
  EXPECT_FALSE(small.in_duality_interval());
  EXPECT_TRUE(small.in_collapsing_interval());
  EXPECT_TRUE(small.warn());
  EXPECT_THROW(zq::GaussianParams(0.0, 13, 2), Error);
}

TEST(Gaussian, TruncatedPmfIsNormalizedAndCut) {
  const zq::GaussianParams p(2.0, 11, 2);
  const auto pmf = zq::truncated_gaussian_pmf(p);
  ASSERT_EQ(pmf.size(), 121u);
  double total = 0;
  for (std::uint64_t i = 0; i < pmf.size(); ++i) {
    total += pmf[i];
    const auto d = oracle::digits(i, 11, 2);
    const double n2 = std::pow(oracle::centered(d[0], 11), 2) + std::pow(oracle::centered(d[1], 11), 2);
    if (n2 > 8.0) EXPECT_EQ(pmf[i], 0.0);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  // Ratio between two in-ball cells follows rho.
  EXPECT_NEAR(pmf[zq::encode_index(std::vector<std::int64_t>{0, 1}, 11)] / pmf[0], oracle::rho({0, 1}, 11, 2.0), 1e-12);
}

TEST(Gaussian, TableGuard) {
  EXPECT_EQ(zq::table_cells(13, 3), 2197u);
  EXPECT_THROW(zq::table_cells(1073741789, 2), Error);
}

TEST(Gaussian, DiscreteSamplerMoments) {
  const zq::DiscreteGaussian1D g(4.0, 1073741789);
  double total = 0;
  for (std::int64_t x = -g.radius(); x <= g.radius(); ++x) total += g.probability(x);
  EXPECT_NEAR(total, 1.0, 1e-12);
  Rng rng(8);
  double second = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const auto c = static_cast<double>(zq::centered(g.sample(rng), 1073741789));
    ASSERT_LE(std::abs(c), static_cast<double>(g.radius()));
    second += c * c;
  }
  // Variance of D_{Z,s} is about s^2 / (2 pi).
  EXPECT_NEAR(second / n, 16.0 / (2 * std::numbers::pi), 0.15);
}
